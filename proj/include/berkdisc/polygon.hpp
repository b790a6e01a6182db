#ifndef BERKDISC_POLYGON_HPP
#define BERKDISC_POLYGON_HPP

#include "berkdisc/rational.hpp"
#include "berkdisc/valuation.hpp"

#include <vector>

namespace berkdisc {

/* Domain of the lambda variable. Valuation polygons of full polynomials live
   on all of R; polygons attached to points of the open disc live on
   lambda > 0; a closed-disc variant uses lambda >= 0. */
enum class Domain { real, nonneg, positive };

/* Input line value(lambda) = intercept + slope * lambda. An infinite
   intercept (valuation of a zero coefficient) is allowed here and simply
   never participates in the envelope. */
struct Line {
    Valuation intercept;
    Rat slope;
};

struct Vertex {
    Rat lambda;
    Rat value;
};

/* Piecewise-affine continuous function stored as pieces in activity order:
   pieces[k] is the affine map b_k + s_k * lambda on the interval between
   break k-1 and break k (first and last pieces unbounded on their side).
   Envelopes built by from_lines are concave, so slopes strictly decrease;
   invert() returns the convex inverse in the same representation with
   increasing slopes. Breaks are recovered as intersections of consecutive
   pieces and every piece has an activity interval with nonempty interior
   inside the domain, which makes structural equality function equality. */
class NewtonPolygon {
public:
    struct Piece {
        Rat b;     // intercept
        Rat slope;
    };

    /* Lower envelope min(intercept_i + slope_i * lambda). Lines with infinite
       intercept are dropped; EmptyInput if none is finite. On the nonneg and
       positive domains, pieces whose activity ends at lambda <= 0 are clipped
       away (they never matter for the function on the domain). */
    static NewtonPolygon from_lines(Domain domain, const std::vector<Line>& lines);

    /* Pieces given directly in activity order with strictly monotone slopes
       and consistent breaks; used by invert() and count-function inversion. */
    static NewtonPolygon from_pieces(Domain domain, std::vector<Piece> pieces);

    Domain domain() const { return domain_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /* Breakpoints, lambda ascending; empty for a single piece. */
    std::vector<Rat> breaks() const;
    std::vector<Vertex> vertices() const;

    Rat slope_before_first_break() const { return pieces_.front().slope; }
    Rat slope_after_last_break() const { return pieces_.back().slope; }

    Rat eval(const Rat& lambda) const;        // OutOfDomain off the domain
    Rat slope_left(const Rat& lambda) const;  // left derivative
    Rat slope_right(const Rat& lambda) const; // right derivative

    /* slope_left - slope_right: for a concave envelope this is the number of
       roots with valuation exactly lambda, zero away from breaks. */
    long root_count_at(const Rat& lambda) const;

    /* Exact structural equality: same domain, same pieces. By normalization
       this is equality as functions on the domain. */
    bool equals(const NewtonPolygon& o) const;

    /* Inverse function. Requires a strictly increasing function (every slope
       > 0; profiles qualify with slopes >= 1, and so do their inverses) and,
       on the nonneg/positive domains, value 0 at lambda 0 so the image is the
       domain again. NotInvertible otherwise. Inverting twice returns the
       original envelope. */
    NewtonPolygon invert() const;

private:
    Domain domain_ = Domain::real;
    std::vector<Piece> pieces_;

    /* Index of the piece active at lambda; ties at a break resolve to the
       right piece when right_side, else the left. */
    size_t piece_index(const Rat& lambda, bool right_side) const;
    void check_domain(const Rat& lambda) const;
};

} // namespace berkdisc

#endif
