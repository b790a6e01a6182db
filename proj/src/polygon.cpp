#include "berkdisc/polygon.hpp"

#include "berkdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace berkdisc {

namespace {

Rat intersect(const NewtonPolygon::Piece& a, const NewtonPolygon::Piece& b) {
    /* a.b + a.slope*x = b.b + b.slope*x */
    return (b.b - a.b) / (a.slope - b.slope);
}

} // namespace

NewtonPolygon NewtonPolygon::from_lines(Domain domain, const std::vector<Line>& lines) {
    /* Classical duality: the envelope min_i(v_i + i*lambda) is read off the
       lower convex hull of the points (slope_i, v_i). Hull vertices are the
       active lines; the negated edge slopes are the breakpoints. Exact
       rational arithmetic throughout, so no degeneracy handling is needed:
       collinear points are dropped, which is precisely the normalization
       that makes structural equality function equality. */
    std::map<Rat, Rat> best; // slope -> minimal intercept
    for (const Line& l : lines) {
        if (!l.intercept.is_finite()) continue;
        auto it = best.find(l.slope);
        if (it == best.end() || l.intercept.value < it->second)
            best[l.slope] = l.intercept.value;
    }
    if (best.empty()) fail("EmptyInput", "no finite lines to build an envelope from");

    /* Points (x, y) = (slope, intercept), x ascending; monotone-chain lower
       hull, popping on non-strict turns. */
    std::vector<std::pair<Rat, Rat>> hull;
    for (const auto& [x, y] : best) {
        while (hull.size() >= 2) {
            const auto& A = hull[hull.size() - 2];
            const auto& B = hull[hull.size() - 1];
            /* Pop B unless it lies strictly below segment A-(x,y). */
            if ((B.second - A.second) * (x - A.first) >= (y - A.second) * (B.first - A.first))
                hull.pop_back();
            else
                break;
        }
        hull.emplace_back(x, y);
    }

    /* Activity order along increasing lambda is decreasing slope. */
    std::vector<Piece> pieces;
    pieces.reserve(hull.size());
    for (auto it = hull.rbegin(); it != hull.rend(); ++it)
        pieces.push_back({it->second, it->first});

    /* Pieces whose activity interval ends at lambda <= 0 never matter on the
       nonneg/positive domains; both pieces agree at the break, so dropping
       them leaves the function on the domain untouched. */
    if (domain != Domain::real) {
        size_t k = 0;
        while (k + 1 < pieces.size() && intersect(pieces[k], pieces[k + 1]) <= 0) ++k;
        pieces.erase(pieces.begin(), pieces.begin() + static_cast<long>(k));
    }

    NewtonPolygon P;
    P.domain_ = domain;
    P.pieces_ = std::move(pieces);
    return P;
}

NewtonPolygon NewtonPolygon::from_pieces(Domain domain, std::vector<Piece> pieces) {
    if (pieces.empty()) fail("EmptyInput", "no pieces");
    for (size_t k = 0; k + 1 < pieces.size(); ++k) {
        const bool increasing = pieces[1].slope > pieces[0].slope;
        if (pieces[k].slope == pieces[k + 1].slope ||
            (pieces[k + 1].slope > pieces[k].slope) != increasing)
            fail("InvariantViolation", "piece slopes must be strictly monotone");
        Rat x = intersect(pieces[k], pieces[k + 1]);
        if (k > 0 && x <= intersect(pieces[k - 1], pieces[k]))
            fail("InvariantViolation", "piece breaks must be strictly increasing");
        if (domain != Domain::real && x <= 0)
            fail("InvariantViolation", "piece break off the domain");
    }
    NewtonPolygon P;
    P.domain_ = domain;
    P.pieces_ = std::move(pieces);
    return P;
}

std::vector<Rat> NewtonPolygon::breaks() const {
    std::vector<Rat> out;
    for (size_t k = 0; k + 1 < pieces_.size(); ++k)
        out.push_back(intersect(pieces_[k], pieces_[k + 1]));
    return out;
}

std::vector<Vertex> NewtonPolygon::vertices() const {
    std::vector<Vertex> out;
    for (size_t k = 0; k + 1 < pieces_.size(); ++k) {
        Rat x = intersect(pieces_[k], pieces_[k + 1]);
        out.push_back({x, pieces_[k].b + pieces_[k].slope * x});
    }
    return out;
}

void NewtonPolygon::check_domain(const Rat& lambda) const {
    if (domain_ == Domain::nonneg && lambda < 0)
        fail("OutOfDomain", "lambda must be >= 0, got " + rat_str(lambda));
    if (domain_ == Domain::positive && lambda <= 0)
        fail("OutOfDomain", "lambda must be > 0, got " + rat_str(lambda));
}

size_t NewtonPolygon::piece_index(const Rat& lambda, bool right_side) const {
    size_t idx = 0;
    for (size_t k = 0; k + 1 < pieces_.size(); ++k) {
        Rat x = intersect(pieces_[k], pieces_[k + 1]);
        if (x < lambda || (right_side && x == lambda)) idx = k + 1;
    }
    return idx;
}

Rat NewtonPolygon::eval(const Rat& lambda) const {
    check_domain(lambda);
    const Piece& p = pieces_[piece_index(lambda, true)];
    return p.b + p.slope * lambda;
}

Rat NewtonPolygon::slope_left(const Rat& lambda) const {
    check_domain(lambda);
    return pieces_[piece_index(lambda, false)].slope;
}

Rat NewtonPolygon::slope_right(const Rat& lambda) const {
    check_domain(lambda);
    return pieces_[piece_index(lambda, true)].slope;
}

long NewtonPolygon::root_count_at(const Rat& lambda) const {
    Rat diff = slope_left(lambda) - slope_right(lambda);
    if (rat_den(diff) != 1)
        fail("InvariantViolation", "root count is only defined for integer slope drops");
    return static_cast<long>(rat_num(diff));
}

bool NewtonPolygon::equals(const NewtonPolygon& o) const {
    if (domain_ != o.domain_ || pieces_.size() != o.pieces_.size()) return false;
    for (size_t k = 0; k < pieces_.size(); ++k)
        if (pieces_[k].b != o.pieces_[k].b || pieces_[k].slope != o.pieces_[k].slope)
            return false;
    return true;
}

NewtonPolygon NewtonPolygon::invert() const {
    for (const Piece& p : pieces_)
        if (!(p.slope > 0))
            fail("NotInvertible", "invert needs a strictly increasing function "
                                  "(every slope > 0)");
    if (domain_ != Domain::real && pieces_.front().b != 0)
        fail("NotInvertible",
             "invert on this domain needs value 0 at lambda 0 so the image is the domain");
    /* mu = b + s*lambda  <=>  lambda = -b/s + (1/s)*mu; activity order is
       preserved because the function is strictly increasing. */
    std::vector<Piece> inv;
    inv.reserve(pieces_.size());
    for (const Piece& p : pieces_) inv.push_back({-p.b / p.slope, Rat(1) / p.slope});
    NewtonPolygon P;
    P.domain_ = domain_;
    P.pieces_ = std::move(inv);
    return P;
}

} // namespace berkdisc
