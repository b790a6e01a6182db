#ifndef BERKDISC_IO_HPP
#define BERKDISC_IO_HPP

#include "berkdisc/fiber.hpp"
#include "berkdisc/polygon.hpp"

#include <string>
#include <vector>

// Single-header vendored JSON library; only io, the CLI and their tests pull
// this in, the math modules never do.
#include "json.hpp"

namespace berkdisc {

using json = nlohmann::json;

/* Wire format, used both for fixture input and report output.

   element:  [["num/den", pi_exponent], ...], zero coefficients omitted,
             exponents ascending; [] is zero. Exponents >= N fold with
             pi^N = p on parse.
   fixture:  {"p": 3, "ram": 2,
              "morphism": {"coeffs": [element, ...]},          ascending
              "fibers": [{"center": element, "roots": [element, ...]}, ...]}
*/
struct Fixture {
    FieldParams params;
    Poly morphism;
    std::vector<FiberData> raw_fibers; // parsed, not yet validated
};

FieldElement parse_element(const FieldParams& params, const json& j);
json element_json(const FieldElement& x);

Poly parse_poly(const FieldParams& params, const json& j);
json poly_json(const Poly& f);

Fixture parse_fixture(const json& j);
Fixture load_fixture(const std::string& path);

json polygon_json(const NewtonPolygon& P);

/* Exact rational lambda plus a 6-place decimal approximation of the radius
   p^(-lambda), computed by integer root extraction: display only. */
std::string radius_decimal(long p, const Rat& lambda);

/* Fixed 57x15 character plot on an integer grid derived from exact
   rationals, followed by an exact segment/break legend. Byte-stable. */
std::string render_ascii(const NewtonPolygon& P);

/* Self-contained SVG with the polyline through the vertices and exact labels.
   Coordinates are 4-place decimal strings from integer arithmetic. */
std::string render_svg(const NewtonPolygon& P);

} // namespace berkdisc

#endif
