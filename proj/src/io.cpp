#include "berkdisc/io.hpp"

#include "berkdisc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace berkdisc {

FieldElement parse_element(const FieldParams& params, const json& j) {
    if (!j.is_array())
        fail("UsageError", "element must be an array of [\"num/den\", exponent] pairs");
    FieldElement out(params);
    for (const json& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
            !term[1].is_number_integer())
            fail("UsageError", "element term must be [\"num/den\", exponent]");
        Rat c;
        try {
            c = rat_parse(term[0].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail("UsageError", std::string("bad rational: ") + e.what());
        }
        out = out + FieldElement::pi_power(params, term[1].get<long>(), c);
    }
    return out;
}

json element_json(const FieldElement& x) {
    json out = json::array();
    for (long e = 0; e < x.params().N; ++e)
        if (x.coeff(e) != 0) out.push_back(json::array({rat_str(x.coeff(e)), e}));
    return out;
}

Poly parse_poly(const FieldParams& params, const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs"))
            fail("UsageError", "morphism object needs a \"coeffs\" array");
        arr = &j.at("coeffs");
    }
    if (!arr->is_array()) fail("UsageError", "polynomial coefficients must be an array");
    std::vector<FieldElement> coeffs;
    for (const json& c : *arr) coeffs.push_back(parse_element(params, c));
    return Poly(params, std::move(coeffs));
}

json poly_json(const Poly& f) {
    json coeffs = json::array();
    for (long i = 0; i <= f.degree(); ++i) coeffs.push_back(element_json(f.coeff(i)));
    return json{{"coeffs", coeffs}};
}

Fixture parse_fixture(const json& j) {
    try {
        if (!j.is_object() || !j.contains("p") || !j.contains("ram") ||
            !j.contains("morphism"))
            fail("UsageError", "fixture needs \"p\", \"ram\" and \"morphism\"");
        FieldParams params(j.at("p").get<long>(), j.at("ram").get<long>());
        Fixture fx;
        fx.params = params;
        fx.morphism = parse_poly(params, j.at("morphism"));
        if (j.contains("fibers")) {
            if (!j.at("fibers").is_array()) fail("UsageError", "\"fibers\" must be an array");
            for (const json& fib : j.at("fibers")) {
                if (!fib.is_object() || !fib.contains("center") || !fib.contains("roots"))
                    fail("UsageError", "fiber needs \"center\" and \"roots\"");
                FiberData data;
                data.target = parse_element(params, fib.at("center"));
                for (const json& r : fib.at("roots"))
                    data.roots.push_back(parse_element(params, r));
                fx.raw_fibers.push_back(std::move(data));
            }
        }
        return fx;
    } catch (const json::exception& e) {
        fail("UsageError", std::string("malformed fixture: ") + e.what());
    }
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UsageError", "cannot open fixture file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail("UsageError", std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_fixture(j);
}

json polygon_json(const NewtonPolygon& P) {
    const char* dom = P.domain() == Domain::real      ? "real"
                      : P.domain() == Domain::nonneg ? "nonneg"
                                                      : "positive";
    json pieces = json::array();
    for (const auto& p : P.pieces())
        pieces.push_back(json{{"intercept", rat_str(p.b)}, {"slope", rat_str(p.slope)}});
    json breaks = json::array();
    for (const Rat& b : P.breaks()) breaks.push_back(rat_str(b));
    json verts = json::array();
    for (const Vertex& v : P.vertices())
        verts.push_back(json{{"lambda", rat_str(v.lambda)}, {"value", rat_str(v.value)}});
    return json{{"domain", dom},
                {"pieces", pieces},
                {"breaks", breaks},
                {"vertices", verts},
                {"slope_first", rat_str(P.slope_before_first_break())},
                {"slope_last", rat_str(P.slope_after_last_break())}};
}

std::string radius_decimal(long p, const Rat& lambda) {
    /* floor(10^6 * p^(-a/b)) by exact integer search: the largest k with
       k^b * p^max(a,0) <= 10^(6b) * p^max(-a,0). */
    Int a = rat_num(lambda);
    Int b = rat_den(lambda);
    Int num = 1;
    for (Int i = 0; i < 6 * b; ++i) num *= 10;
    Int den = 1;
    Int apos = a > 0 ? a : Int(0);
    Int aneg = a < 0 ? -a : Int(0);
    for (Int i = 0; i < apos; ++i) den *= p;
    for (Int i = 0; i < aneg; ++i) num *= p;

    auto fits = [&](const Int& k) {
        Int pw = 1;
        for (Int i = 0; i < b; ++i) pw *= k;
        return pw * den <= num;
    };
    Int lo = 0, hi = 1;
    while (fits(hi)) hi <<= 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (fits(mid)) lo = mid;
        else hi = mid;
    }

    std::string digits = lo.str();
    if (digits.size() < 7) digits.insert(digits.begin(), 7 - digits.size(), '0');
    return digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

namespace {

/* Evaluation that extends the polygon function to all of R by its end
   pieces; display helpers may sample at the domain boundary. */
Rat eval_extended(const NewtonPolygon& P, const Rat& x) {
    const auto& pieces = P.pieces();
    std::vector<Rat> brs = P.breaks();
    size_t idx = 0;
    while (idx < brs.size() && brs[idx] <= x) ++idx;
    return pieces[idx].b + pieces[idx].slope * x;
}

long round_to_long(const Rat& x) {
    return static_cast<long>(rat_floor(x + Rat(1, 2)));
}

} // namespace

std::string render_ascii(const NewtonPolygon& P) {
    constexpr long W = 57, H = 15;
    std::vector<Rat> brs = P.breaks();

    Rat lo(0), hi(1);
    if (!brs.empty()) {
        hi = brs.back() * Rat(3, 2);
        if (hi < 1) hi = 1;
        if (brs.front() < 0) lo = brs.front() * Rat(3, 2);
    }

    Rat vmin = eval_extended(P, lo), vmax = vmin;
    auto stretch = [&](const Rat& v) {
        if (v < vmin) vmin = v;
        if (v > vmax) vmax = v;
    };
    stretch(eval_extended(P, hi));
    for (const Vertex& v : P.vertices()) stretch(v.value);
    if (vmin == vmax) vmax = vmin + 1;

    std::vector<std::string> grid(H, std::string(W, ' '));
    for (long c = 0; c < W; ++c) {
        Rat x = lo + (hi - lo) * Rat(c, W - 1);
        Rat y = eval_extended(P, x);
        long r = round_to_long(Rat(H - 1) * (vmax - y) / (vmax - vmin));
        r = std::clamp(r, 0L, H - 1);
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = '*';
    }
    for (const Vertex& v : P.vertices()) {
        if (v.lambda < lo || v.lambda > hi) continue;
        long c = round_to_long(Rat(W - 1) * (v.lambda - lo) / (hi - lo));
        long r = round_to_long(Rat(H - 1) * (vmax - v.value) / (vmax - vmin));
        c = std::clamp(c, 0L, W - 1);
        r = std::clamp(r, 0L, H - 1);
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 'o';
    }

    std::ostringstream os;
    os << "lambda in [" << rat_str(lo) << ", " << rat_str(hi) << "], value in ["
       << rat_str(vmin) << ", " << rat_str(vmax) << "]\n";
    for (const std::string& row : grid) os << "|" << row << "|\n";

    const auto& pieces = P.pieces();
    for (size_t k = 0; k < pieces.size(); ++k) {
        os << "segment " << k << ": value = " << rat_str(pieces[k].b) << " + "
           << rat_str(pieces[k].slope) << "*lambda";
        if (k > 0) os << ", from lambda = " << rat_str(brs[k - 1]);
        if (k < brs.size()) os << ", to lambda = " << rat_str(brs[k]);
        os << "\n";
    }
    for (const Vertex& v : P.vertices())
        os << "break at lambda = " << rat_str(v.lambda) << ", value = "
           << rat_str(v.value) << "\n";
    return os.str();
}

std::string render_svg(const NewtonPolygon& P) {
    std::vector<Rat> brs = P.breaks();
    Rat lo(0), hi(1);
    if (!brs.empty()) {
        hi = brs.back() * Rat(3, 2);
        if (hi < 1) hi = 1;
        if (brs.front() < 0) lo = brs.front() * Rat(3, 2);
    }
    Rat vmin = eval_extended(P, lo), vmax = vmin;
    auto stretch = [&](const Rat& v) {
        if (v < vmin) vmin = v;
        if (v > vmax) vmax = v;
    };
    stretch(eval_extended(P, hi));
    for (const Vertex& v : P.vertices()) stretch(v.value);
    if (vmin == vmax) vmax = vmin + 1;

    auto sx = [&](const Rat& x) {
        return decimal_string(Rat(60) + (x - lo) / (hi - lo) * Rat(520), 4);
    };
    auto sy = [&](const Rat& y) {
        return decimal_string(Rat(330) - (y - vmin) / (vmax - vmin) * Rat(300), 4);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" "
          "viewBox=\"0 0 640 360\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"360\" fill=\"white\"/>\n";
    os << "  <line x1=\"60\" y1=\"330\" x2=\"580\" y2=\"330\" stroke=\"black\"/>\n";
    os << "  <line x1=\"60\" y1=\"30\" x2=\"60\" y2=\"330\" stroke=\"black\"/>\n";

    os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    os << sx(lo) << "," << sy(eval_extended(P, lo));
    for (const Vertex& v : P.vertices())
        if (v.lambda >= lo && v.lambda <= hi)
            os << " " << sx(v.lambda) << "," << sy(v.value);
    os << " " << sx(hi) << "," << sy(eval_extended(P, hi));
    os << "\"/>\n";

    for (const Vertex& v : P.vertices()) {
        if (v.lambda < lo || v.lambda > hi) continue;
        os << "  <circle cx=\"" << sx(v.lambda) << "\" cy=\"" << sy(v.value)
           << "\" r=\"4\" fill=\"firebrick\"/>\n";
        os << "  <text x=\"" << sx(v.lambda) << "\" y=\"" << sy(v.value)
           << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">(" << rat_str(v.lambda) << ", "
           << rat_str(v.value) << ")</text>\n";
    }
    os << "  <text x=\"60\" y=\"20\" font-size=\"13\">lambda in [" << rat_str(lo)
       << ", " << rat_str(hi) << "], value in [" << rat_str(vmin) << ", "
       << rat_str(vmax) << "]</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace berkdisc
