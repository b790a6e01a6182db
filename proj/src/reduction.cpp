#include "berkdisc/reduction.hpp"

#include "berkdisc/errors.hpp"

#include <sstream>

namespace berkdisc {

namespace {

void fp_trim(FpPoly& f) {
    while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

} // namespace

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs[i];
            continue;
        }
        if (coeffs[i] != 1) os << coeffs[i] << "*";
        os << "T";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

FpPoly fp_derivative(const FpPoly& f) {
    FpPoly out;
    out.p = f.p;
    for (long i = 1; i <= f.degree(); ++i)
        out.coeffs.push_back((i % f.p) * f.coeff(i) % f.p);
    fp_trim(out);
    return out;
}

FpPoly reduce_at_gauss(const Poly& f) {
    FpPoly out;
    out.p = f.params().p;
    if (f.is_zero()) return out;
    for (long i = 0; i <= f.degree(); ++i) {
        Valuation v = valuation(f.coeff(i));
        if (v.is_finite() && v.value < 0)
            fail("NotIntegral", "coefficient of T^" + std::to_string(i) +
                                    " has negative valuation " + val_str(v));
    }
    if (residue(f.coeff(f.degree())) == 0)
        fail("DegreeDrop", "leading coefficient is not a unit, the reduction "
                           "has smaller degree");
    for (long i = 0; i <= f.degree(); ++i) out.coeffs.push_back(residue(f.coeff(i)));
    return out;
}

SepSplit insep_sep_split(const FpPoly& ft) {
    if (ft.degree() < 1)
        fail("ConstantInput", "inseparable/separable split needs degree >= 1");
    SepSplit out;
    out.g = ft;
    for (;;) {
        bool divisible = true;
        for (size_t i = 0; i < out.g.coeffs.size(); ++i)
            if (out.g.coeffs[i] != 0 && i % static_cast<size_t>(ft.p) != 0) {
                divisible = false;
                break;
            }
        if (!divisible) break;
        FpPoly h;
        h.p = ft.p;
        h.coeffs.assign(out.g.coeffs.size() / static_cast<size_t>(ft.p) + 1, 0);
        for (size_t i = 0; i < out.g.coeffs.size(); i += static_cast<size_t>(ft.p))
            h.coeffs[i / static_cast<size_t>(ft.p)] = out.g.coeffs[i];
        fp_trim(h);
        out.g = h;
        ++out.r;
    }
    return out;
}

const char* residual_class_name(ResidualClass c) {
    switch (c) {
        case ResidualClass::radicial: return "radicial";
        case ResidualClass::separable: return "separable";
        case ResidualClass::etale: return "etale";
        case ResidualClass::mixed: return "mixed";
    }
    return "mixed";
}

ResidualReport classify(const FpPoly& ft) {
    ResidualReport rep;
    rep.f_tilde = ft;
    SepSplit split = insep_sep_split(ft);
    rep.r = split.r;
    rep.g = split.g;
    rep.sep_degree = split.g.degree();
    rep.insep_degree = 1;
    for (int k = 0; k < split.r; ++k) rep.insep_degree *= ft.p;
    FpPoly gp = fp_derivative(split.g);
    rep.uniformly_ramified = (gp.degree() == 0);

    const bool separable = (rep.insep_degree == 1);
    const bool radicial = (rep.sep_degree == 1);
    if (separable && rep.uniformly_ramified)
        rep.cls = ResidualClass::etale;
    else if (separable)
        rep.cls = ResidualClass::separable;
    else if (radicial)
        rep.cls = ResidualClass::radicial;
    else
        rep.cls = ResidualClass::mixed;
    return rep;
}

ResidualReport residual_analysis(const Poly& f) { return classify(reduce_at_gauss(f)); }

} // namespace berkdisc
