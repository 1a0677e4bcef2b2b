#include "dvkit/printer.hpp"

#include "dvkit/orders.hpp"

#include <algorithm>

namespace dvkit {

namespace {

struct PrintedTerm {
    bool neg;
    std::string text;
};

std::string join_terms(const std::vector<PrintedTerm> &terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].neg) out += "-";
        } else {
            out += terms[i].neg ? " - " : " + ";
        }
        out += terms[i].text;
    }
    return out;
}

std::string monomial_str(const Exponents &e, const std::vector<std::string> &names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::vector<std::pair<Exponents, Rational>> sorted_terms(const ParamPoly &p) {
    std::vector<std::pair<Exponents, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto &a, const auto &b) { return grevlex_cmp(a.first, b.first) > 0; });
    return ts;
}

/// Sign of the grevlex-leading rational coefficient; 0 for the zero poly.
int leading_sign(const ParamPoly &p) {
    if (p.is_zero()) return 0;
    auto ts = sorted_terms(p);
    return ts.front().second.sign();
}

std::string param_poly_str(const ParamPoly &p, const std::vector<std::string> &names) {
    std::vector<PrintedTerm> out;
    for (const auto &[e, r] : sorted_terms(p)) {
        bool neg = r.sign() < 0;
        Rational mag = neg ? -r : r;
        std::string mono = monomial_str(e, names);
        std::string text;
        if (mono.empty()) {
            text = mag.str();
        } else if (mag.is_one()) {
            text = mono;
        } else {
            text = mag.str() + "*" + mono;
        }
        out.push_back({neg, text});
    }
    return join_terms(out);
}

bool is_single_term(const ParamPoly &p) { return p.terms().size() == 1; }

/// Renders |c| (den already monic). Used both standalone and as a
/// multiplicative coefficient; never starts with a sign.
std::string fe_magnitude_str(const FieldElement &c, const std::vector<std::string> &names) {
    const ParamPoly &num = c.num();
    const ParamPoly &den = c.den();
    std::string num_str;
    if (is_single_term(num)) {
        num_str = param_poly_str(num, names);
    } else {
        num_str = "(" + param_poly_str(num, names) + ")";
    }
    if (den.is_constant()) return num_str;
    std::string den_str;
    bool den_bare = false;
    if (is_single_term(den)) {
        const auto &[e, r] = *den.terms().begin();
        int used = 0;
        for (int x : e) used += x > 0 ? 1 : 0;
        den_bare = r.is_one() && used == 1;
    }
    den_str = den_bare ? param_poly_str(den, names) : "(" + param_poly_str(den, names) + ")";
    return num_str + "/" + den_str;
}

} // namespace

std::string to_string(const ParamPoly &p, const std::vector<std::string> &names) {
    return param_poly_str(p, names);
}

std::string to_string(const FieldElement &c, const std::vector<std::string> &names) {
    if (c.is_zero()) return "0";
    bool neg = leading_sign(c.num()) < 0;
    FieldElement mag = neg ? -c : c;
    return (neg ? "-" : "") + fe_magnitude_str(mag, names);
}

std::string to_string(const Polynomial &f) {
    const RingContext &ctx = *f.context();
    std::vector<std::pair<Exponents, FieldElement>> ts(f.mp().terms().begin(), f.mp().terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto &a, const auto &b) { return grevlex_cmp(a.first, b.first) > 0; });
    std::vector<PrintedTerm> out;
    for (const auto &[e, c0] : ts) {
        FieldElement c = c0.widened(ctx.nparams());
        bool neg = leading_sign(c.num()) < 0;
        FieldElement mag = neg ? -c : c;
        std::string mono = monomial_str(e, ctx.vars);
        std::string coeff;
        if (mag.is_rational()) {
            Rational r = mag.rational_value();
            coeff = (r.is_one() && !mono.empty()) ? "" : r.str();
        } else {
            coeff = fe_magnitude_str(mag, ctx.params);
        }
        std::string text;
        if (coeff.empty()) {
            text = mono;
        } else if (mono.empty()) {
            text = coeff;
        } else {
            text = coeff + "*" + mono;
        }
        out.push_back({neg, text});
    }
    return join_terms(out);
}

std::string to_string(const RationalFunction &f) {
    if (f.is_polynomial()) return to_string(f.num());
    std::string num_str = to_string(f.num());
    if (f.num().mp().terms().size() > 1) num_str = "(" + num_str + ")";
    std::string den_str = to_string(f.den());
    bool den_bare = false;
    if (f.den().mp().terms().size() == 1) {
        const auto &[e, c] = *f.den().mp().terms().begin();
        int used = 0;
        for (int x : e) used += x > 0 ? 1 : 0;
        den_bare = c.is_one() && used == 1;
    }
    if (!den_bare) den_str = "(" + den_str + ")";
    return num_str + "/" + den_str;
}

} // namespace dvkit
