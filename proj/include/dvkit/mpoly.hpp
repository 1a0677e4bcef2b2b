#ifndef DVKIT_MPOLY_HPP
#define DVKIT_MPOLY_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace dvkit {

/// Sparse multivariate polynomial over a field F, indexed by position.
/// Exponent vectors always have length nvars(); zero coefficients are never
/// stored, so structural equality is semantic equality.
template <class F>
class MPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, F>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const F &c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), c);
        return p;
    }
    static MPoly variable(int nvars, int index, const F &one) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("MPoly: variable index out of range");
        MPoly p(nvars);
        Exponents e(nvars, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), one);
        return p;
    }
    static MPoly monomial(Exponents e, const F &c) {
        MPoly p(static_cast<int>(e.size()));
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
    }
    /// The constant term (zero if absent).
    F constant_term() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? F() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto &[e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d; // -1 for the zero polynomial
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto &[e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void add_term(const Exponents &e, const F &c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MPoly operator+(const MPoly &o) const {
        check(o);
        MPoly r = *this;
        for (const auto &[e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly &o) const {
        check(o);
        MPoly r = *this;
        for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly &o) const {
        check(o);
        MPoly r(nvars_);
        for (const auto &[ea, ca] : terms_) {
            for (const auto &[eb, cb] : o.terms_) {
                Exponents e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MPoly scaled(const F &c) const {
        MPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto &[e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    MPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("MPoly: negative power");
        MPoly r = constant(nvars_, unit());
        MPoly b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const MPoly &o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly &o) const { return !(*this == o); }
    bool operator<(const MPoly &o) const {
        if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
        return terms_ < o.terms_;
    }

    MPoly derivative(int var) const {
        MPoly r(nvars_);
        for (const auto &[e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * mult(e[var]));
        }
        return r;
    }

    /// Substitute values for the variables; conv lifts a coefficient into V,
    /// which needs + and *.
    template <class V, class Conv>
    V substitute(const std::vector<V> &values, Conv conv) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw std::invalid_argument("MPoly: substitution arity mismatch");
        V acc = conv(F()); // zero
        for (const auto &[e, c] : terms_) {
            V m = conv(c);
            for (int i = 0; i < nvars_; ++i) {
                for (int k = 0; k < e[i]; ++k) m = m * values[i];
            }
            acc = acc + m;
        }
        return acc;
    }

    /// Re-embed into a ring with new_nvars variables; pos_map[i] gives the
    /// new position of variable i.
    MPoly remap(int new_nvars, const std::vector<int> &pos_map) const {
        if (static_cast<int>(pos_map.size()) != nvars_)
            throw std::invalid_argument("MPoly: remap size mismatch");
        MPoly r(new_nvars);
        for (const auto &[e, c] : terms_) {
            Exponents ne(new_nvars, 0);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] != 0) {
                    if (pos_map[i] < 0 || pos_map[i] >= new_nvars)
                        throw std::invalid_argument("MPoly: remap target out of range");
                    ne[pos_map[i]] = e[i];
                }
            }
            r.add_term(ne, c);
        }
        return r;
    }

    /// Leading term under plain exponent-vector lex (storage order); used for
    /// normalization and exact division, not for Groebner logic.
    std::pair<Exponents, F> lex_leading() const {
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    /// Scale so the lex-leading coefficient is 1.
    MPoly monic_lex() const {
        if (is_zero()) return *this;
        return scaled(lex_leading().second.inverse());
    }

  private:
    void check(const MPoly &o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    }
    F unit() const { return F(1); }
    static F mult(int n) { return F(n); }

    int nvars_;
    TermMap terms_;
};

/// Exact division a / b; throws if the division is not exact.
template <class F>
MPoly<F> mpoly_divexact(const MPoly<F> &a, const MPoly<F> &b) {
    if (b.is_zero()) throw std::domain_error("mpoly_divexact: division by zero");
    MPoly<F> q(a.nvars());
    MPoly<F> r = a;
    auto [eb, cb] = b.lex_leading();
    F cb_inv = cb.inverse();
    while (!r.is_zero()) {
        auto [er, cr] = r.lex_leading();
        std::vector<int> de(r.nvars());
        for (int i = 0; i < r.nvars(); ++i) {
            de[i] = er[i] - eb[i];
            if (de[i] < 0) throw std::domain_error("mpoly_divexact: not divisible");
        }
        MPoly<F> t = MPoly<F>::monomial(de, cr * cb_inv);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace detail {

template <class F>
std::map<int, MPoly<F>> univariate_view(const MPoly<F> &p, int var) {
    std::map<int, MPoly<F>> out;
    for (const auto &[e, c] : p.terms()) {
        std::vector<int> rest = e;
        int d = rest[var];
        rest[var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MPoly<F>(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

template <class F>
MPoly<F> from_univariate(const std::map<int, MPoly<F>> &view, int var, int nvars) {
    MPoly<F> p(nvars);
    for (const auto &[d, coeff] : view) {
        std::vector<int> shift(nvars, 0);
        shift[var] = d;
        p = p + coeff * MPoly<F>::monomial(shift, F(1));
    }
    return p;
}

/// Pseudo-remainder of a by b with respect to var (b nonzero in var).
template <class F>
MPoly<F> pseudo_rem(MPoly<F> a, const MPoly<F> &b, int var) {
    int db = b.degree_in(var);
    auto bview = univariate_view(b, var);
    MPoly<F> lb = bview.rbegin()->second;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        auto aview = univariate_view(a, var);
        MPoly<F> la = aview.rbegin()->second;
        std::vector<int> shift(a.nvars(), 0);
        shift[var] = da - db;
        a = a * lb - b * la * MPoly<F>::monomial(shift, F(1));
    }
    return a;
}

} // namespace detail

template <class F>
MPoly<F> mpoly_gcd(const MPoly<F> &a, const MPoly<F> &b);

namespace detail {

/// gcd of the coefficients of p viewed as univariate in var.
template <class F>
MPoly<F> content_in(const MPoly<F> &p, int var) {
    MPoly<F> g(p.nvars());
    for (const auto &[d, coeff] : univariate_view(p, var)) g = mpoly_gcd(g, coeff);
    return g;
}

/// Specialize every variable except var at values[i]; returns the univariate
/// coefficient table, degree -> F.
template <class F>
std::map<int, F> specialize_to_univariate(const MPoly<F> &p, int var, const std::vector<F> &values) {
    std::map<int, F> out;
    for (const auto &[e, c] : p.terms()) {
        F m = c;
        for (int i = 0; i < p.nvars(); ++i) {
            if (i == var) continue;
            for (int k = 0; k < e[i]; ++k) m = m * values[i];
        }
        auto it = out.find(e[var]);
        if (it == out.end()) {
            if (!m.is_zero()) out.emplace(e[var], m);
        } else {
            it->second += m;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

template <class F>
int univariate_gcd_degree(std::map<int, F> a, std::map<int, F> b) {
    auto deg = [](const std::map<int, F> &p) { return p.empty() ? -1 : p.rbegin()->first; };
    while (!b.empty()) {
        int db = deg(b);
        const F lb = b.rbegin()->second;
        while (!a.empty() && deg(a) >= db) {
            int da = deg(a);
            F q = a.rbegin()->second / lb;
            for (const auto &[i, c] : b) {
                int j = i + da - db;
                auto it = a.find(j);
                F delta = c * q;
                if (it == a.end()) {
                    if (!delta.is_zero()) a.emplace(j, -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) a.erase(it);
                }
            }
        }
        std::swap(a, b);
    }
    return deg(a);
}

/// Degree in var of gcd(a, b) after one valid integer specialization of the
/// other variables, or -1 if no specialization preserved both leading
/// coefficients. A return of 0 proves gcd(a, b) is free of var.
template <class F>
int specialized_gcd_degree(const MPoly<F> &a, const MPoly<F> &b, int var) {
    for (int seed = 1; seed <= 5; ++seed) {
        std::vector<F> values;
        for (int i = 0; i < a.nvars(); ++i) values.push_back(F(seed + 2 * i));
        auto ua = specialize_to_univariate(a, var, values);
        auto ub = specialize_to_univariate(b, var, values);
        bool lc_ok = !ua.empty() && !ub.empty() && ua.rbegin()->first == a.degree_in(var) &&
                     ub.rbegin()->first == b.degree_in(var);
        if (!lc_ok) continue;
        return univariate_gcd_degree(std::move(ua), std::move(ub));
    }
    return -1;
}

} // namespace detail

/// gcd over the coefficient field, normalized so the lex-leading coefficient
/// is 1. Primitive PRS; adequate at the scales this library targets.
template <class F>
MPoly<F> mpoly_gcd(const MPoly<F> &a, const MPoly<F> &b) {
    if (a.is_zero()) return b.monic_lex();
    if (b.is_zero()) return a.monic_lex();
    int var = -1;
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    if (var < 0) return MPoly<F>::constant(a.nvars(), F(1)); // nonzero constants
    if (a.is_constant() || b.is_constant()) return MPoly<F>::constant(a.nvars(), F(1)); // units
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // One side is free of the main variable: gcd divides its content.
        const MPoly<F> &flat = a.degree_in(var) == 0 ? a : b;
        const MPoly<F> &other = a.degree_in(var) == 0 ? b : a;
        return mpoly_gcd(flat, detail::content_in(other, var));
    }
    // Specialization shortcut: if a valid evaluation of the other variables
    // leaves coprime univariate polynomials, the gcd is the gcd of contents.
    if (detail::specialized_gcd_degree(a, b, var) == 0) {
        return mpoly_gcd(detail::content_in(a, var), detail::content_in(b, var)).monic_lex();
    }
    MPoly<F> ca = detail::content_in(a, var);
    MPoly<F> cb = detail::content_in(b, var);
    MPoly<F> pa = mpoly_divexact(a, ca);
    MPoly<F> pb = mpoly_divexact(b, cb);
    MPoly<F> cg = mpoly_gcd(ca, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly<F> r = detail::pseudo_rem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = mpoly_divexact(r, detail::content_in(r, var));
        }
    }
    return (cg * pa).monic_lex();
}

} // namespace dvkit

#endif
