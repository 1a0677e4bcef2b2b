#ifndef DVKIT_FIELD_HPP
#define DVKIT_FIELD_HPP

#include "dvkit/mpoly.hpp"
#include "dvkit/rational.hpp"

#include <stdexcept>
#include <utility>

namespace dvkit {

using ParamPoly = MPoly<Rational>;

/// Element of the base field k = Q(c_1,...,c_m): a reduced quotient of
/// polynomials in the parameters. The denominator is nonzero, coprime to the
/// numerator, and has lex-leading coefficient 1, so equality is structural.
/// Arity-0 constants promote silently when combined with wider elements.
class FieldElement {
  public:
    FieldElement() : num_(0), den_(ParamPoly::constant(0, Rational(1))) {}
    FieldElement(long n) : num_(ParamPoly::constant(0, Rational(n))), den_(ParamPoly::constant(0, Rational(1))) {}
    explicit FieldElement(const Rational &r)
        : num_(ParamPoly::constant(0, r)), den_(ParamPoly::constant(0, Rational(1))) {}
    explicit FieldElement(const ParamPoly &p) : num_(p), den_(ParamPoly::constant(p.nvars(), Rational(1))) {}
    FieldElement(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.nvars() != den_.nvars()) throw std::invalid_argument("FieldElement: arity mismatch");
        normalize();
    }

    int nparams() const { return num_.nvars(); }
    const ParamPoly &num() const { return num_; }
    const ParamPoly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const {
        return den_.is_constant() && num_.is_constant() && !num_.is_zero() &&
               num_.constant_term() == den_.constant_term();
    }
    /// True when the element lies in Q.
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("FieldElement: not rational");
        return num_.constant_term() / den_.constant_term();
    }

    FieldElement operator-() const { return make_raw(-num_, den_); }
    FieldElement operator+(const FieldElement &o) const {
        auto [a, b] = aligned(*this, o);
        return FieldElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldElement operator-(const FieldElement &o) const {
        auto [a, b] = aligned(*this, o);
        return FieldElement(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldElement operator*(const FieldElement &o) const {
        auto [a, b] = aligned(*this, o);
        return FieldElement(a.num_ * b.num_, a.den_ * b.den_);
    }
    FieldElement operator/(const FieldElement &o) const {
        if (o.is_zero()) throw std::domain_error("FieldElement: division by zero");
        auto [a, b] = aligned(*this, o);
        return FieldElement(a.num_ * b.den_, a.den_ * b.num_);
    }
    FieldElement &operator+=(const FieldElement &o) { return *this = *this + o; }
    FieldElement &operator-=(const FieldElement &o) { return *this = *this - o; }
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
        return FieldElement(den_, num_);
    }

    bool operator==(const FieldElement &o) const {
        auto [a, b] = aligned(*this, o);
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    bool operator!=(const FieldElement &o) const { return !(*this == o); }
    bool operator<(const FieldElement &o) const {
        auto [a, b] = aligned(*this, o);
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// Promote an arity-0 constant into an m-parameter field.
    FieldElement widened(int nparams) const {
        if (num_.nvars() == nparams) return *this;
        if (num_.nvars() != 0) throw std::invalid_argument("FieldElement: cannot widen");
        return make_raw(num_.remap(nparams, {}), den_.remap(nparams, {}));
    }

  private:
    static FieldElement make_raw(ParamPoly n, ParamPoly d) {
        FieldElement f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }
    static std::pair<FieldElement, FieldElement> aligned(const FieldElement &a, const FieldElement &b) {
        if (a.nparams() == b.nparams()) return {a, b};
        if (a.nparams() == 0) return {a.widened(b.nparams()), b};
        if (b.nparams() == 0) return {a, b.widened(a.nparams())};
        throw std::invalid_argument("FieldElement: arity mismatch");
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("FieldElement: zero denominator");
        if (num_.is_zero()) {
            den_ = ParamPoly::constant(den_.nvars(), Rational(1));
            return;
        }
        ParamPoly g = mpoly_gcd(num_, den_);
        if (!(g.is_constant() && g.constant_term().is_one())) {
            num_ = mpoly_divexact(num_, g);
            den_ = mpoly_divexact(den_, g);
        }
        Rational lc = den_.lex_leading().second;
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    ParamPoly num_, den_;
};

} // namespace dvkit

#endif
