#ifndef DVKIT_RATIONAL_HPP
#define DVKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dvkit {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canon(); }
    explicit Rational(const mpq_class &q) : v_(q) { canon(); }
    explicit Rational(const std::string &text) : v_(text) { canon(); }

    static Rational from_mpz(const mpz_class &num, const mpz_class &den) {
        Rational r;
        r.v_ = mpq_class(num, den);
        r.canon();
        return r;
    }

    const mpz_class &num() const { return v_.get_num(); }
    const mpz_class &den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational &o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational &o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational &o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational &o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational &o) const { return v_ == o.v_; }
    bool operator!=(const Rational &o) const { return v_ != o.v_; }
    bool operator<(const Rational &o) const { return v_ < o.v_; }

    /// "-3", "1/2"; integers print without denominator.
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (!is_integer()) s += "/" + v_.get_den().get_str();
        return s;
    }

    static Rational gcd(const Rational &a, const Rational &b) {
        // gcd over Q: gcd of numerators over lcm of denominators, nonnegative.
        if (a.is_zero()) return b.sign() < 0 ? -b : b;
        if (b.is_zero()) return a.sign() < 0 ? -a : a;
        mpz_class gn, lcm_d;
        mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
        mpz_lcm(lcm_d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
        return from_mpz(gn, lcm_d);
    }

  private:
    void canon() {
        v_.canonicalize();
        if (v_.get_num() == 0) v_ = 0;
    }
    mpq_class v_;
};

} // namespace dvkit

#endif
