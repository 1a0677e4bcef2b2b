#ifndef DVKIT_RING_HPP
#define DVKIT_RING_HPP

#include "dvkit/field.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dvkit {

/// A polynomial ring k[x_1..x_n] over the base differential field
/// k = Q(c_1..c_m), with delta given on the parameters c_i.
struct RingContext {
    std::vector<std::string> vars;
    std::vector<std::string> params;
    std::vector<FieldElement> param_deltas; // one per param

    int nvars() const { return static_cast<int>(vars.size()); }
    int nparams() const { return static_cast<int>(params.size()); }
    int var_index(const std::string &name) const;
    int param_index(const std::string &name) const;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(std::vector<std::string> vars, std::vector<std::string> params = {},
                        const std::map<std::string, FieldElement> &param_deltas = {});

bool same_context(const ContextPtr &a, const ContextPtr &b);
void require_same_context(const ContextPtr &a, const ContextPtr &b);

using VarPoly = MPoly<FieldElement>;

/// Element of k[x_1..x_n] tied to its ring.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)), p_(ctx_->nvars()) {}
    Polynomial(ContextPtr ctx, VarPoly p);

    static Polynomial constant(const ContextPtr &ctx, const FieldElement &c);
    static Polynomial rational(const ContextPtr &ctx, const Rational &r);
    static Polynomial variable(const ContextPtr &ctx, int index);
    static Polynomial variable(const ContextPtr &ctx, const std::string &name);

    const ContextPtr &context() const { return ctx_; }
    const VarPoly &mp() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_constant() const { return p_.is_constant(); }
    FieldElement constant_term() const { return p_.constant_term().widened(ctx_->nparams()); }
    int total_degree() const { return p_.total_degree(); }

    Polynomial operator-() const { return Polynomial(ctx_, -p_); }
    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial scaled(const FieldElement &c) const { return Polynomial(ctx_, p_.scaled(c)); }
    Polynomial pow(int n) const { return Polynomial(ctx_, p_.pow(n)); }

    bool operator==(const Polynomial &o) const;
    bool operator!=(const Polynomial &o) const { return !(*this == o); }
    bool operator<(const Polynomial &o) const { return p_ < o.p_; }

  private:
    ContextPtr ctx_;
    VarPoly p_;
};

/// Element of k(V)'s ambient fraction field k(x_1..x_n), kept reduced with a
/// canonically scaled denominator.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }
    const ContextPtr &context() const { return num_.context(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction &o) const;
    RationalFunction operator-(const RationalFunction &o) const;
    RationalFunction operator*(const RationalFunction &o) const;
    RationalFunction operator/(const RationalFunction &o) const;

    bool operator==(const RationalFunction &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction &o) const { return !(*this == o); }

  private:
    void normalize();
    Polynomial num_, den_;
};

/// Section data for the induced derivation: delta x_i = g_i, together with
/// the parameter deltas carried by the context.
struct DerivationSpec {
    ContextPtr ctx;
    std::vector<Polynomial> var_deltas;
};

DerivationSpec make_derivation(const ContextPtr &ctx, std::vector<Polynomial> var_deltas);
DerivationSpec make_derivation(const ContextPtr &ctx, const std::map<std::string, Polynomial> &var_deltas);

// Fundamental operators.
Polynomial partial_derivative(const Polynomial &f, int var);
Polynomial partial_derivative(const Polynomial &f, const std::string &var);

/// delta of a base-field element, from the parameter deltas.
FieldElement field_delta(const FieldElement &c, const RingContext &ctx);

/// f^delta: apply delta to each coefficient, exponents unchanged.
Polynomial coeff_delta(const Polynomial &f);

/// delta_s f = f^delta + sum_i (df/dx_i) g_i, unreduced.
Polynomial derivation_apply(const Polynomial &f, const DerivationSpec &d);

/// Exact substitution of base-field values for the variables.
FieldElement evaluate(const Polynomial &f, const std::vector<FieldElement> &point);

/// Substitute polynomials (in a common target context) for the variables.
Polynomial substitute(const Polynomial &f, const std::vector<Polynomial> &values);

/// Substitute rational functions for the variables.
RationalFunction substitute(const Polynomial &f, const std::vector<RationalFunction> &values);

/// Quotient rule: (delta(p) q - p delta(q)) / q^2.
RationalFunction rf_delta(const RationalFunction &phi, const DerivationSpec &d);

/// f scaled by the lcm of its coefficient denominators, rewritten over Q with
/// the parameters spliced in as trailing variables.
MPoly<Rational> flatten(const Polynomial &f);
Polynomial unflatten(const ContextPtr &ctx, const MPoly<Rational> &p);

/// Denominator-cleared, content-free, sign-normalized representative of the
/// line Q* f (leading rational coefficient positive, primitive over Z).
Polynomial normalize_line(const Polynomial &f);

} // namespace dvkit

#endif
