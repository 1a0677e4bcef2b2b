#ifndef DVKIT_ODE_HPP
#define DVKIT_ODE_HPP

#include "dvkit/dvariety.hpp"

#include <map>
#include <string>

namespace dvkit {

/// A scalar ODE presentation: either the explicit form
/// delta^L x = num/den with num, den in the jet variables u_0..u_{L-1}, or an
/// implicit relation P(u_0,...,u_L) = 0 that genuinely involves u_L.
struct OdeSpec {
    enum class Form { Explicit, Implicit };
    Form form = Form::Explicit;
    int order = 1; // L
    ContextPtr jet_ctx;
    Polynomial num, den; // explicit form
    Polynomial poly;     // implicit form
};

/// Jet context u0..u{count-1} over the given base field.
ContextPtr jet_context(int count, const std::vector<std::string> &params = {},
                       const std::map<std::string, FieldElement> &param_deltas = {});

OdeSpec make_explicit_ode(int order, const Polynomial &num, const Polynomial &den);
OdeSpec make_implicit_ode(int order, const Polynomial &poly);

struct CompiledDVariety {
    DVariety dvariety;
    std::map<int, std::string> jet_map; // jet index -> variable name
    std::string localizer;              // the variable inverting the resolvent
};

/// Norm of a differentially algebraic 1-type: minimal order and the
/// denominator-cleared defining polynomial.
struct TypeSignature {
    int ell = 0;
    Polynomial g;
    bool operator==(const TypeSignature &o) const { return ell == o.ell && g == o.g; }
};

/// The value of delta^{L+1} x forced by differentiating P = 0:
/// -(P^delta + sum_{i<L} dP/du_i u_{i+1}) / (dP/du_L).
RationalFunction next_derivative(const Polynomial &P);

/// Realizes the ODE as a D-variety: localize at the resolvent via a fresh
/// variable w, close the jet chain, and derive delta w by the Leibniz rule.
/// The result always passes section validation.
CompiledDVariety compile(const OdeSpec &spec);

TypeSignature type_signature(const OdeSpec &spec);

} // namespace dvkit

#endif
