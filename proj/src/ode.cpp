#include "dvkit/ode.hpp"

#include <set>
#include <stdexcept>

namespace dvkit {

namespace {

std::map<std::string, FieldElement> delta_map(const RingContext &ctx) {
    std::map<std::string, FieldElement> out;
    for (int i = 0; i < ctx.nparams(); ++i) out[ctx.params[i]] = ctx.param_deltas[i];
    return out;
}

std::string fresh_name(const RingContext &ctx, std::string cand) {
    auto taken = [&](const std::string &s) { return ctx.var_index(s) >= 0 || ctx.param_index(s) >= 0; };
    while (taken(cand)) cand += "_";
    return cand;
}

} // namespace

ContextPtr jet_context(int count, const std::vector<std::string> &params,
                       const std::map<std::string, FieldElement> &param_deltas) {
    std::vector<std::string> vars;
    for (int i = 0; i < count; ++i) vars.push_back("u" + std::to_string(i));
    return make_context(vars, params, param_deltas);
}

OdeSpec make_explicit_ode(int order, const Polynomial &num, const Polynomial &den) {
    if (order < 1) throw std::invalid_argument("ode: order must be at least 1");
    require_same_context(num.context(), den.context());
    if (num.context()->nvars() != order)
        throw std::invalid_argument("ode: explicit form needs jet variables u_0..u_{L-1}");
    if (den.is_zero()) throw std::invalid_argument("ode: zero denominator");
    OdeSpec spec;
    spec.form = OdeSpec::Form::Explicit;
    spec.order = order;
    spec.jet_ctx = num.context();
    spec.num = num;
    spec.den = den;
    return spec;
}

OdeSpec make_implicit_ode(int order, const Polynomial &poly) {
    if (order < 1) throw std::invalid_argument("ode: order must be at least 1");
    if (poly.context()->nvars() != order + 1)
        throw std::invalid_argument("ode: implicit form needs jet variables u_0..u_L");
    if (partial_derivative(poly, order).is_zero())
        throw std::invalid_argument("ode: defining polynomial does not involve the top jet variable");
    OdeSpec spec;
    spec.form = OdeSpec::Form::Implicit;
    spec.order = order;
    spec.jet_ctx = poly.context();
    spec.poly = poly;
    return spec;
}

RationalFunction next_derivative(const Polynomial &P) {
    const ContextPtr &ctx = P.context();
    int top = ctx->nvars() - 1;
    if (top < 1) throw std::invalid_argument("next_derivative: need at least two jet variables");
    Polynomial resolvent = partial_derivative(P, top);
    if (resolvent.is_zero()) throw std::invalid_argument("next_derivative: resolvent is identically zero");
    Polynomial total = coeff_delta(P);
    for (int i = 0; i < top; ++i) {
        Polynomial pd = partial_derivative(P, i);
        if (!pd.is_zero()) total = total + pd * Polynomial::variable(ctx, i + 1);
    }
    return RationalFunction(-total, resolvent);
}

CompiledDVariety compile(const OdeSpec &spec) {
    const RingContext &jctx = *spec.jet_ctx;
    int L = spec.order;
    int njets = jctx.nvars();
    std::string wname = fresh_name(jctx, "w");
    std::vector<std::string> vars = jctx.vars;
    vars.push_back(wname);
    ContextPtr ctx = make_context(vars, jctx.params, delta_map(jctx));
    int n = njets + 1;
    std::vector<int> embed(njets);
    for (int i = 0; i < njets; ++i) embed[i] = i;
    auto lift = [&](const Polynomial &f) { return Polynomial(ctx, f.mp().remap(n, embed)); };
    Polynomial w = Polynomial::variable(ctx, n - 1);
    Polynomial one = Polynomial::rational(ctx, Rational(1));

    std::vector<Polynomial> gens;
    std::vector<Polynomial> deltas(n, Polynomial(ctx));
    Polynomial inverted(ctx); // the polynomial w inverts

    if (spec.form == OdeSpec::Form::Explicit) {
        inverted = lift(spec.den);
        gens.push_back(w * inverted - one);
        for (int i = 0; i + 1 < L; ++i) deltas[i] = Polynomial::variable(ctx, i + 1);
        deltas[L - 1] = lift(spec.num) * w;
    } else {
        Polynomial resolvent = partial_derivative(spec.poly, L);
        if (resolvent.is_zero()) throw std::invalid_argument("compile: resolvent is identically zero");
        inverted = lift(resolvent);
        gens.push_back(lift(spec.poly));
        gens.push_back(w * inverted - one);
        for (int i = 0; i < L; ++i) deltas[i] = Polynomial::variable(ctx, i + 1);
        Polynomial total = lift(coeff_delta(spec.poly));
        for (int i = 0; i < L; ++i) {
            Polynomial pd = partial_derivative(spec.poly, i);
            if (!pd.is_zero()) total = total + lift(pd) * Polynomial::variable(ctx, i + 1);
        }
        deltas[L] = -total * w;
    }
    // delta w is forced by w * h = 1: delta w = -w^2 delta(h). The inverted
    // polynomial never involves w, so a placeholder delta for w is sound.
    DerivationSpec partial = make_derivation(ctx, deltas);
    deltas[n - 1] = -(w * w) * derivation_apply(inverted, partial);

    Section section{deltas};
    SectionValidation v = validate_section(Variety(ctx, gens), section);
    if (!v.valid) throw std::logic_error("compile: compiled section failed validation");

    CompiledDVariety out{*v.dvariety, {}, wname};
    for (int i = 0; i < njets; ++i) out.jet_map[i] = jctx.vars[i];
    return out;
}

TypeSignature type_signature(const OdeSpec &spec) {
    TypeSignature sig;
    sig.ell = spec.order;
    if (spec.form == OdeSpec::Form::Implicit) {
        sig.g = normalize_line(spec.poly);
        return sig;
    }
    // P = den * u_L - num over the extended jet ring.
    const RingContext &jctx = *spec.jet_ctx;
    int L = spec.order;
    std::vector<std::string> vars = jctx.vars;
    vars.push_back(fresh_name(jctx, "u" + std::to_string(L)));
    ContextPtr ext = make_context(vars, jctx.params, delta_map(jctx));
    std::vector<int> embed(L);
    for (int i = 0; i < L; ++i) embed[i] = i;
    auto lift = [&](const Polynomial &f) { return Polynomial(ext, f.mp().remap(L + 1, embed)); };
    Polynomial P = lift(spec.den) * Polynomial::variable(ext, L) - lift(spec.num);
    sig.g = normalize_line(P);
    return sig;
}

} // namespace dvkit
