#include "dvkit/ring.hpp"

#include "dvkit/orders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dvkit {

int RingContext::var_index(const std::string &name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

int RingContext::param_index(const std::string &name) const {
    auto it = std::find(params.begin(), params.end(), name);
    return it == params.end() ? -1 : static_cast<int>(it - params.begin());
}

ContextPtr make_context(std::vector<std::string> vars, std::vector<std::string> params,
                        const std::map<std::string, FieldElement> &param_deltas) {
    std::set<std::string> seen;
    for (const auto &v : vars) {
        if (v.empty()) throw std::invalid_argument("ring: empty variable name");
        if (!seen.insert(v).second) throw std::invalid_argument("ring: duplicate name '" + v + "'");
    }
    for (const auto &p : params) {
        if (p.empty()) throw std::invalid_argument("ring: empty parameter name");
        if (!seen.insert(p).second) throw std::invalid_argument("ring: duplicate name '" + p + "'");
    }
    auto ctx = std::make_shared<RingContext>();
    ctx->vars = std::move(vars);
    ctx->params = std::move(params);
    int m = ctx->nparams();
    ctx->param_deltas.assign(m, FieldElement(0).widened(m));
    for (const auto &[name, value] : param_deltas) {
        int i = ctx->param_index(name);
        if (i < 0) throw std::invalid_argument("ring: delta given for unknown parameter '" + name + "'");
        if (value.nparams() != 0 && value.nparams() != m)
            throw std::invalid_argument("ring: parameter delta has wrong arity");
        ctx->param_deltas[i] = value.widened(m);
    }
    return ctx;
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars && a->params == b->params && a->param_deltas == b->param_deltas;
}

void require_same_context(const ContextPtr &a, const ContextPtr &b) {
    if (!same_context(a, b)) throw std::invalid_argument("ring: context mismatch");
}

Polynomial::Polynomial(ContextPtr ctx, VarPoly p) : ctx_(std::move(ctx)), p_(ctx_->nvars()) {
    if (p.nvars() != ctx_->nvars()) throw std::invalid_argument("Polynomial: arity mismatch with context");
    // Widen every coefficient so stored arities are uniform.
    int m = ctx_->nparams();
    for (const auto &[e, c] : p.terms()) p_.add_term(e, c.widened(m));
}

Polynomial Polynomial::constant(const ContextPtr &ctx, const FieldElement &c) {
    return Polynomial(ctx, VarPoly::constant(ctx->nvars(), c.widened(ctx->nparams())));
}

Polynomial Polynomial::rational(const ContextPtr &ctx, const Rational &r) {
    return constant(ctx, FieldElement(r));
}

Polynomial Polynomial::variable(const ContextPtr &ctx, int index) {
    return Polynomial(ctx, VarPoly::variable(ctx->nvars(), index, FieldElement(1).widened(ctx->nparams())));
}

Polynomial Polynomial::variable(const ContextPtr &ctx, const std::string &name) {
    int i = ctx->var_index(name);
    if (i < 0) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
    return variable(ctx, i);
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    require_same_context(ctx_, o.ctx_);
    return Polynomial(ctx_, p_ + o.p_);
}
Polynomial Polynomial::operator-(const Polynomial &o) const {
    require_same_context(ctx_, o.ctx_);
    return Polynomial(ctx_, p_ - o.p_);
}
Polynomial Polynomial::operator*(const Polynomial &o) const {
    require_same_context(ctx_, o.ctx_);
    return Polynomial(ctx_, p_ * o.p_);
}

bool Polynomial::operator==(const Polynomial &o) const {
    return same_context(ctx_, o.ctx_) && p_ == o.p_;
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::rational(num_.context(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_context(num_.context(), den_.context());
    normalize();
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant() && den_.constant_term().is_one();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    const ContextPtr &ctx = num_.context();
    if (num_.is_zero()) {
        den_ = Polynomial::rational(ctx, Rational(1));
        return;
    }
    if (den_.is_constant()) {
        FieldElement c = den_.constant_term();
        if (!c.is_one()) num_ = num_.scaled(c.inverse());
        den_ = Polynomial::rational(ctx, Rational(1));
        return;
    }
    // Reduce in the flattened ring Q[vars, params]; coefficient-field gcd
    // chains blow up, the flat primitive PRS does not.
    int m = ctx->nparams();
    ParamPoly den_lcm_num = ParamPoly::constant(m, Rational(1)); // L_n
    ParamPoly den_lcm_den = ParamPoly::constant(m, Rational(1)); // L_d
    for (const auto &[e, c] : num_.mp().terms()) {
        ParamPoly d = c.widened(m).den();
        den_lcm_num = mpoly_divexact(den_lcm_num * d, mpoly_gcd(den_lcm_num, d));
    }
    for (const auto &[e, c] : den_.mp().terms()) {
        ParamPoly d = c.widened(m).den();
        den_lcm_den = mpoly_divexact(den_lcm_den * d, mpoly_gcd(den_lcm_den, d));
    }
    MPoly<Rational> fn = flatten(num_), fd = flatten(den_);
    MPoly<Rational> g = mpoly_gcd(fn, fd);
    if (!(g.is_constant() && g.constant_term().is_one())) {
        fn = mpoly_divexact(fn, g);
        fd = mpoly_divexact(fd, g);
    }
    // flatten scaled num by L_n and den by L_d; restore the true ratio.
    Polynomial n2 = unflatten(ctx, fn).scaled(FieldElement(den_lcm_den, den_lcm_num));
    Polynomial d2 = unflatten(ctx, fd);
    FieldElement lc = d2.mp().lex_leading().second;
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        n2 = n2.scaled(inv);
        d2 = d2.scaled(inv);
    }
    num_ = n2;
    den_ = d2;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}
RationalFunction RationalFunction::operator+(const RationalFunction &o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator-(const RationalFunction &o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator*(const RationalFunction &o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}
RationalFunction RationalFunction::operator/(const RationalFunction &o) const {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

DerivationSpec make_derivation(const ContextPtr &ctx, std::vector<Polynomial> var_deltas) {
    if (static_cast<int>(var_deltas.size()) != ctx->nvars())
        throw std::invalid_argument("derivation: need exactly one delta per variable");
    for (const auto &g : var_deltas) require_same_context(ctx, g.context());
    return DerivationSpec{ctx, std::move(var_deltas)};
}

DerivationSpec make_derivation(const ContextPtr &ctx, const std::map<std::string, Polynomial> &var_deltas) {
    std::vector<Polynomial> order(ctx->nvars());
    std::vector<bool> given(ctx->nvars(), false);
    for (const auto &[name, g] : var_deltas) {
        int i = ctx->var_index(name);
        if (i < 0) throw std::invalid_argument("derivation: unknown variable '" + name + "'");
        order[i] = g;
        given[i] = true;
    }
    for (int i = 0; i < ctx->nvars(); ++i) {
        if (!given[i]) throw std::invalid_argument("derivation: missing delta for variable '" + ctx->vars[i] + "'");
    }
    return make_derivation(ctx, std::move(order));
}

Polynomial partial_derivative(const Polynomial &f, int var) {
    if (var < 0 || var >= f.context()->nvars()) throw std::invalid_argument("partial_derivative: bad variable index");
    return Polynomial(f.context(), f.mp().derivative(var));
}

Polynomial partial_derivative(const Polynomial &f, const std::string &var) {
    int i = f.context()->var_index(var);
    if (i < 0) throw std::invalid_argument("partial_derivative: unknown variable '" + var + "'");
    return partial_derivative(f, i);
}

FieldElement field_delta(const FieldElement &c, const RingContext &ctx) {
    int m = ctx.nparams();
    FieldElement v = c.widened(m);
    auto poly_delta = [&](const ParamPoly &p) {
        FieldElement acc = FieldElement(0).widened(m);
        for (int i = 0; i < m; ++i) {
            ParamPoly pd = p.derivative(i);
            if (!pd.is_zero()) acc += FieldElement(pd) * ctx.param_deltas[i];
        }
        return acc;
    };
    FieldElement p(v.num()), q(v.den());
    FieldElement dp = poly_delta(v.num()), dq = poly_delta(v.den());
    return (dp * q - p * dq) / (q * q);
}

Polynomial coeff_delta(const Polynomial &f) {
    const RingContext &ctx = *f.context();
    VarPoly out(ctx.nvars());
    for (const auto &[e, c] : f.mp().terms()) out.add_term(e, field_delta(c, ctx));
    return Polynomial(f.context(), out);
}

Polynomial derivation_apply(const Polynomial &f, const DerivationSpec &d) {
    require_same_context(f.context(), d.ctx);
    Polynomial acc = coeff_delta(f);
    for (int i = 0; i < d.ctx->nvars(); ++i) {
        Polynomial pd = partial_derivative(f, i);
        if (!pd.is_zero()) acc = acc + pd * d.var_deltas[i];
    }
    return acc;
}

FieldElement evaluate(const Polynomial &f, const std::vector<FieldElement> &point) {
    int m = f.context()->nparams();
    if (static_cast<int>(point.size()) != f.context()->nvars())
        throw std::invalid_argument("evaluate: point must assign every variable");
    std::vector<FieldElement> vals;
    vals.reserve(point.size());
    for (const auto &v : point) vals.push_back(v.widened(m));
    return f.mp().substitute<FieldElement>(vals, [m](const FieldElement &c) { return c.widened(m); });
}

Polynomial substitute(const Polynomial &f, const std::vector<Polynomial> &values) {
    if (static_cast<int>(values.size()) != f.context()->nvars())
        throw std::invalid_argument("substitute: need one value per variable");
    if (values.empty()) {
        return f; // no variables: constant polynomial
    }
    const ContextPtr &target = values.front().context();
    for (const auto &v : values) require_same_context(target, v.context());
    return f.mp().substitute<Polynomial>(
        values, [&](const FieldElement &c) { return Polynomial::constant(target, c); });
}

RationalFunction substitute(const Polynomial &f, const std::vector<RationalFunction> &values) {
    if (static_cast<int>(values.size()) != f.context()->nvars())
        throw std::invalid_argument("substitute: need one value per variable");
    if (values.empty()) throw std::invalid_argument("substitute: no values");
    const ContextPtr &target = values.front().context();
    for (const auto &v : values) require_same_context(target, v.context());
    return f.mp().substitute<RationalFunction>(
        values, [&](const FieldElement &c) { return RationalFunction(Polynomial::constant(target, c)); });
}

RationalFunction rf_delta(const RationalFunction &phi, const DerivationSpec &d) {
    Polynomial dp = derivation_apply(phi.num(), d);
    Polynomial dq = derivation_apply(phi.den(), d);
    return RationalFunction(dp * phi.den() - phi.num() * dq, phi.den() * phi.den());
}

MPoly<Rational> flatten(const Polynomial &f) {
    const RingContext &ctx = *f.context();
    int n = ctx.nvars(), m = ctx.nparams();
    ParamPoly lcm = ParamPoly::constant(m, Rational(1));
    for (const auto &[e, c] : f.mp().terms()) {
        ParamPoly d = c.widened(m).den();
        lcm = mpoly_divexact(lcm * d, mpoly_gcd(lcm, d));
    }
    MPoly<Rational> out(n + m);
    for (const auto &[e, c] : f.mp().terms()) {
        FieldElement w = c.widened(m);
        ParamPoly coeff = w.num() * mpoly_divexact(lcm, w.den());
        for (const auto &[pe, r] : coeff.terms()) {
            Exponents full(n + m, 0);
            for (int i = 0; i < n; ++i) full[i] = e[i];
            for (int j = 0; j < m; ++j) full[n + j] = pe[j];
            out.add_term(full, r);
        }
    }
    return out;
}

Polynomial unflatten(const ContextPtr &ctx, const MPoly<Rational> &p) {
    int n = ctx->nvars(), m = ctx->nparams();
    if (p.nvars() != n + m) throw std::invalid_argument("unflatten: arity mismatch");
    std::map<Exponents, ParamPoly> grouped;
    for (const auto &[e, r] : p.terms()) {
        Exponents ve(e.begin(), e.begin() + n);
        Exponents pe(e.begin() + n, e.end());
        auto it = grouped.find(ve);
        if (it == grouped.end()) it = grouped.emplace(ve, ParamPoly(m)).first;
        it->second.add_term(pe, r);
    }
    VarPoly out(n);
    for (const auto &[ve, pp] : grouped) out.add_term(ve, FieldElement(pp));
    return Polynomial(ctx, out);
}

Polynomial normalize_line(const Polynomial &f) {
    if (f.is_zero()) return f;
    const RingContext &ctx = *f.context();
    int n = ctx.nvars(), m = ctx.nparams();
    MPoly<Rational> flat = flatten(f);
    // Parameter content: gcd over Q[params] of the variable-grouped
    // coefficients, so scaling by a base-field element does not change g.
    std::map<Exponents, ParamPoly> grouped;
    for (const auto &[e, r] : flat.terms()) {
        Exponents ve(e.begin(), e.begin() + n);
        Exponents pe(e.begin() + n, e.end());
        auto it = grouped.find(ve);
        if (it == grouped.end()) it = grouped.emplace(ve, ParamPoly(m)).first;
        it->second.add_term(pe, r);
    }
    ParamPoly pc(m);
    for (const auto &[ve, pp] : grouped) pc = mpoly_gcd(pc, pp);
    if (!pc.is_constant()) {
        std::vector<int> lift(m);
        for (int j = 0; j < m; ++j) lift[j] = n + j;
        flat = mpoly_divexact(flat, pc.remap(n + m, lift));
    }
    // Rational content, then the sign of the grevlex-leading term.
    Rational content(0);
    for (const auto &[e, r] : flat.terms()) content = Rational::gcd(content, r);
    MPoly<Rational> prim = flat.scaled(content.inverse());
    const auto &terms = prim.terms();
    auto lead = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (grevlex_cmp(it->first, lead->first) > 0) lead = it;
    }
    if (lead->second.sign() < 0) prim = prim.scaled(Rational(-1));
    return unflatten(f.context(), prim);
}

} // namespace dvkit
