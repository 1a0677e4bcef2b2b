#include "dvkit/dvariety.hpp"

#include <algorithm>
#include <set>

namespace dvkit {

namespace {

std::map<std::string, FieldElement> delta_map(const RingContext &ctx) {
    std::map<std::string, FieldElement> out;
    for (int i = 0; i < ctx.nparams(); ++i) out[ctx.params[i]] = ctx.param_deltas[i];
    return out;
}

std::vector<std::string> fresh_dual_names(const RingContext &ctx) {
    std::set<std::string> taken(ctx.vars.begin(), ctx.vars.end());
    taken.insert(ctx.params.begin(), ctx.params.end());
    std::vector<std::string> duals;
    for (const auto &v : ctx.vars) {
        std::string cand = "d" + v;
        while (taken.count(cand)) cand += "_";
        taken.insert(cand);
        duals.push_back(cand);
    }
    return duals;
}

DoubledVariety doubled(const Variety &v, bool with_coeff_delta) {
    const RingContext &ctx = *v.context();
    int n = ctx.nvars();
    std::vector<std::string> duals = fresh_dual_names(ctx);
    std::vector<std::string> vars = ctx.vars;
    vars.insert(vars.end(), duals.begin(), duals.end());
    ContextPtr dctx = make_context(vars, ctx.params, delta_map(ctx));

    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;
    auto lift = [&](const Polynomial &f) { return Polynomial(dctx, f.mp().remap(2 * n, embed)); };

    DoubledVariety out;
    out.context = dctx;
    out.dual_names = duals;
    for (const auto &f : v.gens()) {
        out.gens.push_back(lift(f));
        Polynomial twisted = with_coeff_delta ? lift(coeff_delta(f)) : Polynomial(dctx);
        for (int i = 0; i < n; ++i) {
            Polynomial pd = partial_derivative(f, i);
            if (!pd.is_zero()) twisted = twisted + lift(pd) * Polynomial::variable(dctx, n + i);
        }
        out.gens.push_back(twisted);
    }
    return out;
}

} // namespace

Variety::Variety(ContextPtr ctx, std::vector<Polynomial> gens, VarietyClaims claims)
    : ctx_(std::move(ctx)), claims_(claims) {
    for (auto &g : gens) {
        require_same_context(ctx_, g.context());
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    gb_ = std::make_shared<GroebnerBasis>(groebner(gens_, ctx_));
    if (gb_->is_unit_ideal())
        throw EmptyVarietyError("variety: 1 lies in the ideal, the variety is empty");
}

DoubledVariety tangent_bundle(const Variety &v) { return doubled(v, false); }

DoubledVariety prolongation(const Variety &v) { return doubled(v, true); }

SectionValidation validate_section(const Variety &v, const Section &s) {
    const ContextPtr &ctx = v.context();
    if (static_cast<int>(s.components.size()) != ctx->nvars())
        throw std::invalid_argument("validate_section: need one component per variable");
    for (const auto &c : s.components) require_same_context(ctx, c.context());

    DerivationSpec spec = make_derivation(ctx, s.components);
    SectionValidation out;
    out.valid = true;
    for (const auto &f : v.gens()) {
        Polynomial residue_poly = derivation_apply(f, spec);
        if (radical_member(residue_poly, v.gens(), ctx)) continue;
        out.valid = false;
        out.failures.push_back({f, normal_form(residue_poly, v.basis()).remainder});
    }
    if (out.valid) out.dvariety = DVariety(v, s, std::move(spec));
    return out;
}

Polynomial induced_derivation(const DVariety &d, const Polynomial &f) {
    return normal_form(derivation_apply(f, d.spec()), d.variety().basis()).remainder;
}

DSubvarietyReport is_d_subvariety(const DVariety &d, const std::vector<Polynomial> &w_gens) {
    const ContextPtr &ctx = d.context();
    for (const auto &h : w_gens) require_same_context(ctx, h.context());
    DSubvarietyReport out;
    // W must be contained in V: every V-generator vanishes on W.
    for (const auto &g : d.variety().gens()) {
        if (!radical_member(g, w_gens, ctx)) {
            out.status = DSubvarietyReport::Status::NotSubvariety;
            return out;
        }
    }
    std::vector<Polynomial> combined = w_gens;
    combined.insert(combined.end(), d.variety().gens().begin(), d.variety().gens().end());
    GroebnerBasis gb = groebner(combined, ctx);
    bool all_ok = true;
    for (const auto &h : w_gens) {
        Polynomial dh = derivation_apply(h, d.spec());
        DSubvarietyReport::Entry entry;
        entry.generator = h;
        entry.closed = radical_member(dh, combined, ctx);
        entry.residue = normal_form(dh, gb).remainder;
        all_ok = all_ok && entry.closed;
        out.entries.push_back(std::move(entry));
    }
    out.status = all_ok ? DSubvarietyReport::Status::Ok : DSubvarietyReport::Status::Invalid;
    return out;
}

DPointReport is_d_point(const DVariety &d, const std::vector<FieldElement> &point) {
    const RingContext &ctx = *d.context();
    if (static_cast<int>(point.size()) != ctx.nvars())
        throw std::invalid_argument("is_d_point: point must assign every variable");
    DPointReport out;
    for (const auto &g : d.variety().gens()) {
        if (!evaluate(g, point).is_zero()) {
            out.status = DPointReport::Status::NotOnVariety;
            return out;
        }
    }
    for (int i = 0; i < ctx.nvars(); ++i) {
        FieldElement lhs = evaluate(d.spec().var_deltas[i], point);
        FieldElement rhs = field_delta(point[i], ctx);
        if (lhs != rhs) out.mismatches.push_back({ctx.vars[i], lhs, rhs});
    }
    out.status = out.mismatches.empty() ? DPointReport::Status::Ok : DPointReport::Status::Invalid;
    return out;
}

DVariety product(const DVariety &a, const DVariety &b) {
    const RingContext &ca = *a.context();
    const RingContext &cb = *b.context();
    if (ca.params != cb.params || ca.param_deltas != cb.param_deltas)
        throw std::invalid_argument("product: factors live over different base fields");

    std::set<std::string> taken(ca.vars.begin(), ca.vars.end());
    taken.insert(ca.params.begin(), ca.params.end());
    std::vector<std::string> vars = ca.vars;
    for (const auto &v : cb.vars) {
        std::string cand = v + "_2";
        while (taken.count(cand)) cand += "_2";
        taken.insert(cand);
        vars.push_back(cand);
    }
    ContextPtr ctx = make_context(vars, ca.params, delta_map(ca));

    int n1 = ca.nvars(), n2 = cb.nvars();
    std::vector<int> embed1(n1), embed2(n2);
    for (int i = 0; i < n1; ++i) embed1[i] = i;
    for (int i = 0; i < n2; ++i) embed2[i] = n1 + i;
    auto lift1 = [&](const Polynomial &f) { return Polynomial(ctx, f.mp().remap(n1 + n2, embed1)); };
    auto lift2 = [&](const Polynomial &f) { return Polynomial(ctx, f.mp().remap(n1 + n2, embed2)); };

    std::vector<Polynomial> gens;
    for (const auto &g : a.variety().gens()) gens.push_back(lift1(g));
    for (const auto &g : b.variety().gens()) gens.push_back(lift2(g));

    Section section;
    for (const auto &c : a.section().components) section.components.push_back(lift1(c));
    for (const auto &c : b.section().components) section.components.push_back(lift2(c));

    SectionValidation v = validate_section(Variety(ctx, std::move(gens)), section);
    if (!v.valid) throw std::logic_error("product: revalidation failed");
    return *v.dvariety;
}

bool ComponentsReport::all_closed() const {
    if (status != Status::Ok) return false;
    return std::all_of(verdicts.begin(), verdicts.end(), [](const DSubvarietyReport &r) { return r.ok(); });
}

ComponentsReport components_delta_check(const DVariety &d,
                                        const std::vector<std::vector<Polynomial>> &components) {
    const ContextPtr &ctx = d.context();
    ComponentsReport out;
    // Each component must cut out a subvariety of V.
    for (size_t i = 0; i < components.size(); ++i) {
        for (const auto &g : d.variety().gens()) {
            if (!radical_member(g, components[i], ctx)) {
                out.status = ComponentsReport::Status::Mismatch;
                out.mismatch_reason = "component " + std::to_string(i + 1) + " is not contained in the variety";
                return out;
            }
        }
    }
    // The intersection of the components must agree with V's ideal up to
    // radical; products of one generator from each component present it.
    std::vector<Polynomial> products{Polynomial::rational(ctx, Rational(1))};
    for (const auto &comp : components) {
        std::vector<Polynomial> next;
        for (const auto &p : products) {
            for (const auto &g : comp) next.push_back(p * g);
        }
        products = std::move(next);
    }
    if (!radical_equal(d.variety().gens(), products, ctx)) {
        out.status = ComponentsReport::Status::Mismatch;
        out.mismatch_reason = "the intersection of the components differs from the variety";
        return out;
    }
    for (const auto &comp : components) out.verdicts.push_back(is_d_subvariety(d, comp));
    return out;
}

int generic_type_dimension(const DVariety &d) {
    auto dim = krull_dimension(d.variety().gens(), d.context());
    if (!dim) throw std::logic_error("generic_type_dimension: validated variety cannot be empty");
    return *dim;
}

} // namespace dvkit
