#include "dvkit/groebner.hpp"

#include "dvkit/printer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace dvkit {

namespace {

std::atomic<bool> g_selfcheck{false};

std::pair<Exponents, FieldElement> leading(const VarPoly &p, const MonomialOrder &order) {
    if (p.is_zero()) throw std::domain_error("groebner: leading term of zero");
    auto best = p.terms().begin();
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) {
        if (order.cmp(it->first, best->first) > 0) best = it;
    }
    return {best->first, best->second};
}

bool divides(const Exponents &a, const Exponents &b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents exp_sub(const Exponents &a, const Exponents &b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents &a, const Exponents &b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int exp_total(const Exponents &a) {
    int d = 0;
    for (int x : a) d += x;
    return d;
}

struct Division {
    std::vector<VarPoly> cofactors;
    VarPoly remainder;
};

/// Multivariate division; the divisor tried first is always the first in
/// basis order, so cofactors are deterministic.
Division divide(const VarPoly &f, const std::vector<VarPoly> &basis, const MonomialOrder &order) {
    int n = f.nvars();
    Division out;
    out.cofactors.assign(basis.size(), VarPoly(n));
    out.remainder = VarPoly(n);
    std::vector<std::pair<Exponents, FieldElement>> lts;
    lts.reserve(basis.size());
    for (const auto &g : basis) lts.push_back(leading(g, order));
    VarPoly p = f;
    while (!p.is_zero()) {
        auto [ep, cp] = leading(p, order);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!divides(lts[i].first, ep)) continue;
            VarPoly t = VarPoly::monomial(exp_sub(ep, lts[i].first), cp / lts[i].second);
            out.cofactors[i] = out.cofactors[i] + t;
            p = p - t * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            VarPoly t = VarPoly::monomial(ep, cp);
            out.remainder = out.remainder + t;
            p = p - t;
        }
    }
    return out;
}

VarPoly s_polynomial(const VarPoly &a, const VarPoly &b, const MonomialOrder &order) {
    auto [ea, ca] = leading(a, order);
    auto [eb, cb] = leading(b, order);
    Exponents l = exp_lcm(ea, eb);
    VarPoly ta = VarPoly::monomial(exp_sub(l, ea), ca.inverse());
    VarPoly tb = VarPoly::monomial(exp_sub(l, eb), cb.inverse());
    return ta * a - tb * b;
}

std::vector<VarPoly> buchberger(std::vector<VarPoly> gens, const MonomialOrder &order) {
    std::vector<VarPoly> g;
    for (auto &p : gens) {
        if (!p.is_zero()) g.push_back(std::move(p));
    }
    if (g.empty()) return g;

    using Pair = std::pair<int, int>;
    std::set<Pair> pending;
    auto add_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (int k = 1; k < static_cast<int>(g.size()); ++k) add_pairs(k);

    std::vector<std::pair<Exponents, FieldElement>> lts;
    for (const auto &p : g) lts.push_back(leading(p, order));

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree, ties by order then index.
        auto best = pending.begin();
        Exponents best_lcm = exp_lcm(lts[best->first].first, lts[best->second].first);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = exp_lcm(lts[it->first].first, lts[it->second].first);
            int dl = exp_total(l), db = exp_total(best_lcm);
            if (dl < db || (dl == db && order.cmp(l, best_lcm) < 0)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Exponents &ei = lts[i].first, &ej = lts[j].first;
        Exponents l = exp_lcm(ei, ej);
        // First Buchberger criterion: coprime leading terms.
        bool coprime = true;
        for (size_t t = 0; t < ei.size() && coprime; ++t) {
            if (ei[t] > 0 && ej[t] > 0) coprime = false;
        }
        if (coprime) continue;
        // Chain criterion: some k with LT(k) | lcm and both pairs settled.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!divides(lts[k].first, l)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (pending.count(ik) == 0 && pending.count(jk) == 0) skip = true;
        }
        if (skip) continue;

        VarPoly s = s_polynomial(g[i], g[j], order);
        VarPoly r = divide(s, g, order).remainder;
        if (!r.is_zero()) {
            g.push_back(r);
            lts.push_back(leading(r, order));
            add_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<bool> keep(g.size(), true);
    for (size_t i = 0; i < g.size(); ++i) {
        for (size_t j = 0; j < g.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(lts[j].first, lts[i].first)) {
                // Tie (equal LTs): keep the earlier one.
                if (lts[i].first == lts[j].first && i < j) continue;
                keep[i] = false;
            }
        }
    }
    std::vector<VarPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        if (keep[i]) minimal.push_back(g[i].scaled(lts[i].second.inverse()));
    }
    // Tail-reduce each element against the others.
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VarPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        minimal[i] = divide(minimal[i], others, order).remainder;
        minimal[i] = minimal[i].scaled(leading(minimal[i], order).second.inverse());
    }
    std::sort(minimal.begin(), minimal.end(), [&](const VarPoly &a, const VarPoly &b) {
        return order.cmp(leading(a, order).first, leading(b, order).first) < 0;
    });
    return minimal;
}

std::string cache_key(const std::vector<Polynomial> &gens, const ContextPtr &ctx, const MonomialOrder &order) {
    std::vector<std::string> parts;
    for (const auto &g : gens) {
        if (!g.is_zero()) parts.push_back(to_string(g));
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::string key = std::to_string(static_cast<int>(order.kind)) + ":" + std::to_string(order.split) + "|";
    for (const auto &v : ctx->vars) key += v + ",";
    key += ";";
    for (int i = 0; i < ctx->nparams(); ++i)
        key += ctx->params[i] + "=" + to_string(ctx->param_deltas[i], ctx->params) + ",";
    key += "|";
    for (const auto &p : parts) key += p + ";";
    return key;
}

std::shared_mutex g_cache_mutex;
std::map<std::string, std::vector<Polynomial>> g_cache;

void verify_basis(const GroebnerBasis &gb);

} // namespace

void set_selfcheck(bool enabled) { g_selfcheck.store(enabled); }
bool selfcheck_enabled() { return g_selfcheck.load(); }

bool GroebnerBasis::is_unit_ideal() const {
    return gens.size() == 1 && gens.front().is_constant() && !gens.front().is_zero();
}

std::pair<Exponents, FieldElement> leading_term(const Polynomial &f, const MonomialOrder &order) {
    return leading(f.mp(), order);
}

GroebnerBasis groebner(const std::vector<Polynomial> &gens, const ContextPtr &ctx, MonomialOrder order) {
    for (const auto &g : gens) require_same_context(g.context(), ctx);
    GroebnerBasis out;
    out.ctx = ctx;
    out.order = order;
    out.source = gens;

    std::string key = cache_key(gens, ctx, order);
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) {
            out.gens = it->second;
            return out;
        }
    }

    std::vector<VarPoly> in;
    for (const auto &g : gens) in.push_back(g.mp());
    std::vector<VarPoly> basis = buchberger(std::move(in), order);
    for (auto &p : basis) out.gens.emplace_back(ctx, std::move(p));

    if (selfcheck_enabled()) verify_basis(out);

    {
        std::unique_lock lock(g_cache_mutex);
        g_cache.emplace(key, out.gens);
    }
    return out;
}

MembershipCertificate normal_form(const Polynomial &f, const GroebnerBasis &gb) {
    require_same_context(f.context(), gb.ctx);
    std::vector<VarPoly> basis;
    for (const auto &g : gb.gens) basis.push_back(g.mp());
    Division d = divide(f.mp(), basis, gb.order);
    MembershipCertificate cert;
    for (auto &c : d.cofactors) cert.cofactors.emplace_back(gb.ctx, std::move(c));
    cert.remainder = Polynomial(gb.ctx, d.remainder);
    if (selfcheck_enabled()) {
        Polynomial acc = cert.remainder;
        for (size_t i = 0; i < gb.gens.size(); ++i) acc = acc + cert.cofactors[i] * gb.gens[i];
        if (!(acc == f)) throw std::logic_error("groebner: certificate failed to reconstruct its input");
    }
    return cert;
}

namespace {

void verify_basis(const GroebnerBasis &gb) {
    for (size_t i = 0; i < gb.gens.size(); ++i) {
        for (size_t j = i + 1; j < gb.gens.size(); ++j) {
            VarPoly s = s_polynomial(gb.gens[i].mp(), gb.gens[j].mp(), gb.order);
            std::vector<VarPoly> basis;
            for (const auto &g : gb.gens) basis.push_back(g.mp());
            if (!divide(s, basis, gb.order).remainder.is_zero())
                throw std::logic_error("groebner: S-polynomial does not reduce to zero");
        }
    }
}

} // namespace

MembershipResult ideal_member(const Polynomial &f, const std::vector<Polynomial> &gens, const ContextPtr &ctx) {
    GroebnerBasis gb = groebner(gens, ctx);
    MembershipResult out;
    out.certificate = normal_form(f, gb);
    out.member = out.certificate.remainder.is_zero();
    return out;
}

namespace {

std::string fresh_var_name(const RingContext &ctx) {
    std::string name = "_t";
    auto taken = [&](const std::string &s) {
        return ctx.var_index(s) >= 0 || ctx.param_index(s) >= 0;
    };
    while (taken(name)) name += "_";
    return name;
}

} // namespace

bool radical_member(const Polynomial &f, const std::vector<Polynomial> &gens, const ContextPtr &ctx) {
    if (f.is_zero()) return true;
    // 1 in <gens, 1 - t f> over the extended ring.
    std::vector<std::string> vars = ctx->vars;
    vars.push_back(fresh_var_name(*ctx));
    std::map<std::string, FieldElement> deltas;
    for (int i = 0; i < ctx->nparams(); ++i) deltas[ctx->params[i]] = ctx->param_deltas[i];
    ContextPtr ext = make_context(vars, ctx->params, deltas);
    int n = ctx->nvars();
    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;
    std::vector<Polynomial> lifted;
    for (const auto &g : gens) lifted.emplace_back(ext, g.mp().remap(n + 1, embed));
    Polynomial tf(ext, f.mp().remap(n + 1, embed));
    Polynomial t = Polynomial::variable(ext, n);
    lifted.push_back(Polynomial::rational(ext, Rational(1)) - t * tf);
    return groebner(lifted, ext).is_unit_ideal();
}

bool radical_equal(const std::vector<Polynomial> &a, const std::vector<Polynomial> &b, const ContextPtr &ctx) {
    for (const auto &f : a) {
        if (!radical_member(f, b, ctx)) return false;
    }
    for (const auto &f : b) {
        if (!radical_member(f, a, ctx)) return false;
    }
    return true;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial> &gens, const ContextPtr &ctx,
                                  const std::set<std::string> &drop) {
    for (const auto &name : drop) {
        if (ctx->var_index(name) < 0) throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    }
    if (drop.empty()) return gens;
    int n = ctx->nvars();
    // Reorder so dropped variables come first, then use a block order.
    std::vector<std::string> reordered;
    std::vector<int> pos_map(n);
    for (int i = 0; i < n; ++i) {
        if (drop.count(ctx->vars[i])) {
            pos_map[i] = static_cast<int>(reordered.size());
            reordered.push_back(ctx->vars[i]);
        }
    }
    int split = static_cast<int>(reordered.size());
    for (int i = 0; i < n; ++i) {
        if (!drop.count(ctx->vars[i])) {
            pos_map[i] = static_cast<int>(reordered.size());
            reordered.push_back(ctx->vars[i]);
        }
    }
    std::map<std::string, FieldElement> deltas;
    for (int i = 0; i < ctx->nparams(); ++i) deltas[ctx->params[i]] = ctx->param_deltas[i];
    ContextPtr perm = make_context(reordered, ctx->params, deltas);
    std::vector<Polynomial> lifted;
    for (const auto &g : gens) lifted.emplace_back(perm, g.mp().remap(n, pos_map));
    GroebnerBasis gb = groebner(lifted, perm, MonomialOrder::block(split));

    std::vector<int> back(n);
    for (int i = 0; i < n; ++i) back[pos_map[i]] = i;
    std::vector<Polynomial> out;
    for (const auto &g : gb.gens) {
        bool pure = true;
        for (const auto &[e, c] : g.mp().terms()) {
            for (int i = 0; i < split; ++i) {
                if (e[i] != 0) pure = false;
            }
        }
        if (pure) out.emplace_back(ctx, g.mp().remap(n, back));
    }
    return out;
}

std::optional<int> krull_dimension(const std::vector<Polynomial> &gens, const ContextPtr &ctx) {
    GroebnerBasis gb = groebner(gens, ctx, MonomialOrder::grevlex());
    if (gb.is_unit_ideal()) return std::nullopt;
    int n = ctx->nvars();
    if (n > 62) throw std::invalid_argument("krull_dimension: too many variables");
    std::vector<uint64_t> supports;
    for (const auto &g : gb.gens) {
        Exponents lt = leading_term(g, gb.order).first;
        uint64_t mask = 0;
        for (int i = 0; i < n; ++i) {
            if (lt[i] > 0) mask |= uint64_t(1) << i;
        }
        supports.push_back(mask);
    }
    // Largest variable set containing no leading-term support.
    int best = 0;
    auto independent = [&](uint64_t mask) {
        for (uint64_t s : supports) {
            if ((s & mask) == s) return false;
        }
        return true;
    };
    std::vector<std::pair<int, uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [idx, mask] = stack.back();
        stack.pop_back();
        best = std::max(best, __builtin_popcountll(mask));
        if (idx >= n) continue;
        int remaining = n - idx;
        if (__builtin_popcountll(mask) + remaining <= best) continue;
        uint64_t with = mask | (uint64_t(1) << idx);
        if (independent(with)) stack.push_back({idx + 1, with});
        stack.push_back({idx + 1, mask});
    }
    return best;
}

} // namespace dvkit
