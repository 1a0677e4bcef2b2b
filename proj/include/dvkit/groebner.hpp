#ifndef DVKIT_GROEBNER_HPP
#define DVKIT_GROEBNER_HPP

#include "dvkit/orders.hpp"
#include "dvkit/ring.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dvkit {

/// Reduced Groebner basis: every element monic, no term of any element
/// divisible by another element's leading term, S-polynomials reduce to 0.
/// `source` records the generators the basis was computed from.
struct GroebnerBasis {
    ContextPtr ctx;
    MonomialOrder order;
    std::vector<Polynomial> gens;
    std::vector<Polynomial> source;

    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return gens.empty(); }
};

/// f = sum cofactors[i] * basis[i] + remainder, with no remainder term
/// divisible by any basis leading term.
struct MembershipCertificate {
    std::vector<Polynomial> cofactors;
    Polynomial remainder;
};

struct MembershipResult {
    bool member = false;
    MembershipCertificate certificate;
};

/// Extra verification on every basis and certificate; enabled by test mains.
void set_selfcheck(bool enabled);
bool selfcheck_enabled();

GroebnerBasis groebner(const std::vector<Polynomial> &gens, const ContextPtr &ctx,
                       MonomialOrder order = MonomialOrder::grevlex());

MembershipCertificate normal_form(const Polynomial &f, const GroebnerBasis &gb);

MembershipResult ideal_member(const Polynomial &f, const std::vector<Polynomial> &gens, const ContextPtr &ctx);

/// f in the radical of <gens>, by the Rabinowitsch trick.
bool radical_member(const Polynomial &f, const std::vector<Polynomial> &gens, const ContextPtr &ctx);

bool radical_equal(const std::vector<Polynomial> &a, const std::vector<Polynomial> &b, const ContextPtr &ctx);

/// Generators of <gens> intersected with the subring omitting `drop`,
/// returned in the original context.
std::vector<Polynomial> eliminate(const std::vector<Polynomial> &gens, const ContextPtr &ctx,
                                  const std::set<std::string> &drop);

/// Dimension of the affine variety of <gens>; nullopt when 1 is in the ideal.
std::optional<int> krull_dimension(const std::vector<Polynomial> &gens, const ContextPtr &ctx);

/// Leading term of f under the order (throws on zero).
std::pair<Exponents, FieldElement> leading_term(const Polynomial &f, const MonomialOrder &order);

} // namespace dvkit

#endif
