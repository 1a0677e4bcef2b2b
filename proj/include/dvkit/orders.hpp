#ifndef DVKIT_ORDERS_HPP
#define DVKIT_ORDERS_HPP

#include <stdexcept>
#include <vector>

namespace dvkit {

using Exponents = std::vector<int>;

/// Total order on monomials compatible with multiplication. Block orders
/// compare the first `split` positions (grevlex) before the rest, so they
/// eliminate the leading block of variables.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex, Block };
    Kind kind = Kind::Grevlex;
    int split = 0; // meaningful for Block only

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder block(int split) { return {Kind::Block, split}; }

    /// -1 if a < b, 0 if equal, 1 if a > b.
    int cmp(const Exponents &a, const Exponents &b) const;

    bool less(const Exponents &a, const Exponents &b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder &o) const { return kind == o.kind && split == o.split; }
};

int lex_cmp(const Exponents &a, const Exponents &b);
int grevlex_cmp(const Exponents &a, const Exponents &b);
/// grevlex restricted to positions [lo, hi).
int grevlex_cmp_range(const Exponents &a, const Exponents &b, int lo, int hi);

} // namespace dvkit

#endif
