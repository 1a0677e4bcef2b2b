#include "dvkit/orders.hpp"

namespace dvkit {

int lex_cmp(const Exponents &a, const Exponents &b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int grevlex_cmp_range(const Exponents &a, const Exponents &b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the smaller exponent in the last
    // position where they differ is the larger one.
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int grevlex_cmp(const Exponents &a, const Exponents &b) {
    return grevlex_cmp_range(a, b, 0, static_cast<int>(a.size()));
}

int MonomialOrder::cmp(const Exponents &a, const Exponents &b) const {
    if (a.size() != b.size()) throw std::invalid_argument("MonomialOrder: arity mismatch");
    int n = static_cast<int>(a.size());
    switch (kind) {
    case Kind::Lex:
        return lex_cmp(a, b);
    case Kind::Grevlex:
        return grevlex_cmp(a, b);
    case Kind::Block: {
        int c = grevlex_cmp_range(a, b, 0, split);
        if (c != 0) return c;
        return grevlex_cmp_range(a, b, split, n);
    }
    }
    return 0;
}

} // namespace dvkit
