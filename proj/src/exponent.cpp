#include "specinf/exponent.hpp"

namespace specinf {

static bool lex_less(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool monomial_less(const ExponentVector& a, const ExponentVector& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::Lex:
            return lex_less(a, b);
        case MonomialOrder::Grlex: {
            long da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            return lex_less(a, b);
        }
        case MonomialOrder::Grevlex: {
            long da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            // a < b iff the last nonzero entry of a-b is positive
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i];
            }
            return false;
        }
    }
    return false;
}

bool elimination_less(const ExponentVector& a, const ExponentVector& b, std::size_t block,
                      MonomialOrder inner) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < block; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    return monomial_less(a, b, inner);
}

} // namespace specinf
