#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

namespace specinf {

// Multi-index with integer (possibly negative) entries. The arity is fixed
// per polynomial/session and checked at the operation boundaries.
using ExponentVector = std::vector<long>;

inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ExponentVector operator*(long k, const ExponentVector& a) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline long total_degree(const ExponentVector& a) {
    return std::accumulate(a.begin(), a.end(), 0L);
}

inline bool all_nonnegative(const ExponentVector& a) {
    for (long x : a)
        if (x < 0) return false;
    return true;
}

// |a|_+ = sum_i max(a_i, 0).
inline long plus_norm(const ExponentVector& a) {
    long s = 0;
    for (long x : a) s += std::max(x, 0L);
    return s;
}

// Monomial orders. Storage and printing use graded lex (ties by lex); the
// Groebner engine additionally supports grevlex, plain lex and an
// elimination-block order for torus saturation.
enum class MonomialOrder { Grlex, Grevlex, Lex };

// Returns true if a < b in the given order.
bool monomial_less(const ExponentVector& a, const ExponentVector& b, MonomialOrder order);

// Block order eliminating the first `block` variables: compares the degree in
// the leading block first, then applies `inner` to the full vectors.
bool elimination_less(const ExponentVector& a, const ExponentVector& b, std::size_t block,
                      MonomialOrder inner);

// Comparator for term maps: *descending* grlex, so iteration yields the
// leading term first and printing is deterministic.
struct GrlexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return monomial_less(b, a, MonomialOrder::Grlex);
    }
};

} // namespace specinf
