#include "specinf/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "specinf/errors.hpp"

namespace specinf {

namespace {

// Leading term under the order (terms are stored in grlex order, so we scan).
std::pair<ExponentVector, Rational> leading_term(const LaurentPolynomial& f,
                                                 const OrderSpec& ord) {
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector lcm_exp(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime_exp(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

LaurentPolynomial reduce_full(const LaurentPolynomial& f,
                              const std::vector<LaurentPolynomial>& basis,
                              const std::vector<ExponentVector>& lts, const OrderSpec& ord) {
    LaurentPolynomial rem(f.arity());
    LaurentPolynomial work = f;
    while (!work.is_zero()) {
        auto [lm, lc] = leading_term(work, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!divides(lts[i], lm)) continue;
            auto [blm, blc] = leading_term(basis[i], ord);
            LaurentPolynomial factor =
                LaurentPolynomial::monomial(f.arity(), lm - blm, lc / blc);
            work = work - basis[i] * factor;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            LaurentPolynomial head = LaurentPolynomial::monomial(f.arity(), lm, lc);
            work = work - head;
        }
    }
    return rem;
}

} // namespace

Ideal make_ideal(int arity, const std::vector<LaurentPolynomial>& gens) {
    Ideal I;
    I.arity = arity;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        ExponentVector shift(arity, 0);
        for (const auto& [m, c] : g.terms())
            for (int i = 0; i < arity; ++i) shift[i] = std::min(shift[i], m[i]);
        for (long& s : shift) s = -s;
        I.generators.push_back(g * LaurentPolynomial::monomial(arity, shift));
        I.clearing_monomials.push_back(shift);
    }
    return I;
}

GroebnerBasis groebner_basis(const std::vector<LaurentPolynomial>& gens, OrderSpec order,
                             const GroebnerBudget& budget) {
    const int arity = gens.empty() ? 0 : gens.front().arity();
    std::vector<LaurentPolynomial> basis;
    std::vector<ExponentVector> lts;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g);
        lts.push_back(leading_term(g, order).first);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        // normal selection: minimal lcm under the order
        std::size_t pick = 0;
        ExponentVector best = lcm_exp(lts[pairs[0].first], lts[pairs[0].second]);
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            ExponentVector l = lcm_exp(lts[pairs[k].first], lts[pairs[k].second]);
            if (order.less(l, best)) {
                best = l;
                pick = k;
            }
        }
        auto [i, j] = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<long>(pick));

        // Buchberger's first criterion
        if (coprime_exp(lts[i], lts[j])) continue;
        // second (chain) criterion
        ExponentVector lij = lcm_exp(lts[i], lts[j]);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j || !divides(lts[k], lij)) continue;
            auto still_pending = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) !=
                       pairs.end();
            };
            if (!still_pending(i, k) && !still_pending(j, k)) chain = true;
        }
        if (chain) continue;

        if (++steps > budget.max_pair_reductions)
            throw ResourceLimit("Groebner pair budget exhausted");

        auto [lmi, lci] = leading_term(basis[i], order);
        auto [lmj, lcj] = leading_term(basis[j], order);
        LaurentPolynomial spoly =
            basis[i] * LaurentPolynomial::monomial(arity, lij - lmi, Rational(1) / lci) -
            basis[j] * LaurentPolynomial::monomial(arity, lij - lmj, Rational(1) / lcj);
        LaurentPolynomial r = reduce_full(spoly, basis, lts, order);
        if (r.is_zero()) continue;
        std::size_t idx = basis.size();
        basis.push_back(r);
        lts.push_back(leading_term(r, order).first);
        for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
    }

    // autoreduce: drop elements whose LT is divisible by another LT, then
    // fully reduce tails and normalize to monic
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(lts[j], lts[i]) && (lts[j] != lts[i] || j < i)) keep[i] = false;
        }
    std::vector<LaurentPolynomial> kept;
    std::vector<ExponentVector> kept_lts;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            kept.push_back(basis[i]);
            kept_lts.push_back(lts[i]);
        }
    GroebnerBasis gb;
    gb.order = order;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<LaurentPolynomial> others;
        std::vector<ExponentVector> other_lts;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) {
                others.push_back(kept[j]);
                other_lts.push_back(kept_lts[j]);
            }
        LaurentPolynomial r = reduce_full(kept[i], others, other_lts, order);
        if (r.is_zero()) continue;
        auto [lm, lc] = leading_term(r, order);
        gb.elements.push_back(r * (Rational(1) / lc));
    }
    std::sort(gb.elements.begin(), gb.elements.end(),
              [&](const LaurentPolynomial& a, const LaurentPolynomial& b) {
                  return order.less(leading_term(a, order).first,
                                    leading_term(b, order).first);
              });
    return gb;
}

LaurentPolynomial normal_form(const LaurentPolynomial& f, const GroebnerBasis& gb) {
    std::vector<ExponentVector> lts;
    for (const auto& g : gb.elements) lts.push_back(leading_term(g, gb.order).first);
    return reduce_full(f, gb.elements, lts, gb.order);
}

bool is_unit_ideal(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
        if (g.term_count() == 1 && g.terms().begin()->first == ExponentVector(g.arity(), 0))
            return true;
    }
    return false;
}

Ideal saturate_torus(const Ideal& I, const GroebnerBudget& budget) {
    const int n = I.arity;
    // adjoin t as variable 0 and eliminate it
    std::vector<LaurentPolynomial> ext;
    for (const auto& g : I.generators) {
        LaurentPolynomial h(n + 1);
        for (const auto& [m, c] : g.terms()) {
            ExponentVector mm(n + 1, 0);
            for (int i = 0; i < n; ++i) mm[i + 1] = m[i];
            h.add_term(mm, c);
        }
        ext.push_back(h);
    }
    ExponentVector tx(n + 1, 1); // t * x1 ... xn
    LaurentPolynomial rel = LaurentPolynomial::monomial(n + 1, tx) -
                            LaurentPolynomial::constant(n + 1, Rational(1));
    ext.push_back(rel);

    OrderSpec elim{MonomialOrder::Grevlex, 1};
    GroebnerBasis gb = groebner_basis(ext, elim, budget);

    std::vector<LaurentPolynomial> result;
    for (const auto& g : gb.elements) {
        bool t_free = true;
        for (const auto& [m, c] : g.terms())
            if (m[0] != 0) t_free = false;
        if (!t_free) continue;
        LaurentPolynomial h(n);
        for (const auto& [m, c] : g.terms())
            h.add_term(ExponentVector(m.begin() + 1, m.end()), c);
        result.push_back(h);
    }
    if (result.empty())
        result.push_back(LaurentPolynomial::constant(n, Rational(0)));
    return make_ideal(n, result);
}

QuotientRing quotient_ring(const GroebnerBasis& gb) {
    QuotientRing Q;
    Q.gb = gb;
    if (gb.elements.empty()) throw InfiniteQuotient();
    const int n = gb.elements.front().arity();
    Q.arity = n;

    std::vector<ExponentVector> lts;
    for (const auto& g : gb.elements) lts.push_back(leading_term(g, gb.order).first);

    // finite staircase requires a pure power of each variable among the LTs
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& lt : lts) {
            bool pure = lt[i] > 0;
            for (int j = 0; j < n && pure; ++j)
                if (j != i && lt[j] != 0) pure = false;
            if (pure) found = true;
            if (lt == ExponentVector(n, 0)) found = true; // unit ideal
        }
        if (!found) throw InfiniteQuotient();
    }

    // enumerate standard monomials by breadth-first walk of the staircase
    std::map<ExponentVector, std::size_t> index;
    std::vector<ExponentVector> queue;
    ExponentVector one(n, 0);
    auto is_standard = [&](const ExponentVector& m) {
        for (const auto& lt : lts)
            if (divides(lt, m)) return false;
        return true;
    };
    if (is_standard(one)) {
        index[one] = 0;
        queue.push_back(one);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ExponentVector m = queue[head];
        for (int i = 0; i < n; ++i) {
            ExponentVector mm = m;
            ++mm[i];
            if (!is_standard(mm) || index.count(mm)) continue;
            index[mm] = queue.size();
            queue.push_back(mm);
        }
        if (queue.size() > 100000) throw InfiniteQuotient();
    }
    Q.basis = queue;
    Q.dimension = queue.size();

    // multiplication matrices: column j of M_i is NF(x_i * basis[j])
    for (int i = 0; i < n; ++i) {
        QMatrix M(Q.dimension, Q.dimension);
        for (std::size_t j = 0; j < Q.dimension; ++j) {
            ExponentVector mm = Q.basis[j];
            ++mm[i];
            LaurentPolynomial nf =
                normal_form(LaurentPolynomial::monomial(n, mm), gb);
            for (const auto& [m, c] : nf.terms()) M.at(index.at(m), j) = c;
        }
        Q.mult_matrices.push_back(std::move(M));
    }
    return Q;
}

std::vector<Rational> laurent_class_vector(const QuotientRing& Q, const ExponentVector& m) {
    std::vector<Rational> v(Q.dimension, Rational(0));
    if (Q.dimension == 0) return v;
    // locate the basis monomial 1
    for (std::size_t i = 0; i < Q.dimension; ++i)
        if (Q.basis[i] == ExponentVector(Q.arity, 0)) v[i] = 1;
    for (int i = 0; i < Q.arity; ++i) {
        if (m[i] == 0) continue;
        QMatrix M = Q.mult_matrices[i];
        if (m[i] < 0) {
            auto inv = M.inverse();
            if (!inv) throw SingularMultiplication(i);
            M = *inv;
        }
        long k = std::labs(m[i]);
        for (long s = 0; s < k; ++s) v = M * v;
    }
    return v;
}

} // namespace specinf
