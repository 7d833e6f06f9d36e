#include "specinf/spectrum.hpp"

#include <algorithm>
#include <map>

#include "specinf/errors.hpp"

namespace specinf {

Ideal jacobian_ideal(const LaurentPolynomial& f) {
    std::vector<LaurentPolynomial> gens;
    for (int i = 0; i < f.arity(); ++i) gens.push_back(log_derivative(f, i));
    return make_ideal(f.arity(), gens);
}

bool is_nondegenerate(const LaurentPolynomial& f) {
    if (f.is_zero()) throw EmptyPolynomial();
    if (f.arity() > 3) throw ArityLimitExceeded(f.arity());
    NewtonPolytope P = newton_polytope(f);
    if (!P.full_dimensional) throw NotConvenient("non-degeneracy test needs a full-dimensional polytope");
    for (const auto& face : P.faces) {
        LaurentPolynomial fs = restrict_support(f, face.support);
        Ideal I = jacobian_ideal(fs);
        if (I.generators.empty()) return false; // face truncation is constant
        Ideal sat = saturate_torus(I);
        GroebnerBasis gb = groebner_basis(sat.generators, {MonomialOrder::Grevlex, 0});
        if (!is_unit_ideal(gb)) return false;
    }
    return true;
}

QuotientRing jacobian_quotient(const LaurentPolynomial& f, MonomialOrder order,
                               bool check_nondegen) {
    if (!is_convenient(f)) throw NotConvenient();
    if (check_nondegen && !is_nondegenerate(f)) throw Degenerate();
    Ideal sat = saturate_torus(jacobian_ideal(f));
    GroebnerBasis gb = groebner_basis(sat.generators, {order, 0});
    return quotient_ring(gb);
}

long milnor_number(const LaurentPolynomial& f) {
    return static_cast<long>(jacobian_quotient(f).dimension);
}

SpectrumTable spectrum_at_infinity(const LaurentPolynomial& f, MonomialOrder order,
                                   bool check_nondegen) {
    const int n = f.arity();
    NewtonPolytope P = newton_polytope(f);
    QuotientRing Q = jacobian_quotient(f, order, check_nondegen);

    // candidates: nu over all lattice points of n*Gamma(f), grouped by value
    std::map<Rational, std::vector<ExponentVector>> by_nu;
    for (const auto& m : lattice_points(P, n)) {
        Rational nu = newton_degree(P, m);
        if (nu <= Rational(n)) by_nu[nu].push_back(m);
    }

    SpectrumTable S;
    S.arity = n;
    IncrementalRank rank;
    std::size_t prev = 0;
    for (const auto& [gamma, monomials] : by_nu) {
        for (const auto& m : monomials) rank.add_row(laurent_class_vector(Q, m));
        if (rank.rank() > prev) S.entries.emplace_back(gamma, static_cast<long>(rank.rank() - prev));
        prev = rank.rank();
    }
    return S;
}

bool check_spectrum_symmetry(const SpectrumTable& S) {
    Rational n(S.arity);
    for (const auto& [g, d] : S.entries)
        if (S.multiplicity(n - g) != d) return false;
    return true;
}

long spectral_multiplicity(const SpectrumTable& S, const Rational& alpha, long p) {
    return S.multiplicity(alpha + Rational(S.arity - p));
}

} // namespace specinf
