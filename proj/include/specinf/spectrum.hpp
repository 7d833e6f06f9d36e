#pragma once

#include <vector>

#include "specinf/groebner.hpp"
#include "specinf/newton.hpp"

namespace specinf {

// Spectrum at infinity: sorted (gamma, multiplicity) pairs with gamma in [0,n].
struct SpectrumTable {
    int arity = 0;
    std::vector<std::pair<Rational, long>> entries;

    long total_multiplicity() const {
        long s = 0;
        for (const auto& [g, d] : entries) s += d;
        return s;
    }
    long multiplicity(const Rational& gamma) const {
        for (const auto& [g, d] : entries)
            if (g == gamma) return d;
        return 0;
    }
};

// Ideal (x_1 df/dx_1, ..., x_n df/dx_n), cleared into the polynomial ring.
Ideal jacobian_ideal(const LaurentPolynomial& f);

// Quotient model C[x^+-]/J(f): the torus-saturated Jacobian quotient ring.
// Throws NotConvenient / Degenerate / InfiniteQuotient.
QuotientRing jacobian_quotient(const LaurentPolynomial& f,
                               MonomialOrder order = MonomialOrder::Grevlex,
                               bool check_nondegenerate = true);

long milnor_number(const LaurentPolynomial& f);

// Spectrum via the Newton filtration on the Jacobian quotient: candidate
// gamma values are nu(m) over lattice points of n*Gamma(f); delta_gamma are
// the rank jumps of the span of {class(x^m) : nu(m) <= gamma}.
SpectrumTable spectrum_at_infinity(const LaurentPolynomial& f,
                                   MonomialOrder order = MonomialOrder::Grevlex,
                                   bool check_nondegenerate = true);

// True iff the multiset {gamma} equals {n - gamma}.
bool check_spectrum_symmetry(const SpectrumTable& S);

// mu_alpha^n(p) = delta_{alpha + (n-p)}, zero when absent.
long spectral_multiplicity(const SpectrumTable& S, const Rational& alpha, long p);

} // namespace specinf
