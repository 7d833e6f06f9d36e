#pragma once

#include <cstddef>
#include <vector>

#include "specinf/laurent.hpp"
#include "specinf/matrix.hpp"

namespace specinf {

// Monomial order for the polynomial ring, optionally with an elimination
// block on the first `elim_block` variables.
struct OrderSpec {
    MonomialOrder order = MonomialOrder::Grevlex;
    std::size_t elim_block = 0;

    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return elim_block ? elimination_less(a, b, elim_block, order)
                          : monomial_less(a, b, order);
    }
};

// Ideal in the Laurent ring, represented by generators cleared into the
// nonnegative-exponent polynomial ring; the clearing monomial of each
// generator is recorded.
struct Ideal {
    int arity = 0;
    std::vector<LaurentPolynomial> generators;
    std::vector<ExponentVector> clearing_monomials;
};

// Builds an Ideal from Laurent generators, shifting each by the monomial that
// clears negative exponents. Zero generators are dropped.
Ideal make_ideal(int arity, const std::vector<LaurentPolynomial>& gens);

struct GroebnerBasis {
    OrderSpec order;
    std::vector<LaurentPolynomial> elements; // reduced, monic
};

struct GroebnerBudget {
    std::size_t max_pair_reductions = 200000;
};

// Reduced Groebner basis via Buchberger (normal selection, both criteria).
// Throws ResourceLimit when the pair budget is exhausted.
GroebnerBasis groebner_basis(const std::vector<LaurentPolynomial>& gens, OrderSpec order,
                             const GroebnerBudget& budget = {});

// Full normal form of f modulo the basis.
LaurentPolynomial normal_form(const LaurentPolynomial& f, const GroebnerBasis& gb);

bool is_unit_ideal(const GroebnerBasis& gb);

// I : (x_1...x_n)^inf, computed by eliminating t from {gens, t*x1...xn - 1}.
// The result generates the same ideal as I in the Laurent ring.
Ideal saturate_torus(const Ideal& I, const GroebnerBudget& budget = {});

struct QuotientRing {
    int arity = 0;
    GroebnerBasis gb;
    std::vector<ExponentVector> basis; // standard monomials, basis[0] == 1
    std::size_t dimension = 0;
    std::vector<QMatrix> mult_matrices; // one per variable
};

// Standard-monomial basis and multiplication matrices of k[x]/GB. Throws
// InfiniteQuotient if the staircase is infinite.
QuotientRing quotient_ring(const GroebnerBasis& gb);

// Coordinates of the class of x^m (m may have negative entries) in the
// quotient basis, via products of multiplication matrices and their inverses.
// Throws SingularMultiplication if a needed matrix is singular.
std::vector<Rational> laurent_class_vector(const QuotientRing& Q, const ExponentVector& m);

} // namespace specinf
