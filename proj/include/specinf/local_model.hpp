#pragma once

#include <map>
#include <string>
#include <vector>

#include "specinf/exponent.hpp"
#include "specinf/rational.hpp"

namespace specinf {

// Truncation box for the local model: x-exponents in [x_min, x_max],
// v-degree <= v_max, operator degree <= op_degree_max.
struct Truncation {
    long x_min = -8;
    long x_max = 4;
    long v_max = 6;
    long op_degree_max = 6;
};

// Normal-crossing chart with f = x^{-e}; ell x-variables, all e_i >= 1.
struct ChartSpec {
    int ell = 1;
    ExponentVector e;
    Truncation trunc;
};

// Truncated element of O(*P)[v] e^{vf}: finite sum of c * x^m v^j e^{vf}.
class ChartSection {
public:
    using Key = std::pair<ExponentVector, long>; // (x-exponent, v-degree)
    using TermMap = std::map<Key, Rational>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentVector& m, long j, const Rational& c);
    ChartSection operator+(const ChartSection& o) const;
    ChartSection operator-(const ChartSection& o) const;
    ChartSection scaled(const Rational& c) const;
    // multiply by x^m v^j
    ChartSection shifted(const ExponentVector& m, long j) const;
    bool operator==(const ChartSection& o) const { return terms_ == o.terms_; }

    bool within(const Truncation& t) const;

private:
    TermMap terms_;
};

// The generator e^{vf} itself.
ChartSection unit_section(const ChartSpec& spec);

// Polynomial in s with coefficients in Q[hbar], canonical expanded form.
class OperatorPolynomial {
public:
    // coefficient of s^sdeg * hbar^hdeg
    using TermMap = std::map<std::pair<long, long>, Rational>;

    OperatorPolynomial() = default;
    static OperatorPolynomial constant(const Rational& c);
    static OperatorPolynomial term(long sdeg, long hdeg, const Rational& c);

    const TermMap& terms() const { return terms_; }
    void add(long sdeg, long hdeg, const Rational& c);
    OperatorPolynomial operator*(const OperatorPolynomial& o) const;
    OperatorPolynomial operator+(const OperatorPolynomial& o) const;
    bool operator==(const OperatorPolynomial& o) const { return terms_ == o.terms_; }

    long s_degree() const; // -1 for zero
    bool is_monic_in_s() const;
    bool is_hbar_free() const;
    // ascending s-coefficients; requires is_hbar_free()
    std::vector<Rational> univariate() const;

private:
    TermMap terms_;
};

// P_{a,beta}(s) = prod_i prod_{k=1..a_i} (s + (floor(beta e_i) + k)/e_i).
OperatorPolynomial p_poly(const ExponentVector& a, const ExponentVector& e,
                          const Rational& beta);

// (s + beta)^lambda * P_{a,beta}(s).
OperatorPolynomial p_poly_lambda(const ExponentVector& a, long lambda,
                                 const ExponentVector& e, const Rational& beta);

enum class HbarVariant { Alpha, Strict };

// p_{a,alpha}(s,hbar) = prod_i prod_{j=1..a_i} (s + (j + floor(alpha e_i)) hbar / e_i);
// the strict variant runs j = 0..a_i-1 with ceil(alpha e_i).
OperatorPolynomial p_poly_hbar(const ExponentVector& a, const ExponentVector& e,
                               const Rational& alpha, HbarVariant variant);

// v d/dv on a section, using v d/dv (x^m v^j e) = j x^m v^j e + x^{m-e} v^{j+1} e.
// Throws TruncationOverflow when the result leaves the truncation box.
ChartSection vpartial_apply(const ChartSection& sec, const ChartSpec& spec);

// P(v d/dv) applied to a section; P must be hbar-free. No truncation check on
// intermediates; the caller decides what to do with the result.
ChartSection apply_operator(const OperatorPolynomial& P, const ChartSection& sec,
                            const ChartSpec& spec);

// The unique monic Q with P(v d/dv) e^{vf} = Q(v f) e^{vf}, via the operator
// T(s^k) = k s^k + s^{k+1}, Q = P(T)(1). Coefficients ascending in s.
std::vector<Rational> pq_convert(const std::vector<Rational>& P);

// Q(v f) e^{vf} expanded as a section ((v f)^k e = x^{-k e} v^k e).
ChartSection eval_at_vf(const std::vector<Rational>& Q, const ChartSpec& spec);

// One generator of V_beta: x^{c - floor(beta e) - 1 - a} P_{a,lambda,beta}(v d/dv) e^{vf}.
struct VBasisElement {
    ExponentVector a;
    long lambda = 0;
    ExponentVector c;
    ChartSection section;
};

// All decomposition-basis elements whose image lies inside the truncation box.
// Admissible indices have c supported on I(a) = {i : a_i = 0}.
std::vector<VBasisElement> v_basis_elements(const ChartSpec& spec, const Rational& beta,
                                            long max_op_degree);

// Unique V_beta decomposition on the truncated space.
struct VDecomposition {
    Rational beta;
    // (a, lambda) -> coefficient polynomial in x_{I(a)}
    std::map<std::pair<ExponentVector, long>, std::map<ExponentVector, Rational>> coeffs;
};

// Solves the exact linear system; throws NotRepresentable when the section is
// not in V_beta within the truncation.
VDecomposition decompose_Vbeta(const ChartSection& sec, const Rational& beta,
                               const ChartSpec& spec);

// Rebuilds the section from its decomposition (round-trip check).
ChartSection reexpand(const VDecomposition& dec, const ChartSpec& spec);

// V_{<beta} membership test on a decomposition: every nonzero coefficient has
// lambda >= #{i : beta e_i integral} (beta > 0) or lambda >= ell + 1 (beta = 0).
bool in_V_strictly_less(const VDecomposition& dec, const ChartSpec& spec);

// |a - (k-j) e|_+ <= j for all 0 <= j <= k; requires |a|_+ <= k.
bool precision_lemma_check(const ExponentVector& a, const ExponentVector& e, long k);

// Compares the pole-order filtration F_{alpha+p} with
// F'_{alpha+p} = sum_{k+j<=p} (G_k cap V_{alpha+j}) inside the truncation box.
bool filtration_compare(const ChartSpec& spec, const Rational& alpha, long p);

} // namespace specinf
