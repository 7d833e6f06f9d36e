#pragma once

#include <map>
#include <string>
#include <vector>

#include "specinf/exponent.hpp"
#include "specinf/rational.hpp"

namespace specinf {

// Laurent polynomial with exact rational coefficients. Terms are stored in
// descending graded-lex order so that iteration, printing and hashing are
// deterministic. No zero coefficient is ever stored; the zero polynomial is
// the empty map.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexDescending>;

    explicit LaurentPolynomial(int arity) : arity_(arity) {}
    LaurentPolynomial(int arity, TermMap terms);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of x^m (zero if absent).
    Rational coeff(const ExponentVector& m) const;

    // Adds c*x^m, erasing the term if the sum cancels.
    void add_term(const ExponentVector& m, const Rational& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const Rational& c) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    static LaurentPolynomial monomial(int arity, const ExponentVector& m,
                                      const Rational& c = Rational(1));
    static LaurentPolynomial constant(int arity, const Rational& c);

private:
    int arity_;
    TermMap terms_;
};

// x_i * d/dx_i, 0-based index. Maps c*x^m to (c*m_i)*x^m.
LaurentPolynomial log_derivative(const LaurentPolynomial& f, int i);

// Restriction of f to a monomial subset of its support (face truncation).
LaurentPolynomial restrict_support(const LaurentPolynomial& f,
                                   const std::vector<ExponentVector>& support);

// f(x) -> f(x^U) for unimodular U: each exponent m maps to U*m.
LaurentPolynomial apply_exponent_matrix(const LaurentPolynomial& f,
                                        const std::vector<std::vector<long>>& U);

// Canonical text form; parse(print(f)) == f.
std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& vars);

// Parses +, -, *, ^ expressions with integer/rational literals and the
// declared variable names (grammar in docs/expression-grammar.ebnf).
// Throws SyntaxError (with position) or UnknownVariable.
LaurentPolynomial parse_laurent(const std::string& text, const std::vector<std::string>& vars);

// Default variable names x, y, z, x4, x5, ...
std::vector<std::string> default_variables(int arity);

} // namespace specinf
