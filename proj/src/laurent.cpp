#include "specinf/laurent.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "specinf/errors.hpp"

namespace specinf {

LaurentPolynomial::LaurentPolynomial(int arity, TermMap terms)
    : arity_(arity), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Rational LaurentPolynomial::coeff(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
    LaurentPolynomial r(arity_);
    if (c == 0) return r;
    for (const auto& [m, cf] : terms_) r.terms_.emplace(m, cf * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return *this * Rational(-1); }

LaurentPolynomial LaurentPolynomial::monomial(int arity, const ExponentVector& m,
                                              const Rational& c) {
    LaurentPolynomial r(arity);
    r.add_term(m, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::constant(int arity, const Rational& c) {
    return monomial(arity, ExponentVector(arity, 0), c);
}

LaurentPolynomial log_derivative(const LaurentPolynomial& f, int i) {
    LaurentPolynomial r(f.arity());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] != 0) r.add_term(m, c * Rational(m[i]));
    }
    return r;
}

LaurentPolynomial restrict_support(const LaurentPolynomial& f,
                                   const std::vector<ExponentVector>& support) {
    std::set<ExponentVector> keep(support.begin(), support.end());
    LaurentPolynomial r(f.arity());
    for (const auto& [m, c] : f.terms())
        if (keep.count(m)) r.add_term(m, c);
    return r;
}

LaurentPolynomial apply_exponent_matrix(const LaurentPolynomial& f,
                                        const std::vector<std::vector<long>>& U) {
    LaurentPolynomial r(f.arity());
    for (const auto& [m, c] : f.terms()) {
        ExponentVector mm(f.arity(), 0);
        for (int i = 0; i < f.arity(); ++i)
            for (int j = 0; j < f.arity(); ++j) mm[i] += U[i][j] * m[j];
        r.add_term(mm, c);
    }
    return r;
}

std::vector<std::string> default_variables(int arity) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> vars;
    for (int i = 0; i < arity; ++i)
        vars.push_back(i < 3 ? names[i] : "x" + std::to_string(i + 1));
    return vars;
}

std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (long e : m)
            if (e != 0) has_vars = true;
        if (a != 1 || !has_vars) {
            out << to_string(a);
            if (has_vars) out << "*";
        }
        bool firstv = true;
        for (int i = 0; i < f.arity(); ++i) {
            if (m[i] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << vars[i];
            if (m[i] != 1) out << "^" << m[i];
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' ['-'] integer)?
//   base   := number | variable | '(' expr ')'
//   number := integer ('/' integer)?
class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    LaurentPolynomial parse() {
        LaurentPolynomial r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
        return r;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    int arity() const { return static_cast<int>(vars_.size()); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LaurentPolynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPolynomial r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    LaurentPolynomial term() {
        LaurentPolynomial r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    LaurentPolynomial factor() {
        LaurentPolynomial b = base();
        if (eat('^')) {
            long e = integer();
            LaurentPolynomial r = LaurentPolynomial::constant(arity(), Rational(1));
            if (b.term_count() == 1) {
                // monomial power: exponent arithmetic, negative powers allowed
                const auto& [m, c] = *b.terms().begin();
                Rational ce = 1;
                long k = e < 0 ? -e : e;
                for (long i = 0; i < k; ++i) ce *= c;
                if (e < 0) ce = 1 / ce;
                return LaurentPolynomial::monomial(arity(), e * m, ce);
            }
            if (e < 0) throw SyntaxError("negative power of a non-monomial", pos_);
            for (long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) throw SyntaxError("expected integer", start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    LaurentPolynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPolynomial r = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) throw SyntaxError("zero denominator", pos_);
                return LaurentPolynomial::constant(arity(), rational(num, den));
            }
            return LaurentPolynomial::constant(arity(), Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (int i = 0; i < arity(); ++i) {
                if (vars_[i] == name) {
                    ExponentVector m(arity(), 0);
                    m[i] = 1;
                    return LaurentPolynomial::monomial(arity(), m);
                }
            }
            throw UnknownVariable(name);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

LaurentPolynomial parse_laurent(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

} // namespace specinf
