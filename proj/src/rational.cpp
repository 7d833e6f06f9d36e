#include "specinf/rational.hpp"

#include "specinf/errors.hpp"
#include <cctype>

namespace specinf {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    // mpq set_str silently skips whitespace; the serialized format has none
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw SyntaxError("whitespace in rational '" + text + "'", 0);
    if (text.empty() || r.set_str(text, 10) != 0)
        throw SyntaxError("malformed rational '" + text + "'", 0);
    if (r.get_den() == 0) throw SyntaxError("zero denominator in '" + text + "'", 0);
    r.canonicalize();
    return r;
}

long floor_long(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

long ceil_long(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

Rational frac_part(const Rational& r) {
    Rational f = r - Rational(floor_long(r));
    f.canonicalize();
    return f;
}

} // namespace specinf
