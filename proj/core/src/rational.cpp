#include "peterson/rational.hpp"

#include <cctype>
#include <ostream>

namespace peterson {

Rational Rational::from_string(const std::string& s) {
    // Accepted forms: [-]digits and [-]digits/digits.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("expected digits in rational literal", i);
    if (num_end == s.size()) {
        Rational r;
        r.v_ = mpq_class(mpz_class(s, 10));
        return r;
    }
    if (s[num_end] != '/') throw ParseError("unexpected character in rational literal", num_end);
    std::size_t den_begin = num_end + 1;
    std::size_t den_end = digits(den_begin);
    if (den_end == den_begin || den_end != s.size())
        throw ParseError("expected digits after '/' in rational literal", den_begin);
    mpz_class num(s.substr(0, num_end), 10);
    mpz_class den(s.substr(den_begin), 10);
    if (den == 0) throw ParseError("zero denominator in rational literal", den_begin);
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned e) const {
    Rational acc(1), base(*this);
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace peterson
