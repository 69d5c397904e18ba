#include "peterson/parser.hpp"

#include <cctype>
#include <string>

namespace peterson {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::string read_digits(Cursor& cur) {
    std::string out;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        out.push_back(cur.text[cur.pos++]);
    return out;
}

Rational read_rational(Cursor& cur) {
    std::size_t start = cur.pos;
    std::string num = read_digits(cur);
    if (num.empty()) throw ParseError("expected number", start);
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        std::size_t den_pos = cur.pos;
        std::string den = read_digits(cur);
        if (den.empty()) throw ParseError("expected denominator digits", den_pos);
        return Rational::from_string(num + "/" + den);
    }
    return Rational::from_string(num);
}

std::string read_identifier(Cursor& cur) {
    std::string out;
    auto is_ident = [](char c, bool first) {
        unsigned char u = static_cast<unsigned char>(c);
        return std::isalpha(u) || c == '_' || (!first && std::isdigit(u));
    };
    if (cur.pos < cur.text.size() && is_ident(cur.text[cur.pos], true)) {
        out.push_back(cur.text[cur.pos++]);
        while (cur.pos < cur.text.size() && is_ident(cur.text[cur.pos], false))
            out.push_back(cur.text[cur.pos++]);
    }
    return out;
}

unsigned read_exponent(Cursor& cur) {
    std::size_t start = cur.pos;
    std::string digits = read_digits(cur);
    if (digits.empty()) throw ParseError("expected exponent digits", start);
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(std::stoul(digits));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, VariableSetPtr vars, MonomialOrder order) {
    Cursor cur{text};
    std::vector<Term> terms;

    bool first_term = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first_term = false;

        cur.skip_space();
        if (cur.done()) throw ParseError("dangling sign at end of input", cur.pos);

        Rational coeff(sign);
        Monomial mono(vars->size());
        bool saw_factor = false;
        while (true) {
            cur.skip_space();
            std::size_t factor_pos = cur.pos;
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= read_rational(cur);
            } else {
                std::string name = read_identifier(cur);
                if (name.empty()) throw ParseError("expected coefficient or variable", factor_pos);
                auto idx = vars->index_of(name);
                if (!idx) throw ParseError("unknown variable '" + name + "'", factor_pos);
                unsigned e = 1;
                if (cur.eat('^')) e = read_exponent(cur);
                mono.exponents[*idx] += e;
            }
            saw_factor = true;
            if (!cur.eat('*')) break;
        }
        if (!saw_factor) throw ParseError("empty term", cur.pos);
        terms.push_back({std::move(mono), coeff});
    }
    if (terms.empty()) throw ParseError("empty polynomial", 0);
    return Polynomial::from_terms(std::move(vars), std::move(order), std::move(terms));
}

}  // namespace peterson
