#include "rht/expr.hpp"

#include "rht/errors.hpp"

#include <cctype>

namespace rht {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw ParseError("SyntaxError", "expected an integer", start);
        return s.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
        }
        if (pos == start)
            throw ParseError("SyntaxError", "expected a generator name", start);
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    AlgebraPtr alg;

    bool starts_rational() {
        char c = lex.peek();
        return std::isdigit(static_cast<unsigned char>(c));
    }

    Rational rational() {
        std::string num = lex.integer();
        if (lex.accept('/')) {
            std::size_t den_pos = lex.pos;
            std::string den = lex.integer();
            Rational r(num + "/" + den);
            if (r.get_den() == 0)
                throw ParseError("SyntaxError", "zero denominator", den_pos);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    // gen := identifier ('^' int)?
    std::pair<std::size_t, int> generator_power() {
        lex.skip_ws();
        std::size_t at = lex.pos;
        std::string name = lex.identifier();
        auto idx = alg->index_of(name);
        if (!idx)
            throw ParseError("UnknownGenerator", "unknown generator '" + name + "'", at);
        int e = 1;
        if (lex.accept('^')) {
            lex.skip_ws();
            std::size_t ep = lex.pos;
            std::string exp = lex.integer();
            e = std::stoi(exp);
            if (e < 1)
                throw ParseError("SyntaxError", "powers start at 1", ep);
            if (e > 1 && alg->generator(*idx).degree % 2 != 0)
                throw ParseError("OddPower",
                                 "odd-degree generator '" + name + "' squares to zero", at);
        }
        return {*idx, e};
    }

    Element term() {
        Rational coeff(1);
        std::vector<std::pair<std::size_t, int>> factors;
        if (starts_rational()) {
            coeff = rational();
            if (!lex.accept('*'))
                return Element::monomial(alg, Monomial(), coeff); // constant term
            factors.push_back(generator_power());
        } else {
            factors.push_back(generator_power());
        }
        while (lex.accept('*')) factors.push_back(generator_power());
        // expand through generator products so Koszul signs and odd squares
        // are handled in one place
        Element out = Element::monomial(alg, Monomial(), coeff);
        for (const auto& [idx, e] : factors)
            for (int i = 0; i < e; ++i) out = out * Element::generator(alg, idx);
        return out;
    }

    Element parse() {
        Element out(alg);
        bool neg = false;
        if (lex.accept('-'))
            neg = true;
        else
            lex.accept('+');
        Element t = term();
        out += neg ? -t : t;
        while (!lex.eof()) {
            lex.skip_ws();
            std::size_t at = lex.pos;
            if (lex.accept('+'))
                out += term();
            else if (lex.accept('-'))
                out -= term();
            else
                throw ParseError("SyntaxError", "expected '+' or '-'", at);
        }
        return out;
    }
};

} // namespace

Element parse_element(const std::string& text, AlgebraPtr algebra) {
    Parser p{Lexer{text}, std::move(algebra)};
    return p.parse();
}

} // namespace rht
