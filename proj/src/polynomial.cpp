#include "catwalk/polynomial.hpp"

#include "catwalk/errors.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace catwalk {

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial::one()] = c;
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_[m] = c;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial " + str() + " is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Polynomial::is_monic_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one();
}

const Monomial& Polynomial::monic_monomial() const {
    if (!is_monic_monomial())
        throw Error(ErrorCode::InvalidArgument, "polynomial " + str() + " is not a coefficient-1 monomial");
    return terms_.begin()->first;
}

int Polynomial::degree() const {
    // Leading term has maximal degree under grlex.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, _] : terms_) {
        for (const auto& [v, e] : m.exponents()) vars.insert(v);
    }
    return vars;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error(ErrorCode::UnboundVariable, "no value for variable '" + v + "'");
            term *= it->second.pow(static_cast<unsigned long>(e));
        }
        total += term;
    }
    return total;
}

Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Polynomial rest = p;
    Polynomial quotient;
    const auto& qlead = *q.terms().begin();
    while (!rest.is_zero()) {
        const auto& rlead = *rest.terms().begin();
        if (!qlead.first.divides(rlead.first))
            throw Error(ErrorCode::NotDivisible, q.str() + " does not divide " + p.str());
        Polynomial t(qlead.first.divide_into(rlead.first), rlead.second / qlead.second);
        quotient += t;
        rest -= t * q;
    }
    return quotient;
}

// ---------------------------------------------------------------------------
// Text format

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                out += '-';
                mag = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) mag = -c;
        }
        if (m.is_one()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += m.str();
        }
        first = false;
    }
    return out;
}

namespace {

// Lexer for the polynomial text syntax. Variable names may contain '+' and
// '-', so tokens are taken by maximal munch; the serializer always emits
// spaced " + " / " - " between terms, which keeps round-trips unambiguous.
struct Lexer {
    std::string_view text;
    size_t pos = 0;

    struct Token {
        enum Kind { Number, Var, Plus, Minus, Star, Slash, Caret, End } kind;
        std::string value; // Number digits or variable name
    };

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError,
                    "bad polynomial text at offset " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    Token next() {
        skip_ws();
        if (pos >= text.size()) return {Token::End, ""};
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
                digits += text[pos++];
            return {Token::Number, digits};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            name += text[pos++];
            while (pos < text.size()) {
                char d = text[pos];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '+' || d == '-')
                    name += text[pos++];
                else
                    break;
            }
            return {Token::Var, name};
        }
        ++pos;
        switch (c) {
            case '+': return {Token::Plus, ""};
            case '-': return {Token::Minus, ""};
            case '*': return {Token::Star, ""};
            case '/': return {Token::Slash, ""};
            case '^': return {Token::Caret, ""};
            default: --pos; fail(std::string("unexpected character '") + c + "'");
        }
    }
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    Lexer lex{text};
    using Token = Lexer::Token;

    Polynomial result;
    Token tok = lex.next();
    if (tok.kind == Token::End) lex.fail("empty input");

    bool expect_term = true;
    bool negative = false;
    while (tok.kind != Token::End) {
        if (expect_term) {
            // Optional sign run before the first factor.
            while (tok.kind == Token::Plus || tok.kind == Token::Minus) {
                if (tok.kind == Token::Minus) negative = !negative;
                tok = lex.next();
            }
            Rational coef(1);
            Monomial mono;
            bool saw_factor = false;
            for (;;) {
                if (tok.kind == Token::Number) {
                    Rational value = Rational::parse(tok.value);
                    tok = lex.next();
                    if (tok.kind == Token::Slash) {
                        tok = lex.next();
                        if (tok.kind != Token::Number) lex.fail("expected denominator");
                        if (tok.value.find('.') != std::string::npos) lex.fail("decimal denominator");
                        Rational den = Rational::parse(tok.value);
                        value = value / den;
                        tok = lex.next();
                    }
                    coef *= value;
                    saw_factor = true;
                } else if (tok.kind == Token::Var) {
                    std::string name = tok.value;
                    int exp = 1;
                    tok = lex.next();
                    if (tok.kind == Token::Caret) {
                        tok = lex.next();
                        if (tok.kind != Token::Number || tok.value.find('.') != std::string::npos)
                            lex.fail("expected integer exponent");
                        exp = std::stoi(tok.value);
                        if (exp <= 0) lex.fail("exponent must be positive");
                        tok = lex.next();
                    }
                    mono = mono * Monomial::var(name, exp);
                    saw_factor = true;
                } else {
                    lex.fail("expected a coefficient or variable");
                }
                if (tok.kind == Token::Star) {
                    tok = lex.next();
                    continue;
                }
                break;
            }
            if (!saw_factor) lex.fail("empty term");
            if (negative) coef = -coef;
            result += Polynomial(mono, coef);
            negative = false;
            expect_term = false;
        } else {
            if (tok.kind == Token::Plus) {
                negative = false;
            } else if (tok.kind == Token::Minus) {
                negative = true;
            } else {
                lex.fail("expected '+' or '-' between terms");
            }
            tok = lex.next();
            expect_term = true;
        }
    }
    if (expect_term) lex.fail("dangling sign");
    return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

} // namespace catwalk
