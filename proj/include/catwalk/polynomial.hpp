#pragma once

#include "catwalk/monomial.hpp"
#include "catwalk/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace catwalk {

// Sparse multivariate polynomial with exact rational coefficients, kept in
// canonical form: no zero coefficients, terms ordered grlex-greatest first.
// Equality is term-map equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c);
    explicit Polynomial(const Monomial& m, const Rational& c = Rational(1));

    static Polynomial variable(const std::string& name) { return Polynomial(Monomial::var(name)); }

    // Text syntax: terms joined by '+'/'-'; a term is coef, mono, or
    // coef*mono; coef is int, int/int, or an exact decimal; mono is
    // var(^exp)? factors joined by '*'. parse(serialize(p)) == p.
    static Polynomial parse(std::string_view text);
    std::string str() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Pre: is_constant().
    Rational constant_value() const;
    // True for a single term with coefficient 1.
    bool is_monic_monomial() const;
    // Pre: is_monic_monomial().
    const Monomial& monic_monomial() const;

    const TermMap& terms() const { return terms_; }
    int degree() const;
    std::set<std::string> variables() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    // Exact substitution; the assignment must cover every variable.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

// Exact division in the polynomial ring: returns r with r*q == p.
// Throws NotDivisible when no such r exists, DivisionByZero when q == 0.
Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace catwalk
