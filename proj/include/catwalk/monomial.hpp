#pragma once

#include <map>
#include <string>
#include <string_view>

namespace catwalk {

// Power product of named variables with positive integer exponents.
// The empty product is 1. Variable names follow [A-Za-z][A-Za-z0-9_+-]*,
// so "a+", "h1" and "d-" are all legal names.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(const std::string& name, int exponent = 1);
    static bool valid_variable_name(std::string_view name);

    bool is_one() const { return exps_.empty(); }
    int degree() const;
    int exponent(const std::string& name) const;
    const std::map<std::string, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Pre: this->divides(o) is false only by caller error; checked.
    Monomial divide_into(const Monomial& numerator) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    // Graded lexicographic order: total degree first, ties broken on the
    // exponent vector over alphabetically sorted variable names.
    static int grlex_compare(const Monomial& a, const Monomial& b);

    // Factors joined by '*', exponents as '^k': "h1^2*q". 1 prints as "1".
    std::string str() const;

private:
    std::map<std::string, int> exps_; // no zero exponents stored
};

// Orders polynomial terms with the grlex-greatest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex_compare(a, b) > 0;
    }
};

} // namespace catwalk
