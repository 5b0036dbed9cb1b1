#include "catwalk/monomial.hpp"

#include "catwalk/errors.hpp"

#include <cctype>

namespace catwalk {

bool Monomial::valid_variable_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '+' && c != '-') return false;
    }
    return true;
}

Monomial Monomial::var(const std::string& name, int exponent) {
    if (!valid_variable_name(name))
        throw Error(ErrorCode::InvalidArgument, "bad variable name '" + name + "'");
    if (exponent <= 0)
        throw Error(ErrorCode::InvalidArgument, "monomial exponents must be positive");
    Monomial m;
    m.exps_[name] = exponent;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [_, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [v, e] : o.exps_) out.exps_[v] += e;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : exps_) {
        if (o.exponent(v) < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
    if (!divides(numerator))
        throw Error(ErrorCode::NotDivisible, "monomial " + str() + " does not divide " + numerator.str());
    Monomial out = numerator;
    for (const auto& [v, e] : exps_) {
        auto it = out.exps_.find(v);
        it->second -= e;
        if (it->second == 0) out.exps_.erase(it);
    }
    return out;
}

int Monomial::grlex_compare(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Walk the union of variable names in alphabetical order; the first
    // position where the exponents differ decides, larger exponent wins.
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first) {
            // The monomial owning the alphabetically earlier variable has a
            // positive exponent where the other has zero.
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.exps_.end()) return 1;
    if (ib != b.exps_.end()) return -1;
    return 0;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += '*';
        out += v;
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

} // namespace catwalk
