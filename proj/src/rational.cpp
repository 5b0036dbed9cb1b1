#include "catwalk/rational.hpp"

#include "catwalk/errors.hpp"

#include <cctype>
#include <ostream>

namespace catwalk {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SizeCap: return "SizeCap";
        case ErrorCode::ExplosionCap: return "ExplosionCap";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::NotACorridor: return "NotACorridor";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::BadArity: return "BadArity";
        case ErrorCode::IsChamber: return "IsChamber";
        case ErrorCode::OddCount: return "OddCount";
        case ErrorCode::NotAcyclic: return "NotAcyclic";
        case ErrorCode::Disconnected: return "Disconnected";
    }
    return "Error";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'"); };
    size_t pos = 0;
    auto read_digits = [&]() -> std::string {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        if (out.empty()) fail();
        return out;
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    std::string ipart = read_digits();

    mpz_class num(ipart);
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string fpart = read_digits();
        for (size_t i = 0; i < fpart.size(); ++i) den *= 10;
        num = num * den + mpz_class(fpart);
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = mpz_class(read_digits());
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    if (pos != text.size()) fail();
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace catwalk
