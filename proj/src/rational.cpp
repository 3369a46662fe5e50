#include "minksum/rational.hpp"

#include <cctype>
#include <ostream>

namespace minksum {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    const size_t slash = s.find('/');
    const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num_part) || !is_integer_literal(den_part)) {
        throw ParseError("malformed rational literal: \"" + s + "\"");
    }
    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (den == 0) throw ParseError("rational literal with zero denominator: \"" + s + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

std::string Rational::str() const {
    return v_.get_str();  // canonical "num" or "num/den"
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace minksum
