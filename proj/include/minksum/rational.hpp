#ifndef MINKSUM_RATIONAL_HPP
#define MINKSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "minksum/errors.hpp"

namespace minksum {

// Arbitrary-precision rational scalar. Always held in canonical form:
// gcd(|num|, den) = 1 and den > 0. Every operation is exact, so repeated
// computations yield bit-identical values.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);

    // Accepts "num" or "num/den" with optional leading '-'.
    static Rational parse(const std::string& s);

    // Canonical form: "num" when den == 1, otherwise "num/den".
    std::string str() const;

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace minksum

#endif
