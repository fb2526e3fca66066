#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace atyp {

/// Exact rational scalar.
///
/// Thin value wrapper around GMP's mpq_class. All operators return plain
/// values so that no GMP expression template ever escapes into Eigen's
/// evaluators (raw __gmp_expr temporaries are not safe inside Eigen kernels).
class Rational {
  mpq_class v_;

 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "num" or "num/den" with optional sign.
  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  /// Integer value; throws unless the value is an integer fitting in long.
  long to_long() const;

  /// "num/den", or just "num" for integers.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }

}  // namespace atyp

namespace Eigen {

template <>
struct NumTraits<atyp::Rational> : GenericNumTraits<atyp::Rational> {
  using Real = atyp::Rational;
  using NonInteger = atyp::Rational;
  using Nested = atyp::Rational;
  using Literal = long;

  static inline Real epsilon() { return atyp::Rational(0); }
  static inline Real dummy_precision() { return atyp::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen
