#ifndef MINK3_SCALAR_HPP
#define MINK3_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mink3/errors.hpp"

namespace mink3 {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Element of Q or of a real quadratic field Q(sqrt(d)), stored as
/// a + b*sqrt(d) with rational a, b and squarefree d > 1.
///
/// Canonical form: b == 0 implies d == 1, so plain rationals have a unique
/// representation and equality is structural. Values from distinct
/// irrational fields (d, d' > 1, d != d') refuse to mix.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(1) {}
  Scalar(int v) : a_(v), b_(0), d_(1) {}                // NOLINT(runtime/explicit)
  Scalar(long long v) : a_(v), b_(0), d_(1) {}          // NOLINT(runtime/explicit)
  Scalar(const BigInt& v) : a_(v), b_(0), d_(1) {}      // NOLINT(runtime/explicit)
  Scalar(const BigRat& v) : a_(v), b_(0), d_(1) {}      // NOLINT(runtime/explicit)
  Scalar(BigRat a, BigRat b, unsigned d);

  static Scalar rational(const BigInt& num, const BigInt& den);
  /// sqrt(d) for squarefree d; d == 1 yields the rational 1.
  static Scalar sqrt_of(unsigned d);

  const BigRat& rat_part() const { return a_; }
  const BigRat& quad_part() const { return b_; }
  unsigned field() const { return d_; }
  bool is_rational() const { return d_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign in the real embedding: -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
  friend bool operator<(const Scalar& l, const Scalar& r) { return cmp(l, r) < 0; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return cmp(l, r) <= 0; }
  friend bool operator>(const Scalar& l, const Scalar& r) { return cmp(l, r) > 0; }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return cmp(l, r) >= 0; }

  /// Total order consistent with the real embedding; sign(l - r).
  static int cmp(const Scalar& l, const Scalar& r);

  /// Canonical whitespace-free encoding: "p", "p/q", or
  /// "p/q+r/s*sqrt(d)" with the sign of the sqrt term folded into +/-.
  std::string str() const;

  /// Parses the canonical encoding plus mild relaxations
  /// ("sqrt(3)", "-sqrt(3)/2" is not accepted; coefficients precede sqrt).
  static Scalar parse(std::string_view text);

 private:
  void canonicalize();
  // Lifts both operands into a common field; throws FieldMismatch.
  static unsigned common_field(const Scalar& l, const Scalar& r);

  BigRat a_, b_;
  unsigned d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_squarefree(unsigned n);

}  // namespace mink3

#endif  // MINK3_SCALAR_HPP
