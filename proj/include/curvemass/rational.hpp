#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace curvemass {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  template <std::integral I>
  BigRat(I v) : v_(widen(v)) {}      // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : v_(v) {}         // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q" (decimal integers).
  static BigRat parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  BigInt floor() const;
  /// x - floor(x), in [0, 1).
  BigRat frac() const;
  BigRat abs() const;
  BigRat inverse() const;
  BigRat pow(long e) const;

  double to_double() const { return v_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.v_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

 private:
  template <std::integral I>
  static auto widen(I v) {
    if constexpr (std::is_signed_v<I>) return static_cast<long>(v);
    else return static_cast<unsigned long>(v);
  }
  explicit BigRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// base^e as an exact integer.
BigInt ipow(std::uint64_t base, unsigned long e);
/// base^e for a possibly negative exponent.
BigRat rpow(std::uint64_t base, long e);

/// Natural log of |n|, n != 0, accurate for integers of any size.
double ln_abs(const BigInt& n);
/// Natural log of a positive rational. Values near 1 go through log1p.
double ln(const BigRat& x);
/// log base q of a positive rational.
double log_base(const BigRat& x, std::uint64_t q);

/// Integer square root (floor) of a nonnegative integer.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

std::string to_string(const BigInt& n);

}  // namespace curvemass
