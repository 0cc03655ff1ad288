#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "curvemass/errors.hpp"
#include "curvemass/rational.hpp"

namespace curvemass {

/// A commutative ring given as a context object acting on a plain element type.
template <class R>
concept RingContext = requires(const R& r, const typename R::Elem& a, long k) {
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.from_int(k) } -> std::convertible_to<typename R::Elem>;
  { r.add(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.neg(a) } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
};

template <class R>
concept FieldContext = RingContext<R> && requires(const R& r, const typename R::Elem& a) {
  { r.inv(a) } -> std::convertible_to<typename R::Elem>;
};

/// The field of rationals as a ring context.
struct RationalField {
  using Elem = BigRat;
  Elem zero() const { return BigRat(0); }
  Elem one() const { return BigRat(1); }
  Elem from_int(long k) const { return BigRat(k); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
};

/// Dense univariate polynomial; coefficient i multiplies x^i. The leading
/// coefficient is nonzero unless the polynomial is zero (empty storage).
template <RingContext R>
class DensePoly {
 public:
  using Elem = typename R::Elem;

  explicit DensePoly(R ring = R{}) : ring_(std::move(ring)) {}
  DensePoly(R ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

  static DensePoly monomial(R ring, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, ring.zero());
    v[k] = std::move(c);
    return DensePoly(std::move(ring), std::move(v));
  }

  const R& ring() const { return ring_; }
  const std::vector<Elem>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const Elem& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Elem operator()(const Elem& x) const {
    Elem acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  DensePoly derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(ring_.mul(ring_.from_int(static_cast<long>(i)), c_[i]));
    return DensePoly(ring_, std::move(d));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.ring_.add(a.coeff(i), b.coeff(i));
    return DensePoly(a.ring_, std::move(r));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.ring_.sub(a.coeff(i), b.coeff(i));
    return DensePoly(a.ring_, std::move(r));
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly(a.ring_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = a.ring_.add(r[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
    return DensePoly(a.ring_, std::move(r));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  R ring_;
  std::vector<Elem> c_;
};

/// Quotient and remainder of a by a nonzero b.
template <FieldContext R>
std::pair<DensePoly<R>, DensePoly<R>> divmod(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const R& ring = a.ring();
  std::vector<typename R::Elem> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const auto lead_inv = ring.inv(bc.back());
  if (a.degree() < db) return {DensePoly<R>(ring), a};
  std::vector<typename R::Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), ring.zero());
  for (int i = a.degree(); i >= db; --i) {
    const auto c = ring.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    quo[static_cast<std::size_t>(i - db)] = c;
    if (ring.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = ring.sub(slot, ring.mul(c, bc[static_cast<std::size_t>(j)]));
    }
  }
  return {DensePoly<R>(ring, std::move(quo)), DensePoly<R>(ring, std::move(rem))};
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <FieldContext R>
DensePoly<R> gcd(DensePoly<R> a, DensePoly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const auto inv = a.ring().inv(a.leading());
  std::vector<typename R::Elem> c = a.coefficients();
  for (auto& x : c) x = a.ring().mul(x, inv);
  return DensePoly<R>(a.ring(), std::move(c));
}

using RatPoly = DensePoly<RationalField>;

}  // namespace curvemass
