#pragma once

#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "curvemass/poly.hpp"

namespace curvemass {

/// Default cap on the number of elements any exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// F_{p^m} presented as F_p[t]/(modulus). Coefficients are listed constant term first.
struct ExtFieldSpec {
  std::uint32_t p = 2;
  unsigned m = 1;
  std::vector<std::uint32_t> modulus{0, 1};

  std::uint64_t order() const;
  std::string describe() const;
  friend bool operator==(const ExtFieldSpec&, const ExtFieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Ben-Or irreducibility test for a monic polynomial over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Lexicographically smallest monic irreducible of degree m over F_p, where the
/// lower coefficients (constant first) are read as base-p digits of an integer.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned m);

/// Spec for F_{p^m} with the modulus chosen by find_irreducible.
ExtFieldSpec standard_field_spec(std::uint32_t p, unsigned m);

/// Throws InvalidArgument unless p is prime and the modulus is monic, of degree m and irreducible.
void validate(const ExtFieldSpec& spec);

/// Arithmetic in a finite field. Elements are encoded as integers whose base-p
/// digits are the coefficients of 1, t, t^2, ... so that 0..p-1 is the prime field.
/// Cheap to copy; the lookup tables are shared and immutable.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Fields up to this size use discrete log tables for multiplication.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  /// Largest supported field size (elements must fit the encoding).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  explicit FiniteField(const ExtFieldSpec& spec);
  static FiniteField prime(std::uint32_t p);
  static FiniteField standard(std::uint32_t p, unsigned m);

  const ExtFieldSpec& spec() const;
  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long k) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a == 0; }

  /// True for 0 and for nonzero squares.
  bool is_square(Elem a) const;
  /// Absolute trace to F_p, as an integer in [0, p).
  std::uint32_t trace(Elem a) const;
  /// The unique square root in characteristic 2.
  Elem sqrt_char2(Elem a) const;
  /// Fixed primitive element (smallest encoding that generates the unit group).
  Elem generator() const;
  std::uint32_t digit(Elem a, unsigned i) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

using FieldPoly = DensePoly<FiniteField>;

/// Every element of the field, in encoding order.
std::ranges::iota_view<std::uint32_t, std::uint32_t> field_elements(const ExtFieldSpec& spec,
                                                                     std::uint64_t budget = kDefaultBudget);

/// Field embedding F_{p^e} -> F_{p^{em}} sending t to the smallest root of the
/// small field's modulus.
class Embedding {
 public:
  Embedding(const FiniteField& from, const FiniteField& to);
  FiniteField::Elem operator()(FiniteField::Elem a) const;
  const FiniteField& source() const { return from_; }
  const FiniteField& target() const { return to_; }

 private:
  FiniteField from_;
  FiniteField to_;
  std::vector<FiniteField::Elem> image_;
};

}  // namespace curvemass
