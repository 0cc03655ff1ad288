#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curvemass/curves.hpp"
#include "curvemass/poly.hpp"
#include "curvemass/rational.hpp"

namespace curvemass {

/// Z(T) = P(T) / ((1 - T)(1 - qT)) with P(T) = a_0 + a_1 T + ... + a_{2g} T^{2g}.
struct ZetaData {
  std::uint64_t q = 0;
  unsigned g = 0;
  std::vector<BigInt> a;

  RatPoly numerator() const;
  friend bool operator==(const ZetaData&, const ZetaData&) = default;
};

/// B[m-1] = number of closed points of degree m.
struct DegreeSpectrum {
  std::uint64_t q = 0;
  unsigned g = 0;
  std::vector<BigInt> B;
};

/// Rebuilds P(T) from N_1..N_g and the functional equation.
ZetaData zeta_from_counts(std::uint64_t q, unsigned g, std::span<const BigInt> counts);
ZetaData zeta_from_counts(const PointCounts& counts);

/// Checks a_0 = 1, the functional equation, P(1) > 0 and the Weil bound for
/// regenerated counts up to m = 2g + 4. Throws InconsistentCounts.
void validate(const ZetaData& Z);

/// N_1..N_M implied by Z, via Newton's identities on the reciprocal roots.
std::vector<BigInt> regenerate_counts(const ZetaData& Z, unsigned M);

/// h = #Pic^0(X)(F_q) = P(1).
BigInt class_number(const ZetaData& Z);

/// Residue-type constant q^{1-g} P(1) / (q - 1) of the zeta function at s = 1.
BigRat quasi_residue(const ZetaData& Z);

/// zeta_X(s) = P(q^-s) / ((1 - q^-s)(1 - q^{1-s})) for integers s >= 2.
BigRat special_value(const ZetaData& Z, int s);

/// Moebius inversion of point counts into closed-point counts per degree.
DegreeSpectrum degree_spectrum(const PointCounts& counts);

int moebius(unsigned n);

}  // namespace curvemass
