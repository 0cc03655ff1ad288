#include "curvemass/zeta.hpp"

#include "curvemass/errors.hpp"

namespace curvemass {

RatPoly ZetaData::numerator() const {
  std::vector<BigRat> c;
  c.reserve(a.size());
  for (const auto& x : a) c.emplace_back(x);
  return RatPoly(RationalField{}, std::move(c));
}

ZetaData zeta_from_counts(std::uint64_t q, unsigned g, std::span<const BigInt> counts) {
  if (q < 2) throw InvalidArgument("q must be a prime power >= 2");
  if (counts.size() != g)
    throw InvalidArgument("zeta_from_counts needs exactly g = " + std::to_string(g) + " counts, got " +
                          std::to_string(counts.size()));
  for (std::size_t m = 0; m < counts.size(); ++m)
    if (counts[m] < 0) throw InvalidArgument("negative point count N_" + std::to_string(m + 1));

  // E(T) = exp(sum_m N_m T^m / m) mod T^{g+1}, via k E_k = sum_{j=1}^k j S_j E_{k-j}.
  std::vector<BigRat> E(g + 1);
  E[0] = BigRat(1);
  for (unsigned k = 1; k <= g; ++k) {
    BigRat acc;
    for (unsigned j = 1; j <= k; ++j) acc += BigRat(counts[j - 1]) * E[k - j];  // j * (N_j / j)
    E[k] = acc / BigRat(k);
  }
  // Multiply by (1 - T)(1 - qT) = 1 - (1 + q) T + q T^2.
  const BigRat c1 = -BigRat(q + 1), c2 = BigRat(q);
  ZetaData Z{q, g, std::vector<BigInt>(2 * g + 1)};
  for (unsigned k = 0; k <= g; ++k) {
    BigRat v = E[k];
    if (k >= 1) v += c1 * E[k - 1];
    if (k >= 2) v += c2 * E[k - 2];
    if (!v.is_integer())
      throw InconsistentCounts("coefficient a_" + std::to_string(k) + " = " + v.str() +
                               " of P(T) is not an integer; the counts do not come from a genus-" + std::to_string(g) +
                               " curve over F_" + std::to_string(q));
    Z.a[k] = v.numerator();
  }
  for (unsigned i = 0; i < g; ++i) Z.a[2 * g - i] = ipow(q, g - i) * Z.a[i];
  validate(Z);
  return Z;
}

ZetaData zeta_from_counts(const PointCounts& counts) {
  if (counts.N.size() < counts.g)
    throw InvalidArgument("need at least g = " + std::to_string(counts.g) + " point counts, have " +
                          std::to_string(counts.N.size()));
  return zeta_from_counts(counts.q, counts.g, std::span<const BigInt>(counts.N.data(), counts.g));
}

std::vector<BigInt> regenerate_counts(const ZetaData& Z, unsigned M) {
  // P(T) = prod (1 - alpha_i T); s_m = sum alpha_i^m satisfies
  // s_m = -m a_m - sum_{i=1}^{m-1} a_i s_{m-i}; N_m = q^m + 1 - s_m.
  std::vector<BigInt> s(M + 1), N;
  auto coeff = [&](unsigned i) -> BigInt { return i < Z.a.size() ? Z.a[i] : BigInt(0); };
  for (unsigned m = 1; m <= M; ++m) {
    BigInt v = -BigInt(m) * coeff(m);
    for (unsigned i = 1; i < m; ++i) v -= coeff(i) * s[m - i];
    s[m] = v;
    N.push_back(ipow(Z.q, m) + 1 - v);
  }
  return N;
}

void validate(const ZetaData& Z) {
  const unsigned g = Z.g;
  if (Z.a.size() != 2 * g + 1)
    throw InconsistentCounts("P(T) must have 2g + 1 = " + std::to_string(2 * g + 1) + " coefficients");
  if (Z.a[0] != 1) throw InconsistentCounts("a_0 = " + Z.a[0].get_str() + ", expected 1");
  for (unsigned i = 0; i < g; ++i)
    if (Z.a[2 * g - i] != ipow(Z.q, g - i) * Z.a[i])
      throw InconsistentCounts("functional equation fails: a_" + std::to_string(2 * g - i) +
                               " != q^" + std::to_string(g - i) + " a_" + std::to_string(i));
  if (class_number(Z) <= 0) throw InconsistentCounts("P(1) = " + class_number(Z).get_str() + " is not positive");
  const auto N = regenerate_counts(Z, 2 * g + 4);
  for (unsigned m = 1; m <= N.size(); ++m)
    if (!within_weil_bound(N[m - 1], ipow(Z.q, m), g))
      throw InconsistentCounts("regenerated N_" + std::to_string(m) + " = " + N[m - 1].get_str() +
                               " violates the Weil bound");
}

BigInt class_number(const ZetaData& Z) {
  BigInt h = 0;
  for (const auto& c : Z.a) h += c;
  return h;
}

BigRat quasi_residue(const ZetaData& Z) {
  return rpow(Z.q, 1 - static_cast<long>(Z.g)) * BigRat(class_number(Z)) / BigRat(Z.q - 1);
}

BigRat special_value(const ZetaData& Z, int s) {
  if (s <= 1) throw InvalidArgument("special_value needs s >= 2 (s = 1 is the pole; use quasi_residue)");
  const BigRat t = rpow(Z.q, -s);
  const BigRat P = Z.numerator()(t);
  return P / ((BigRat(1) - t) * (BigRat(1) - BigRat(Z.q) * t));
}

int moebius(unsigned n) {
  if (n == 0) throw InvalidArgument("moebius(0)");
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

DegreeSpectrum degree_spectrum(const PointCounts& counts) {
  DegreeSpectrum B{counts.q, counts.g, {}};
  const auto M = static_cast<unsigned>(counts.N.size());
  for (unsigned m = 1; m <= M; ++m) {
    BigInt acc = 0;
    for (unsigned d = 1; d <= m; ++d)
      if (m % d == 0) acc += moebius(m / d) * counts.N[d - 1];
    if (acc % m != 0 || acc < 0)
      throw InconsistentCounts("closed-point count B_" + std::to_string(m) + " = " + acc.get_str() + "/" +
                               std::to_string(m) + " is not a nonnegative integer");
    B.B.push_back(acc / m);
  }
  return B;
}

}  // namespace curvemass
