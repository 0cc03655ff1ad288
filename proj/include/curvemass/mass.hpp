#pragma once

#include <map>
#include <utility>
#include <vector>

#include "curvemass/groups.hpp"
#include "curvemass/rational.hpp"
#include "curvemass/zeta.hpp"

namespace curvemass {

/// Stacky mass sum 1/|Aut| of the trivial-bundle component of Bun_G:
/// tau_G q^{(g-1) dim} rho^{c_1} prod_{d_j >= 2} zeta_X(d_j).
BigRat mass_bun(const GroupSpec& spec, const ZetaData& Z);

/// Mass of one connected component of Bun_{GL_n}; the same for every degree.
BigRat mass_gl_component(unsigned n, const ZetaData& Z);

/// All ordered compositions of n into positive parts, in lexicographic order.
std::vector<std::vector<unsigned>> compositions(unsigned n);

/// Closed formula for the semistable mass of rank n, degree d bundles as a sum
/// over ordered compositions of n.
BigRat zagier_ss_mass(unsigned n, long d, const ZetaData& Z);

/// Semistable masses solved from the Harder-Narasimhan stratification.
///
/// Every bundle of rank n and degree d has a unique filtration with semistable
/// quotients of slopes d_1/n_1 > ... > d_k/n_k, and the stratum of that type
/// has mass prod_i M^ss(n_i, d_i) q^{-sum_{i<j} chi_ij} with
/// chi_ij = n_i n_j (1 - g) + d_i n_j - d_j n_i. Summing over all types
/// reproduces mass_gl_component(n), which gives M^ss(n, d) recursively.
///
/// For a fixed composition (n_1..n_k) the degrees range over the lattice
/// points of an open simplicial cone in the partial sums D_i = d_1 + ... + d_i.
/// The summand is q^{linear} times a function periodic in d_i mod n_i, so the
/// sum splits into finitely many residue classes times a geometric series per
/// cone ray; it is evaluated exactly. A ray along which the exponent does not
/// decrease raises ConvergenceError.
///
/// Results are memoized per (n, d mod n). Not thread-safe; use one solver per worker.
class HarderNarasimhanSolver {
 public:
  explicit HarderNarasimhanSolver(ZetaData Z);

  BigRat semistable_mass(unsigned n, long d);
  const ZetaData& zeta() const { return Z_; }

 private:
  BigRat strata_sum(const std::vector<unsigned>& parts, long d);

  ZetaData Z_;
  std::map<std::pair<unsigned, unsigned>, BigRat> memo_;
  std::map<unsigned, BigRat> total_;
};

BigRat hn_ss_mass(unsigned n, long d, const ZetaData& Z);

}  // namespace curvemass
