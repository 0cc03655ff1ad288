#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvemass/rational.hpp"

namespace curvemass {

/// A split reductive group through the data its point counts depend on:
/// dimension, degrees of the basic invariants (a degree-1 entry per rank of the
/// character lattice) and the Tamagawa constant.
struct GroupSpec {
  std::string name;
  unsigned dim = 0;
  std::vector<unsigned> degrees;
  BigRat tamagawa{1};

  /// Number of degree-1 entries.
  unsigned central_rank() const;
  /// n when the spec is GL_n (dim n^2, degrees 1..n), otherwise nothing.
  std::optional<unsigned> gl_rank() const;
};

enum class GroupFamily { GL, SL, Sp, SOOdd, SOEven, Gm };

GroupFamily parse_group_family(const std::string& name);
std::string to_string(GroupFamily family);

/// Classical groups: GL_n, SL_n, Sp_2n, SO_2n+1, SO_2n (n = rank) and G_m.
GroupSpec builtin_group(GroupFamily family, unsigned n);

/// Throws MalformedGroup unless the spec is usable (positive dim and degrees).
void validate(const GroupSpec& spec);

/// |G(F_Q)| = Q^dim prod_j (1 - Q^{-d_j}) with Q = q^r; must be a positive integer.
BigInt group_order(const GroupSpec& spec, std::uint64_t q, unsigned r = 1);

/// |G(F_{q^r})| / q^{r dim} = prod_j (1 - q^{-r d_j}).
BigRat mass_ratio(const GroupSpec& spec, std::uint64_t q, unsigned r = 1);

}  // namespace curvemass
