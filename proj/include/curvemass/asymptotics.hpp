#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvemass/curves.hpp"
#include "curvemass/groups.hpp"
#include "curvemass/rational.hpp"
#include "curvemass/zeta.hpp"

namespace curvemass {

/// One group of local factors: its degree, its limit density and the local value L at s = 1.
struct LocalGroup {
  unsigned deg = 1;
  BigRat gamma;
  BigRat L{1};
};

/// Limit densities beta_m of closed points of degree m along a curve family,
/// optionally with a general list of local-factor groups.
struct TVData {
  std::uint64_t q = 0;
  std::map<unsigned, BigRat> beta;
  std::vector<LocalGroup> groups;

  /// Largest m with beta_m != 0, or 0.
  unsigned support() const;
};

/// Throws InvalidArgument on q < 2, m = 0, negative beta or nonpositive L.
void validate(const TVData& tv);

/// sum_m m beta_m / (q^{m/2} - 1), with irrational square roots bounded from
/// below so the result is an upper bound. Exact when every q^m involved is a square.
BigRat tv_bound(const TVData& tv);
bool is_feasible(const TVData& tv);

struct EmpiricalTV {
  TVData tv;
  /// quotients[i][m-1] = B_m(member i) / g_i.
  std::vector<std::vector<BigRat>> quotients;
};

/// beta_m = B_m / g of the last member, m <= M.
EmpiricalTV empirical_tv(const std::vector<DegreeSpectrum>& family, unsigned M);

struct RhsValue {
  double value = 0;
  /// The sum over local factors alone (value minus the dimension term).
  double sum_term = 0;
  /// Bound on |value over all m| - |value truncated at M|.
  double tail = 0;
};

/// 1 - sum_{m <= M} beta_m log_q((q^m - 1) / q^m). Shares its code path with rhs_group.
RhsValue rhs_pic(const TVData& tv, unsigned M);

/// dim - sum_{r <= M} beta_r log_q(|G(F_{q^r})| / q^{r dim}).
RhsValue rhs_group(const TVData& tv, const GroupSpec& spec, unsigned M);

/// Tail bound for truncating at M a sum whose terms are beta_m times
/// -log_q(1 - q^{-m d}) summed over `factors` degrees d >= 1.
double tail_bound(const TVData& tv, unsigned M, unsigned factors);

struct GeneralRhs {
  double value = 0;
  /// True when every |log_q L_r| <= 3 d q^{-deg_r / 2}.
  bool within_envelope = true;
  /// Indices of groups outside the envelope.
  std::vector<std::size_t> violations;
};

/// -sum_r gamma_r log_q L_r over the supplied groups, in order.
GeneralRhs rhs_general(const std::vector<LocalGroup>& groups, std::uint64_t q, unsigned d_bound);

struct LhsPoint {
  unsigned g = 0;
  BigRat mass;
  double value = 0;  // log_q mass / g
};

std::vector<LhsPoint> lhs_sequence(const std::vector<ZetaData>& family, const GroupSpec& spec);

struct DominanceRow {
  std::vector<unsigned> composition;
  double exponent = 0;
};

struct DominanceTable {
  unsigned n = 0;
  std::vector<DominanceRow> rows;
  /// The single-part composition is the strict maximum.
  bool dominant = false;
};

DominanceTable dominance_check(const TVData& tv, unsigned n, unsigned M);

struct ReportRow {
  std::size_t index = 0;
  unsigned g = 0;
  BigRat mass;
  double lhs = 0;
  double gap = 0;
  /// |log_q M^ss_{n,0} - log_q M_{GL_n}| / g, GL specs only.
  std::optional<double> ss_gap;
  std::optional<BigRat> ss_mass;
};

struct ConvergenceReport {
  std::string group;
  unsigned trunc = 0;
  std::vector<ReportRow> rows;
  std::vector<ZetaData> zetas;
  EmpiricalTV empirical;
  RhsValue rhs;
  BigRat tv_bound;
  bool feasible = false;
  std::optional<DominanceTable> dominance;
  /// True when the ss gaps exist and never increase along the family.
  std::optional<bool> ss_gap_nonincreasing;
  std::string note;
};

/// Builds zeta data from at least g counts per member, regenerates counts to M
/// and compares log_q M_G / g with the rhs at the empirical densities.
ConvergenceReport convergence_report(const std::vector<PointCounts>& family, const GroupSpec& spec, unsigned M);
ConvergenceReport convergence_report(const std::vector<CurveModel>& family, const GroupSpec& spec, unsigned M,
                                     const CountOptions& opts = {});

}  // namespace curvemass
