#include "curvemass/asymptotics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "curvemass/errors.hpp"
#include "curvemass/mass.hpp"

namespace curvemass {

unsigned TVData::support() const {
  unsigned s = 0;
  for (const auto& [m, b] : beta)
    if (!b.is_zero()) s = std::max(s, m);
  return s;
}

void validate(const TVData& tv) {
  if (tv.q < 2) throw InvalidArgument("TV data needs q >= 2");
  for (const auto& [m, b] : tv.beta) {
    if (m == 0) throw InvalidArgument("beta index must be >= 1");
    if (b.sign() < 0) throw InvalidArgument("beta_" + std::to_string(m) + " = " + b.str() + " is negative");
  }
  for (std::size_t i = 0; i < tv.groups.size(); ++i) {
    const auto& grp = tv.groups[i];
    if (grp.deg == 0) throw InvalidArgument("group " + std::to_string(i) + ": degree must be >= 1");
    if (grp.gamma.sign() < 0) throw InvalidArgument("group " + std::to_string(i) + ": gamma must be >= 0");
    if (grp.L.sign() <= 0) throw InvalidArgument("group " + std::to_string(i) + ": L = " + grp.L.str() + " is not positive");
  }
}

namespace {

// Lower bound on sqrt(n): exact for squares, else floor(sqrt(n 4^k)) / 2^k.
BigRat sqrt_lower(const BigInt& n) {
  if (is_perfect_square(n)) return BigRat(isqrt(n));
  constexpr unsigned long kBits = 64;
  BigInt scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * kBits);
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kBits);
  return BigRat(isqrt(scaled), den);
}

// Weight of -log_q(1 - q^{-m}) in the tail: the bound x / ((1 - x) ln q).
double log_ratio_bound(std::uint64_t q, unsigned m) {
  const double x = std::pow(static_cast<double>(q), -static_cast<double>(m));
  return x / ((1 - x) * std::log(static_cast<double>(q)));
}

// Accumulates weight * log_q(ratio) in the given order. Both rhs_group and
// rhs_general go through here so that specialized instances agree bit for bit.
struct LogSum {
  std::uint64_t q;
  double acc = 0;
  double magnitude = 0;
  std::size_t terms = 0;

  void add(const BigRat& weight, const BigRat& ratio) {
    if (weight.is_zero()) return;
    const double t = weight.to_double() * log_base(ratio, q);
    acc += t;
    magnitude += std::fabs(t);
    ++terms;
  }
  // Floating error allowance on acc.
  double slack() const { return 4.0 * DBL_EPSILON * static_cast<double>(terms + 2) * (magnitude + 1.0); }
};

}  // namespace

BigRat tv_bound(const TVData& tv) {
  validate(tv);
  BigRat total;
  for (const auto& [m, b] : tv.beta) {
    if (b.is_zero()) continue;
    const BigRat root = sqrt_lower(ipow(tv.q, m));
    total += BigRat(m) * b / (root - BigRat(1));
  }
  return total;
}

bool is_feasible(const TVData& tv) { return tv_bound(tv) <= BigRat(1); }

EmpiricalTV empirical_tv(const std::vector<DegreeSpectrum>& family, unsigned M) {
  if (family.empty()) throw InvalidArgument("empirical TV data needs a nonempty family");
  if (M == 0) throw InvalidArgument("truncation must be >= 1");
  EmpiricalTV out;
  out.tv.q = family.front().q;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& s = family[i];
    if (s.g == 0) throw InvalidArgument("family member " + std::to_string(i) + " has genus 0");
    if (s.q != out.tv.q) throw InvalidArgument("family member " + std::to_string(i) + " is over a different field");
    if (s.B.size() < M)
      throw InvalidArgument("family member " + std::to_string(i) + " has only " + std::to_string(s.B.size()) +
                            " closed-point counts, need " + std::to_string(M));
    std::vector<BigRat> row;
    for (unsigned m = 1; m <= M; ++m) row.push_back(BigRat(s.B[m - 1], BigInt(s.g)));
    out.quotients.push_back(std::move(row));
  }
  for (unsigned m = 1; m <= M; ++m) out.tv.beta[m] = out.quotients.back()[m - 1];
  return out;
}

double tail_bound(const TVData& tv, unsigned M, unsigned factors) {
  if (tv.support() <= M) return 0;
  const double q = static_cast<double>(tv.q);
  if (is_feasible(tv)) {
    // beta_m <= (q^{m/2} - 1) / m gives terms <= q^{-m/2} / (m ln q); sum the geometric tail.
    const double lead = std::pow(q, -(static_cast<double>(M) + 1) / 2.0);
    return factors * lead / ((1 - 1 / std::sqrt(q)) * (M + 1) * std::log(q));
  }
  double total = 0;
  for (const auto& [m, b] : tv.beta)
    if (m > M && !b.is_zero()) total += b.to_double() * log_ratio_bound(tv.q, m);
  // to_double and the sum may round down; widen by a relative margin.
  return factors * total * (1 + 1e-12);
}

RhsValue rhs_group(const TVData& tv, const GroupSpec& spec, unsigned M) {
  validate(tv);
  validate(spec);
  if (M == 0) throw InvalidArgument("truncation must be >= 1");
  LogSum sum{tv.q};
  for (const auto& [r, b] : tv.beta) {
    if (r > M) break;
    sum.add(b, mass_ratio(spec, tv.q, r));
  }
  RhsValue out;
  out.sum_term = -sum.acc;
  out.value = static_cast<double>(spec.dim) + out.sum_term;
  const double tail = tail_bound(tv, M, static_cast<unsigned>(spec.degrees.size()));
  out.tail = tail + (tail > 0 ? sum.slack() : 0.0);
  return out;
}

RhsValue rhs_pic(const TVData& tv, unsigned M) { return rhs_group(tv, builtin_group(GroupFamily::Gm, 1), M); }

GeneralRhs rhs_general(const std::vector<LocalGroup>& groups, std::uint64_t q, unsigned d_bound) {
  if (q < 2) throw InvalidArgument("q must be >= 2");
  if (d_bound == 0) throw InvalidArgument("stalk dimension bound must be >= 1");
  LogSum sum{q};
  GeneralRhs out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& grp = groups[i];
    if (grp.L.sign() <= 0) throw InvalidArgument("group " + std::to_string(i) + ": L = " + grp.L.str() + " is not positive");
    if (grp.gamma.sign() < 0) throw InvalidArgument("group " + std::to_string(i) + ": gamma must be >= 0");
    if (grp.deg == 0) throw InvalidArgument("group " + std::to_string(i) + ": degree must be >= 1");
    sum.add(grp.gamma, grp.L);
    const double envelope = 3.0 * d_bound * std::pow(static_cast<double>(q), -static_cast<double>(grp.deg) / 2.0);
    if (std::fabs(log_base(grp.L, q)) > envelope) {
      out.within_envelope = false;
      out.violations.push_back(i);
    }
  }
  out.value = -sum.acc;
  return out;
}

std::vector<LhsPoint> lhs_sequence(const std::vector<ZetaData>& family, const GroupSpec& spec) {
  std::vector<LhsPoint> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& Z = family[i];
    if (Z.g == 0) throw InvalidArgument("family member " + std::to_string(i) + " has genus 0");
    LhsPoint pt;
    pt.g = Z.g;
    pt.mass = mass_bun(spec, Z);
    pt.value = log_base(pt.mass, Z.q) / Z.g;
    out.push_back(std::move(pt));
  }
  return out;
}

DominanceTable dominance_check(const TVData& tv, unsigned n, unsigned M) {
  if (n == 0 || n > 6) throw InvalidArgument("dominance check supports 1 <= n <= 6");
  std::map<unsigned, double> rhs;
  for (unsigned k = 1; k <= n; ++k) rhs[k] = rhs_group(tv, builtin_group(GroupFamily::GL, k), M).value;
  DominanceTable table;
  table.n = n;
  double best_other = -std::numeric_limits<double>::infinity();
  double trivial = 0;
  for (const auto& parts : compositions(n)) {
    double e = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) e += parts[i] * parts[j];
    for (auto p : parts) e += rhs[p];
    if (parts.size() == 1) trivial = e;
    else best_other = std::max(best_other, e);
    table.rows.push_back({parts, e});
  }
  table.dominant = trivial > best_other;
  return table;
}

ConvergenceReport convergence_report(const std::vector<PointCounts>& family, const GroupSpec& spec, unsigned M) {
  if (family.empty()) throw InvalidArgument("convergence report needs a nonempty family");
  if (M == 0) throw InvalidArgument("truncation must be >= 1");
  ConvergenceReport rep;
  rep.group = spec.name;
  rep.trunc = M;
  std::vector<DegreeSpectrum> spectra;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& pc = family[i];
    if (pc.g == 0) throw InvalidArgument("family member " + std::to_string(i) + " has genus 0");
    if (i > 0 && pc.g < family[i - 1].g) throw InvalidArgument("family must be sorted by genus");
    if (pc.q != family.front().q) throw InvalidArgument("family member " + std::to_string(i) + " is over a different field");
    auto Z = zeta_from_counts(pc);
    PointCounts full{pc.q, pc.g, regenerate_counts(Z, M)};
    spectra.push_back(degree_spectrum(full));
    rep.zetas.push_back(std::move(Z));
  }
  rep.empirical = empirical_tv(spectra, M);
  rep.rhs = rhs_group(rep.empirical.tv, spec, M);
  rep.tv_bound = tv_bound(rep.empirical.tv);
  rep.feasible = rep.tv_bound <= BigRat(1);

  const auto lhs = lhs_sequence(rep.zetas, spec);
  const auto n = spec.gl_rank();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    ReportRow row;
    row.index = i;
    row.g = lhs[i].g;
    row.mass = lhs[i].mass;
    row.lhs = lhs[i].value;
    row.gap = std::fabs(row.lhs - rep.rhs.value);
    if (n) {
      const BigRat ss = zagier_ss_mass(*n, 0, rep.zetas[i]);
      row.ss_mass = ss;
      row.ss_gap = ss.sign() > 0
                       ? std::fabs(log_base(ss, rep.zetas[i].q) - log_base(lhs[i].mass, rep.zetas[i].q)) / row.g
                       : std::numeric_limits<double>::infinity();
    }
    rep.rows.push_back(std::move(row));
  }
  if (n) {
    if (*n <= 6) rep.dominance = dominance_check(rep.empirical.tv, *n, M);
    bool ok = true;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      if (!std::isfinite(*rep.rows[i].ss_gap)) ok = false;
      if (i > 0 && *rep.rows[i].ss_gap > *rep.rows[i - 1].ss_gap) ok = false;
    }
    rep.ss_gap_nonincreasing = ok;
  }
  rep.note = "finite-genus values only; the limit as g grows is not verifiable from a finite family";
  if (!rep.feasible) rep.note += "; empirical densities exceed the Drinfeld-Vladut bound, tail uses the direct sum";
  return rep;
}

ConvergenceReport convergence_report(const std::vector<CurveModel>& family, const GroupSpec& spec, unsigned M,
                                     const CountOptions& opts) {
  std::vector<PointCounts> counts;
  for (const auto& model : family) {
    const unsigned g = genus_of(model, opts);
    counts.push_back(count_series(model, std::max(g, 1u), opts));
  }
  return convergence_report(counts, spec, M);
}

}  // namespace curvemass
