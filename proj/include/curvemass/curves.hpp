#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvemass/field.hpp"
#include "curvemass/rational.hpp"

namespace curvemass {

enum class CurveKind { ProjectiveLine, Hyperelliptic, Plane };

std::string to_string(CurveKind kind);

/// One term c * x^ex * y^ey * z^ez of a homogeneous plane equation.
struct PlaneTerm {
  std::uint32_t coeff = 0;  // base-field element encoding
  unsigned ex = 0, ey = 0, ez = 0;
};

/// Knobs shared by every exhaustive enumeration.
struct CountOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  /// Largest extension degree searched for singular points; 0 picks the model default
  /// (2g+2 for hyperelliptic models, d(d-1) for plane curves of degree d).
  unsigned smoothness_degree = 0;
};

/// A smooth projective curve over F_q given by explicit equations:
/// the projective line, y^2 + h(x) y = f(x), or a homogeneous F(x, y, z) = 0.
class CurveModel {
 public:
  static CurveModel projective_line(ExtFieldSpec base);
  /// h and f are base-field encodings, constant term first. The genus is
  /// read off from deg f, which must be 2g+1 or 2g+2; deg h <= g+1.
  static CurveModel hyperelliptic(ExtFieldSpec base, std::vector<std::uint32_t> h, std::vector<std::uint32_t> f);
  static CurveModel plane(ExtFieldSpec base, unsigned degree, std::vector<PlaneTerm> terms);

  CurveKind kind() const { return kind_; }
  const ExtFieldSpec& base() const { return base_; }
  std::uint64_t q() const { return base_.order(); }
  /// Genus implied by the equation shape (no smoothness check).
  unsigned declared_genus() const { return genus_; }
  const std::vector<std::uint32_t>& h() const { return h_; }
  const std::vector<std::uint32_t>& f() const { return f_; }
  unsigned plane_degree() const { return degree_; }
  const std::vector<PlaneTerm>& terms() const { return terms_; }

  std::string describe() const;

 private:
  CurveModel() = default;

  CurveKind kind_ = CurveKind::ProjectiveLine;
  ExtFieldSpec base_;
  unsigned genus_ = 0;
  std::vector<std::uint32_t> h_, f_;
  unsigned degree_ = 0;
  std::vector<PlaneTerm> terms_;
};

/// N[m-1] = #X(F_{q^m}) for m = 1..M.
struct PointCounts {
  std::uint64_t q = 0;
  unsigned g = 0;
  std::vector<BigInt> N;
};

/// Extension degree up to which smoothness was verified.
struct SmoothnessReport {
  unsigned verified_degree = 0;
  bool truncated_by_budget = false;
};

/// Exhaustively searches for singular points over F_{q^k}, k <= the configured
/// degree (capped by the budget). Throws SingularModel naming a witness.
SmoothnessReport check_smoothness(const CurveModel& model, const CountOptions& opts = {});

/// Genus after verifying smoothness.
unsigned genus_of(const CurveModel& model, const CountOptions& opts = {});

/// #X(F_{q^m}) for the smooth projective model.
std::uint64_t count_points(const CurveModel& model, unsigned m, const CountOptions& opts = {});

/// Counts for m = 1..M; throws WeilViolation if any count is out of bounds.
PointCounts count_series(const CurveModel& model, unsigned M, const CountOptions& opts = {});

/// True when |N - Q - 1| <= 2g sqrt(Q), checked exactly.
bool within_weil_bound(const BigInt& N, const BigInt& Q, unsigned g);

}  // namespace curvemass
