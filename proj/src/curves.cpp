#include "curvemass/curves.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "curvemass/errors.hpp"

namespace curvemass {

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::ProjectiveLine: return "projective-line";
    case CurveKind::Hyperelliptic: return "hyperelliptic";
    case CurveKind::Plane: return "plane";
  }
  return "unknown";
}

namespace {

void check_base(const ExtFieldSpec& base) {
  if (base.m > 1) {
    validate(base);
  } else {
    FiniteField check(base);  // validates the prime field spec
    (void)check;
  }
}

std::vector<std::uint32_t> trimmed(std::vector<std::uint32_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void check_coefficients(const std::vector<std::uint32_t>& c, std::uint64_t q, const char* what) {
  for (auto x : c)
    if (x >= q) throw InvalidArgument(std::string(what) + " coefficient " + std::to_string(x) + " is not an element of F_" +
                                      std::to_string(q));
}

std::uint64_t checked_power(std::uint64_t q, unsigned m) {
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (Q > FiniteField::kMaxOrder / q) return FiniteField::kMaxOrder + 1;
    Q *= q;
  }
  return Q;
}

/// The base field and its degree-m extension together with the embedding.
struct Extension {
  FiniteField base;
  FiniteField big;
  Embedding embed;

  Extension(const ExtFieldSpec& spec, unsigned m)
      : base(spec), big(FiniteField::standard(spec.p, spec.m * m)), embed(base, big) {}

  std::vector<FiniteField::Elem> lift(const std::vector<std::uint32_t>& c) const {
    std::vector<FiniteField::Elem> out;
    out.reserve(c.size());
    for (auto x : c) out.push_back(embed(x));
    return out;
  }
};

FiniteField::Elem horner(const FiniteField& F, const std::vector<FiniteField::Elem>& c, FiniteField::Elem x) {
  FiniteField::Elem acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

std::vector<FiniteField::Elem> derivative(const FiniteField& F, const std::vector<FiniteField::Elem>& c) {
  std::vector<FiniteField::Elem> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<long>(i)), c[i]));
  return d;
}

/// Number of y in F with y^2 + b y = c.
unsigned count_quadratic(const FiniteField& F, FiniteField::Elem b, FiniteField::Elem c) {
  if (F.characteristic() == 2) {
    if (b == 0) return 1;
    const auto t = F.div(c, F.mul(b, b));
    return F.trace(t) == 0 ? 2 : 0;
  }
  const auto disc = F.add(F.mul(b, b), F.mul(F.from_int(4), c));
  if (disc == 0) return 1;
  return F.is_square(disc) ? 2 : 0;
}

template <class Fn>
std::uint64_t parallel_sum(std::uint64_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || n < 4096) return fn(std::uint64_t{0}, n);
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, n));
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t lo = n * j / jobs, hi = n * (j + 1) / jobs;
    pool.emplace_back([&, j, lo, hi] { partial[j] = fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

/// Hyperelliptic data lifted to F_{q^m}, plus the chart at infinity.
struct HyperellipticLift {
  std::vector<FiniteField::Elem> h, f;
  FiniteField::Elem h_inf = 0, f_inf = 0;    // H(0), F(0) in v^2 + H(u) v = F(u)
  FiniteField::Elem dh_inf = 0, df_inf = 0;  // H'(0), F'(0)

  HyperellipticLift(const CurveModel& model, const Extension& ext) : h(ext.lift(model.h())), f(ext.lift(model.f())) {
    const unsigned g = model.declared_genus();
    auto at = [](const std::vector<FiniteField::Elem>& c, unsigned i) -> FiniteField::Elem {
      return i < c.size() ? c[i] : 0;
    };
    h_inf = at(h, g + 1);
    dh_inf = at(h, g);
    f_inf = at(f, 2 * g + 2);
    df_inf = at(f, 2 * g + 1);
  }
};

/// Plane equation lifted to F_{q^m}, grouped for fast evaluation along lines x = const.
struct PlaneLift {
  unsigned d = 0;
  std::vector<std::vector<std::pair<unsigned, FiniteField::Elem>>> by_ey;  // by_ey[j] = (ex, c) for z = 1
  std::vector<std::pair<unsigned, FiniteField::Elem>> at_infinity;        // ez == 0 terms: (ex, c), y = 1
  struct Term {
    FiniteField::Elem c;
    unsigned ex, ey, ez;
  };
  std::vector<Term> terms, dx, dy, dz;

  PlaneLift(const CurveModel& model, const Extension& ext) : d(model.plane_degree()), by_ey(d + 1) {
    const FiniteField& F = ext.big;
    for (const auto& t : model.terms()) {
      const auto c = ext.embed(t.coeff);
      if (c == 0) continue;
      terms.push_back({c, t.ex, t.ey, t.ez});
      by_ey[t.ey].emplace_back(t.ex, c);
      if (t.ez == 0) at_infinity.emplace_back(t.ex, c);
      if (t.ex) push(dx, F.mul(F.from_int(t.ex), c), t.ex - 1, t.ey, t.ez);
      if (t.ey) push(dy, F.mul(F.from_int(t.ey), c), t.ex, t.ey - 1, t.ez);
      if (t.ez) push(dz, F.mul(F.from_int(t.ez), c), t.ex, t.ey, t.ez - 1);
    }
  }

  static void push(std::vector<Term>& v, FiniteField::Elem c, unsigned ex, unsigned ey, unsigned ez) {
    if (c != 0) v.push_back({c, ex, ey, ez});
  }

  static FiniteField::Elem eval(const FiniteField& F, const std::vector<Term>& ts, FiniteField::Elem x,
                                FiniteField::Elem y, FiniteField::Elem z) {
    FiniteField::Elem acc = 0;
    for (const auto& t : ts) acc = F.add(acc, F.mul(t.c, F.mul(F.pow(x, t.ex), F.mul(F.pow(y, t.ey), F.pow(z, t.ez)))));
    return acc;
  }

  /// Calls visit(x, y, z) for every zero of F over F_Q with x in [lo, hi) on the
  /// chart z = 1; when include_infinity is set the line z = 0 is visited too.
  template <class Visit>
  void for_each_zero(const FiniteField& F, std::uint64_t lo, std::uint64_t hi, bool include_infinity,
                     Visit&& visit) const {
    const std::uint64_t Q = F.size();
    std::vector<FiniteField::Elem> xp(d + 1), cy(d + 1);
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const auto x = static_cast<FiniteField::Elem>(xi);
      xp[0] = 1;
      for (unsigned i = 1; i <= d; ++i) xp[i] = F.mul(xp[i - 1], x);
      for (unsigned j = 0; j <= d; ++j) {
        FiniteField::Elem acc = 0;
        for (const auto& [ex, c] : by_ey[j]) acc = F.add(acc, F.mul(c, xp[ex]));
        cy[j] = acc;
      }
      for (std::uint64_t yi = 0; yi < Q; ++yi) {
        const auto y = static_cast<FiniteField::Elem>(yi);
        FiniteField::Elem acc = 0;
        for (int j = static_cast<int>(d); j >= 0; --j) acc = F.add(F.mul(acc, y), cy[static_cast<unsigned>(j)]);
        if (acc == 0) visit(x, y, FiniteField::Elem{1});
      }
    }
    if (!include_infinity) return;
    for (std::uint64_t xi = 0; xi < Q; ++xi) {
      const auto x = static_cast<FiniteField::Elem>(xi);
      FiniteField::Elem acc = 0;
      for (const auto& [ex, c] : at_infinity) acc = F.add(acc, F.mul(c, F.pow(x, ex)));
      if (acc == 0) visit(x, FiniteField::Elem{1}, FiniteField::Elem{0});
    }
    FiniteField::Elem corner = 0;
    for (const auto& t : terms)
      if (t.ex == d) corner = F.add(corner, t.c);
    if (corner == 0) visit(FiniteField::Elem{1}, FiniteField::Elem{0}, FiniteField::Elem{0});
  }
};

std::uint64_t enumeration_size(const CurveModel& model, std::uint64_t Q) {
  if (model.kind() == CurveKind::Plane) return Q * Q + Q + 1;
  return Q;
}

std::string field_name(std::uint64_t Q) { return "F_" + std::to_string(Q); }

}  // namespace

CurveModel CurveModel::projective_line(ExtFieldSpec base) {
  check_base(base);
  CurveModel c;
  c.kind_ = CurveKind::ProjectiveLine;
  c.base_ = std::move(base);
  return c;
}

CurveModel CurveModel::hyperelliptic(ExtFieldSpec base, std::vector<std::uint32_t> h, std::vector<std::uint32_t> f) {
  check_base(base);
  const std::uint64_t q = base.order();
  check_coefficients(h, q, "h");
  check_coefficients(f, q, "f");
  h = trimmed(std::move(h));
  f = trimmed(std::move(f));
  if (f.size() < 2) throw InvalidArgument("hyperelliptic model needs deg f >= 1");
  const unsigned deg_f = static_cast<unsigned>(f.size() - 1);
  const unsigned g = (deg_f - 1) / 2;
  if (!h.empty() && h.size() - 1 > g + 1)
    throw InvalidArgument("deg h = " + std::to_string(h.size() - 1) + " exceeds g + 1 = " + std::to_string(g + 1));
  if (base.p == 2 && h.empty())
    throw InvalidArgument("y^2 = f(x) in characteristic 2 is inseparable and never smooth; supply h != 0");
  CurveModel c;
  c.kind_ = CurveKind::Hyperelliptic;
  c.base_ = std::move(base);
  c.genus_ = g;
  c.h_ = std::move(h);
  c.f_ = std::move(f);
  return c;
}

CurveModel CurveModel::plane(ExtFieldSpec base, unsigned degree, std::vector<PlaneTerm> terms) {
  check_base(base);
  if (degree == 0) throw InvalidArgument("plane curve degree must be positive");
  const std::uint64_t q = base.order();
  bool nonzero = false;
  for (const auto& t : terms) {
    if (t.ex + t.ey + t.ez != degree)
      throw InvalidArgument("plane term x^" + std::to_string(t.ex) + " y^" + std::to_string(t.ey) + " z^" +
                            std::to_string(t.ez) + " is not of degree " + std::to_string(degree));
    if (t.coeff >= q) throw InvalidArgument("plane coefficient " + std::to_string(t.coeff) + " not in F_" + std::to_string(q));
    nonzero = nonzero || t.coeff != 0;
  }
  if (!nonzero) throw InvalidArgument("plane equation is identically zero");
  CurveModel c;
  c.kind_ = CurveKind::Plane;
  c.base_ = std::move(base);
  c.degree_ = degree;
  c.genus_ = (degree - 1) * (degree - 2) / 2;
  c.terms_ = std::move(terms);
  return c;
}

std::string CurveModel::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << " over " << base_.describe();
  if (kind_ == CurveKind::Hyperelliptic) {
    os << ": h = [";
    for (std::size_t i = 0; i < h_.size(); ++i) os << (i ? "," : "") << h_[i];
    os << "], f = [";
    for (std::size_t i = 0; i < f_.size(); ++i) os << (i ? "," : "") << f_[i];
    os << "]";
  } else if (kind_ == CurveKind::Plane) {
    os << ": degree " << degree_ << ", " << terms_.size() << " terms";
  }
  return os.str();
}

SmoothnessReport check_smoothness(const CurveModel& model, const CountOptions& opts) {
  SmoothnessReport report;
  if (model.kind() == CurveKind::ProjectiveLine) {
    report.verified_degree = 0;
    return report;
  }
  const unsigned g = model.declared_genus();
  unsigned kmax = opts.smoothness_degree;
  if (kmax == 0) {
    const unsigned d = model.plane_degree();
    kmax = model.kind() == CurveKind::Hyperelliptic ? 2 * g + 2 : std::max(1U, d * (d - 1));
  }
  const std::uint64_t q = model.q();
  unsigned affordable = 0;
  for (unsigned k = 1; k <= kmax; ++k) {
    const std::uint64_t Q = checked_power(q, k);
    if (Q > FiniteField::kMaxOrder || enumeration_size(model, Q) > opts.budget) break;
    affordable = k;
  }
  if (affordable == 0) throw BudgetExceeded(enumeration_size(model, q), opts.budget);
  report.truncated_by_budget = affordable < kmax;
  kmax = affordable;
  report.verified_degree = kmax;

  // Every extension degree <= kmax divides some k in (kmax/2, kmax].
  for (unsigned k = kmax / 2 + 1; k <= kmax; ++k) {
    const Extension ext(model.base(), k);
    const FiniteField& F = ext.big;
    const std::string where = " over " + field_name(F.size());
    if (model.kind() == CurveKind::Hyperelliptic) {
      const HyperellipticLift lift(model, ext);
      const auto dh = derivative(F, lift.h), df = derivative(F, lift.f);
      // Singular points satisfy F = 0, 2y + h = 0 and h' y - f' = 0.
      auto singular_at = [&](FiniteField::Elem hx, FiniteField::Elem fx, FiniteField::Elem dhx, FiniteField::Elem dfx,
                             FiniteField::Elem& y) {
        if (F.characteristic() == 2) {
          if (hx != 0) return false;
          y = F.sqrt_char2(fx);
        } else {
          y = F.neg(F.div(hx, F.from_int(2)));
          if (F.sub(F.add(F.mul(y, y), F.mul(hx, y)), fx) != 0) return false;
        }
        return F.sub(F.mul(dhx, y), dfx) == 0;
      };
      for (std::uint64_t xi = 0; xi < F.size(); ++xi) {
        const auto x = static_cast<FiniteField::Elem>(xi);
        FiniteField::Elem y = 0;
        if (singular_at(horner(F, lift.h, x), horner(F, lift.f, x), horner(F, dh, x), horner(F, df, x), y))
          throw SingularModel("singular point (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) + ")" + where +
                              " on " + model.describe());
      }
      FiniteField::Elem v = 0;
      if (singular_at(lift.h_inf, lift.f_inf, lift.dh_inf, lift.df_inf, v))
        throw SingularModel("singular point at infinity (u, v) = (0, " + std::to_string(v) + ")" + where + " on " +
                            model.describe());
    } else {
      const PlaneLift lift(model, ext);
      lift.for_each_zero(F, 0, F.size(), true, [&](FiniteField::Elem x, FiniteField::Elem y, FiniteField::Elem z) {
        if (PlaneLift::eval(F, lift.dx, x, y, z) == 0 && PlaneLift::eval(F, lift.dy, x, y, z) == 0 &&
            PlaneLift::eval(F, lift.dz, x, y, z) == 0)
          throw SingularModel("singular point (x : y : z) = (" + std::to_string(x) + " : " + std::to_string(y) + " : " +
                              std::to_string(z) + ")" + where + " on " + model.describe());
      });
    }
  }
  return report;
}

unsigned genus_of(const CurveModel& model, const CountOptions& opts) {
  check_smoothness(model, opts);
  return model.declared_genus();
}

std::uint64_t count_points(const CurveModel& model, unsigned m, const CountOptions& opts) {
  if (m == 0) throw InvalidArgument("extension degree m must be positive");
  const std::uint64_t Q = checked_power(model.q(), m);
  if (Q > FiniteField::kMaxOrder) throw BudgetExceeded(Q, opts.budget);
  const std::uint64_t size = enumeration_size(model, Q);
  if (size > opts.budget) throw BudgetExceeded(size, opts.budget);

  if (model.kind() == CurveKind::ProjectiveLine) {
    return parallel_sum(Q, opts.jobs, [](std::uint64_t lo, std::uint64_t hi) { return hi - lo; }) + 1;
  }

  const Extension ext(model.base(), m);
  const FiniteField& F = ext.big;
  if (model.kind() == CurveKind::Hyperelliptic) {
    const HyperellipticLift lift(model, ext);
    const std::uint64_t affine = parallel_sum(Q, opts.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t n = 0;
      for (std::uint64_t xi = lo; xi < hi; ++xi) {
        const auto x = static_cast<FiniteField::Elem>(xi);
        n += count_quadratic(F, horner(F, lift.h, x), horner(F, lift.f, x));
      }
      return n;
    });
    return affine + count_quadratic(F, lift.h_inf, lift.f_inf);
  }

  const PlaneLift lift(model, ext);
  const std::uint64_t affine = parallel_sum(Q, opts.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t n = 0;
    lift.for_each_zero(F, lo, hi, false, [&](FiniteField::Elem, FiniteField::Elem, FiniteField::Elem) { ++n; });
    return n;
  });
  std::uint64_t at_infinity = 0;
  lift.for_each_zero(F, 0, 0, true, [&](FiniteField::Elem, FiniteField::Elem, FiniteField::Elem) { ++at_infinity; });
  return affine + at_infinity;
}

bool within_weil_bound(const BigInt& N, const BigInt& Q, unsigned g) {
  const BigInt dev = N - Q - 1;
  const BigInt lhs = dev * dev;
  const BigInt rhs = BigInt(4 * g * g) * Q;
  return lhs <= rhs;
}

PointCounts count_series(const CurveModel& model, unsigned M, const CountOptions& opts) {
  if (M == 0) throw InvalidArgument("count_series needs M >= 1");
  PointCounts pc;
  pc.q = model.q();
  pc.g = model.declared_genus();
  for (unsigned m = 1; m <= M; ++m) {
    const BigInt N(static_cast<unsigned long>(count_points(model, m, opts)));
    const BigInt Q = ipow(pc.q, m);
    if (!within_weil_bound(N, Q, pc.g))
      throw WeilViolation(m, "N = " + N.get_str() + ", q^m = " + Q.get_str() + ", g = " + std::to_string(pc.g) + " on " +
                                 model.describe());
    pc.N.push_back(N);
  }
  return pc;
}

}  // namespace curvemass
