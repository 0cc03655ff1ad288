#include "curvemass/mass.hpp"

#include <numeric>

#include "curvemass/errors.hpp"

namespace curvemass {

BigRat mass_bun(const GroupSpec& spec, const ZetaData& Z) {
  validate(spec);
  const long g = Z.g;
  BigRat m = spec.tamagawa * rpow(Z.q, (g - 1) * static_cast<long>(spec.dim));
  const BigRat rho = quasi_residue(Z);
  for (auto d : spec.degrees) m *= d == 1 ? rho : special_value(Z, static_cast<int>(d));
  return m;
}

BigRat mass_gl_component(unsigned n, const ZetaData& Z) {
  if (n == 0) throw InvalidArgument("rank must be positive");
  return mass_bun(builtin_group(GroupFamily::GL, n), Z);
}

std::vector<std::vector<unsigned>> compositions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned a = 1; a <= left; ++a) {
      cur.push_back(a);
      self(self, left - a);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

BigRat zagier_ss_mass(unsigned n, long d, const ZetaData& Z) {
  if (n == 0) throw InvalidArgument("rank must be positive");
  std::vector<BigRat> gl(n + 1);
  for (unsigned k = 1; k <= n; ++k) gl[k] = mass_gl_component(k, Z);
  const long g = Z.g;
  BigRat total;
  for (const auto& parts : compositions(n)) {
    const std::size_t k = parts.size();
    long cross = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) cross += static_cast<long>(parts[i] * parts[j]);
    BigRat term = rpow(Z.q, (g - 1) * cross);
    BigRat exponent;
    long partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      partial += parts[i];
      const long adjacent = static_cast<long>(parts[i] + parts[i + 1]);
      exponent += BigRat(adjacent) * BigRat(BigInt(partial * d), BigInt(static_cast<long>(n))).frac();
      term /= BigRat(1) - rpow(Z.q, adjacent);
    }
    if (!exponent.is_integer())
      throw Error("internal: non-integral exponent " + exponent.str() + " in the semistable mass formula");
    term *= rpow(Z.q, exponent.numerator().get_si());
    for (auto p : parts) term *= gl[p];
    total += term;
  }
  return total;
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;

long determinant(const IntMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  if (n == 1) return A[0][0];
  long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (A[0][j] == 0) continue;
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(A[r][c]);
      minor.push_back(std::move(row));
    }
    det += ((j % 2) ? -1 : 1) * A[0][j] * determinant(minor);
  }
  return det;
}

/// adj(A)[i][j] = (-1)^{i+j} det(A with row j and column i removed).
IntMatrix adjugate(const IntMatrix& A) {
  const std::size_t n = A.size();
  IntMatrix adj(n, std::vector<long>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<long> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(A[r][c]);
        minor.push_back(std::move(row));
      }
      adj[i][j] = (((i + j) % 2) ? -1 : 1) * determinant(minor);
    }
  return adj;
}

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

HarderNarasimhanSolver::HarderNarasimhanSolver(ZetaData Z) : Z_(std::move(Z)) {}

BigRat HarderNarasimhanSolver::semistable_mass(unsigned n, long d) {
  if (n == 0) throw InvalidArgument("rank must be positive");
  const auto key = std::make_pair(n, static_cast<unsigned>(floor_mod(d, n)));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto tot = total_.find(n);
  if (tot == total_.end()) tot = total_.emplace(n, mass_gl_component(n, Z_)).first;
  BigRat value = tot->second;
  for (const auto& parts : compositions(n))
    if (parts.size() > 1) value -= strata_sum(parts, key.second);
  memo_.emplace(key, value);
  return value;
}

BigRat HarderNarasimhanSolver::strata_sum(const std::vector<unsigned>& parts, long d) {
  const std::size_t k = parts.size();
  const std::size_t m = k - 1;  // free partial sums D_1..D_{k-1}; D_0 = 0, D_k = d
  const long n = std::accumulate(parts.begin(), parts.end(), 0L);
  const long g = Z_.g;
  std::vector<long> np(parts.begin(), parts.end());

  // Slope condition d_i / n_i > d_{i+1} / n_{i+1} as integer rows A x >= c.
  IntMatrix A(m, std::vector<long>(m, 0));
  std::vector<long> c(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    A[i][i] = np[i] + np[i + 1];
    if (i > 0) A[i][i - 1] = -np[i + 1];
    if (i + 1 < m) A[i][i + 1] = -np[i];
  }
  c[m - 1] += np[m - 1] * d;

  long D = determinant(A);
  IntMatrix adj = adjugate(A);
  if (D < 0) {
    D = -D;
    for (auto& row : adj)
      for (auto& v : row) v = -v;
  }
  long period = 1;
  for (auto p : np) period = std::lcm(period, p);

  // Ray j: step M_j along A^{-1} e_j, the smallest step that is integral and
  // preserves every d_i mod n_i.
  std::vector<long> steps(m);
  std::vector<std::vector<long>> rays(m, std::vector<long>(m));
  for (std::size_t j = 0; j < m; ++j) {
    long content = 0;
    for (std::size_t i = 0; i < m; ++i) content = std::gcd(content, adj[i][j]);
    steps[j] = period * D / std::gcd(period * D, content);
    for (std::size_t i = 0; i < m; ++i) rays[j][i] = steps[j] * adj[i][j] / D;
  }

  std::vector<long> prefix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + np[i];
  long cross = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) cross += np[i] * np[j];
  // -sum_{i<j} chi_ij = -(1-g) cross - sum_i d_i (n - N_i - N_{i-1}).
  auto degrees_of = [&](const std::vector<long>& x, long total) {
    std::vector<long> dd(k);
    long prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const long cur = i < m ? x[i] : total;
      dd[i] = cur - prev;
      prev = cur;
    }
    return dd;
  };
  auto linear = [&](const std::vector<long>& dd) {
    long e = 0;
    for (std::size_t i = 0; i < k; ++i) e -= dd[i] * (n - prefix[i + 1] - prefix[i]);
    return e;
  };

  BigRat ray_factor(1);
  for (std::size_t j = 0; j < m; ++j) {
    const long slope = linear(degrees_of(rays[j], 0));
    if (slope >= 0)
      throw ConvergenceError("Harder-Narasimhan sum for composition of rank " + std::to_string(n) +
                             " does not decay along a cone ray (exponent step " + std::to_string(slope) + ")");
    ray_factor /= BigRat(1) - rpow(Z_.q, slope);
  }

  const long constant = -(1 - g) * cross;
  BigRat sum;
  std::vector<long> y0(m, 0), x(m);
  while (true) {
    bool integral = true;
    for (std::size_t i = 0; i < m && integral; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += adj[i][j] * (y0[j] + c[j]);
      if (acc % D != 0) integral = false;
      x[i] = acc / D;
    }
    if (integral) {
      const auto dd = degrees_of(x, d);
      BigRat term = rpow(Z_.q, constant + linear(dd));
      for (std::size_t i = 0; i < k && !term.is_zero(); ++i) term *= semistable_mass(parts[i], dd[i]);
      sum += term;
    }
    std::size_t pos = 0;
    while (pos < m && ++y0[pos] == steps[pos]) y0[pos++] = 0;
    if (pos == m) break;
  }
  return sum * ray_factor;
}

BigRat hn_ss_mass(unsigned n, long d, const ZetaData& Z) {
  HarderNarasimhanSolver solver(Z);
  return solver.semistable_mass(n, d);
}

}  // namespace curvemass
