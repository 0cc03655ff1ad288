#include "curvemass/field.hpp"

#include <sstream>

namespace curvemass {

std::uint64_t ExtFieldSpec::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > FiniteField::kMaxOrder) return q * p;  // already out of range; callers reject it
    q *= p;
  }
  return q;
}

std::string ExtFieldSpec::describe() const {
  std::ostringstream os;
  os << "F_" << order();
  if (m > 1) {
    os << " = F_" << p << "[t]/(";
    bool first = true;
    for (int i = static_cast<int>(modulus.size()) - 1; i >= 0; --i) {
      const auto c = modulus[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "t";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

FieldPoly poly_powmod(FieldPoly base, std::uint64_t e, const FieldPoly& mod) {
  const FiniteField& f = base.ring();
  FieldPoly result(f, {f.one()});
  base = divmod(base, mod).second;
  while (e) {
    if (e & 1U) result = divmod(result * base, mod).second;
    e >>= 1U;
    if (e) base = divmod(base * base, mod).second;
  }
  return result;
}

std::vector<std::uint32_t> digits_of(std::uint64_t k, std::uint32_t p, unsigned m) {
  std::vector<std::uint32_t> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return d;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<std::uint32_t>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) throw InvalidArgument("is_irreducible expects a monic polynomial");
  const unsigned m = static_cast<unsigned>(monic.size() - 1);
  if (m == 1) return true;
  const FiniteField fp = FiniteField::prime(p);
  std::vector<std::uint32_t> coeffs;
  for (auto c : monic) {
    if (c >= p) throw InvalidArgument("coefficient out of range for F_" + std::to_string(p));
    coeffs.push_back(c);
  }
  const FieldPoly f(fp, coeffs);
  const FieldPoly x(fp, {0, 1});
  FieldPoly h = x;
  for (unsigned i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f);
    if (gcd(f, h - x).degree() != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidArgument("extension degree must be positive");
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < m; ++i) limit *= p;
  for (std::uint64_t k = 0; k < limit; ++k) {
    auto c = digits_of(k, p, m);
    c.push_back(1);
    if (is_irreducible(p, c)) return c;
  }
  throw Error("no irreducible polynomial found");  // unreachable for valid input
}

ExtFieldSpec standard_field_spec(std::uint32_t p, unsigned m) { return ExtFieldSpec{p, m, find_irreducible(p, m)}; }

void validate(const ExtFieldSpec& spec) {
  if (!is_prime(spec.p)) throw InvalidArgument("field characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.m == 0) throw InvalidArgument("extension degree must be positive");
  if (spec.modulus.size() != spec.m + 1 || spec.modulus.back() != 1)
    throw InvalidArgument("modulus must be monic of degree " + std::to_string(spec.m));
  if (spec.order() > FiniteField::kMaxOrder)
    throw InvalidArgument("field of order " + std::to_string(spec.order()) + " is too large");
  if (!is_irreducible(spec.p, spec.modulus)) throw InvalidArgument("modulus is reducible over F_" + std::to_string(spec.p));
}

struct FiniteField::Impl {
  ExtFieldSpec spec;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> pow_p;  // p^i, i = 0..m
  std::uint32_t mod_bits = 0;        // characteristic 2: modulus as a bit mask
  bool tables = false;
  std::vector<Elem> exp;  // 2(size-1) entries
  std::vector<std::uint32_t> log;
  Elem gen = 1;
  std::vector<std::uint32_t> trace_basis;

  Elem slow_mul(Elem a, Elem b) const {
    const std::uint32_t p = spec.p;
    const unsigned m = spec.m;
    if (p == 2) {
      std::uint64_t r = 0;
      for (unsigned i = 0; i < m; ++i)
        if (b >> i & 1U) r ^= static_cast<std::uint64_t>(a) << i;
      for (int k = static_cast<int>(2 * m) - 2; k >= static_cast<int>(m); --k)
        if (r >> k & 1U) r ^= static_cast<std::uint64_t>(mod_bits) << (k - static_cast<int>(m));
      return static_cast<Elem>(r);
    }
    std::uint64_t da[32], db[32], prod[64] = {};
    for (unsigned i = 0; i < m; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (unsigned i = 0; i < m; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (int k = static_cast<int>(2 * m) - 2; k >= static_cast<int>(m); --k) {
      const std::uint64_t c = prod[k];
      if (!c) continue;
      for (unsigned j = 0; j <= m; ++j) {
        auto& slot = prod[static_cast<unsigned>(k) - m + j];
        slot = (slot + (p - c) * spec.modulus[j]) % p;
      }
    }
    Elem r = 0;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i) r = r * p + static_cast<Elem>(prod[i]);
    return r;
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1U) r = slow_mul(r, a);
      e >>= 1U;
      if (e) a = slow_mul(a, a);
    }
    return r;
  }
};

FiniteField::FiniteField(const ExtFieldSpec& spec) {
  if (spec.m > 1) {
    validate(spec);
  } else {
    if (!is_prime(spec.p)) throw InvalidArgument("field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.modulus.size() != 2 || spec.modulus[1] != 1 || spec.modulus[0] >= spec.p)
      throw InvalidArgument("degree-1 modulus must be monic linear");
  }
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  impl->size = spec.order();
  if (impl->size > kMaxOrder) throw InvalidArgument("field too large: " + std::to_string(impl->size));
  impl->pow_p.resize(spec.m + 1);
  impl->pow_p[0] = 1;
  for (unsigned i = 1; i <= spec.m; ++i) impl->pow_p[i] = impl->pow_p[i - 1] * spec.p;
  if (spec.p == 2)
    for (unsigned i = 0; i <= spec.m; ++i) impl->mod_bits |= spec.modulus[i] << i;

  const std::uint64_t units = impl->size - 1;
  if (units > 1) {
    const auto factors = prime_factors(units);
    for (Elem c = 2; c < impl->size; ++c) {
      bool primitive = true;
      for (auto r : factors)
        if (impl->slow_pow(c, units / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        impl->gen = c;
        break;
      }
    }
  }
  if (impl->size <= kTableLimit) {
    impl->tables = true;
    impl->exp.resize(2 * units + 1);
    impl->log.assign(impl->size, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < units; ++i) {
      impl->exp[i] = x;
      impl->log[x] = static_cast<std::uint32_t>(i);
      x = impl->slow_mul(x, impl->gen);
    }
    for (std::uint64_t i = units; i <= 2 * units; ++i) impl->exp[i] = impl->exp[i - units];
  }
  impl_ = impl;

  // Trace of each basis element t^i; trace is F_p-linear in the digits.
  impl->trace_basis.resize(spec.m);
  for (unsigned i = 0; i < spec.m; ++i) {
    Elem ti = pow(spec.p, i);  // encoding p is the element t (only when m > 1)
    if (spec.m == 1) ti = 1;
    Elem acc = 0;
    Elem conj = ti;
    for (unsigned j = 0; j < spec.m; ++j) {
      acc = add(acc, conj);
      conj = pow(conj, spec.p);
    }
    if (acc >= spec.p) throw Error("internal: trace left the prime field");
    impl->trace_basis[i] = acc;
  }
}

FiniteField FiniteField::prime(std::uint32_t p) { return FiniteField(ExtFieldSpec{p, 1, {0, 1}}); }

FiniteField FiniteField::standard(std::uint32_t p, unsigned m) { return FiniteField(standard_field_spec(p, m)); }

const ExtFieldSpec& FiniteField::spec() const { return impl_->spec; }
std::uint32_t FiniteField::characteristic() const { return impl_->spec.p; }
unsigned FiniteField::degree() const { return impl_->spec.m; }
std::uint64_t FiniteField::size() const { return impl_->size; }
FiniteField::Elem FiniteField::generator() const { return impl_->gen; }

FiniteField::Elem FiniteField::from_int(long k) const {
  const long p = impl_->spec.p;
  return static_cast<Elem>(((k % p) + p) % p);
}

std::uint32_t FiniteField::digit(Elem a, unsigned i) const { return (a / impl_->pow_p[i]) % impl_->spec.p; }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  const std::uint32_t p = impl_->spec.p;
  if (p == 2) return a ^ b;
  if (impl_->spec.m == 1) {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem r = 0;
  for (unsigned i = 0; i < impl_->spec.m && (a || b); ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * impl_->pow_p[i];
    a /= p;
    b /= p;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  const std::uint32_t p = impl_->spec.p;
  if (p == 2) return a;
  Elem r = 0;
  for (unsigned i = 0; i < impl_->spec.m && a; ++i) {
    const std::uint32_t d = a % p;
    if (d) r += (p - d) * impl_->pow_p[i];
    a /= p;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (impl_->tables) return impl_->exp[impl_->log[a] + impl_->log[b]];
  return impl_->slow_mul(a, b);
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in " + impl_->spec.describe());
  const std::uint64_t units = impl_->size - 1;
  if (impl_->tables) return impl_->exp[(units - impl_->log[a]) % units];
  return impl_->slow_pow(a, units - 1);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t units = impl_->size - 1;
  if (impl_->tables) return impl_->exp[(impl_->log[a] * (e % units)) % units];
  return impl_->slow_pow(a, e);
}

bool FiniteField::is_square(Elem a) const {
  if (a == 0 || impl_->spec.p == 2) return true;
  if (impl_->tables) return impl_->log[a] % 2 == 0;
  return impl_->slow_pow(a, (impl_->size - 1) / 2) == 1;
}

std::uint32_t FiniteField::trace(Elem a) const {
  const std::uint32_t p = impl_->spec.p;
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < impl_->spec.m && a; ++i) {
    acc += static_cast<std::uint64_t>(a % p) * impl_->trace_basis[i];
    a /= p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

FiniteField::Elem FiniteField::sqrt_char2(Elem a) const {
  if (impl_->spec.p != 2) throw InvalidArgument("sqrt_char2 requires characteristic 2");
  return pow(a, impl_->size / 2);
}

std::ranges::iota_view<std::uint32_t, std::uint32_t> field_elements(const ExtFieldSpec& spec, std::uint64_t budget) {
  const std::uint64_t q = spec.order();
  if (q > budget) throw BudgetExceeded(q, budget);
  if (q > FiniteField::kMaxOrder) throw InvalidArgument("field too large to enumerate");
  return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(q));
}

Embedding::Embedding(const FiniteField& from, const FiniteField& to) : from_(from), to_(to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw InvalidArgument("no embedding " + from.spec().describe() + " -> " + to.spec().describe());
  const unsigned e = from.degree();
  const auto& mod = from.spec().modulus;
  FiniteField::Elem root = 0;
  if (e > 1) {
    bool found = false;
    for (FiniteField::Elem b = 0; b < to.size(); ++b) {
      FiniteField::Elem acc = 0;
      for (int i = static_cast<int>(e); i >= 0; --i) acc = to.add(to.mul(acc, b), mod[static_cast<std::size_t>(i)]);
      if (acc == 0) {
        root = b;
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: modulus has no root in the extension");
  }
  image_.resize(from.size());
  for (FiniteField::Elem a = 0; a < from.size(); ++a) {
    if (e == 1) {
      image_[a] = a;
      continue;
    }
    FiniteField::Elem acc = 0;
    for (int i = static_cast<int>(e) - 1; i >= 0; --i)
      acc = to.add(to.mul(acc, root), from.digit(a, static_cast<unsigned>(i)));
    image_[a] = acc;
  }
}

FiniteField::Elem Embedding::operator()(FiniteField::Elem a) const {
  if (a >= image_.size()) throw InvalidArgument("element outside the source field");
  return image_[a];
}

}  // namespace curvemass
