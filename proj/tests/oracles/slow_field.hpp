#pragma once
// Schoolbook F_{p^m} arithmetic on digit vectors, independent of the library's tables.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

struct SlowField {
  std::uint32_t p;
  unsigned m;
  std::vector<std::uint32_t> modulus;  // monic, constant term first
  std::uint32_t size = 1;

  SlowField(std::uint32_t p_, std::vector<std::uint32_t> mod) : p(p_), m(static_cast<unsigned>(mod.size() - 1)), modulus(std::move(mod)) {
    for (unsigned i = 0; i < m; ++i) size *= p;
  }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (unsigned i = m; i-- > 0;) a = a * p + d[i];
    return a;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return encode(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (unsigned k = 2 * m - 1; k >= m; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - modulus[i]) * c) % p;
    }
    std::vector<std::uint32_t> out(m);
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Evaluates sum c_i x^i with c_i already in this field.
  std::uint32_t eval(const std::vector<std::uint32_t>& c, std::uint32_t x) const {
    std::uint32_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = add(mul(r, x), c[i]);
    return r;
  }
};

// Some root of the small field's modulus inside the big field, found by search.
// Any root works for counting: different choices give Galois-conjugate curves.
inline std::vector<std::uint32_t> embed_table(const SlowField& small, const SlowField& big) {
  std::vector<std::uint32_t> mod_big(small.modulus.begin(), small.modulus.end());
  std::uint32_t root = 0;
  bool found = small.m == 1;
  for (std::uint32_t r = 0; r < big.size && !found; ++r)
    if (big.eval(mod_big, r) == 0) {
      root = r;
      found = true;
    }
  if (!found) throw std::logic_error("no root of the base modulus in the extension");
  std::vector<std::uint32_t> table(small.size);
  for (std::uint32_t a = 0; a < small.size; ++a) {
    const auto d = small.digits(a);
    std::uint32_t v = 0, power = 1;
    for (unsigned i = 0; i < small.m; ++i) {
      v = big.add(v, big.mul(d[i], power));
      power = small.m == 1 ? power : big.mul(power, root);
    }
    table[a] = v;
  }
  return table;
}

}  // namespace oracle
