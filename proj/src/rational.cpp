#include "curvemass/rational.hpp"

#include <cmath>

#include "curvemass/errors.hpp"

namespace curvemass {

BigRat::BigRat(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return BigRat(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("not a rational number: '" + s + "'");
  }
}

BigInt BigRat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigRat BigRat::frac() const { return *this - BigRat(floor()); }

BigRat BigRat::abs() const { return sign() < 0 ? -*this : *this; }

BigRat BigRat::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return BigRat(v_.get_den(), v_.get_num());
}

BigRat BigRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r(1), b(v_);
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1U) r *= b;
    k >>= 1U;
    if (k) b *= b;
  }
  return BigRat(r);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string BigRat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt ipow(std::uint64_t base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BigRat rpow(std::uint64_t base, long e) {
  if (e >= 0) return BigRat(ipow(base, static_cast<unsigned long>(e)));
  return BigRat(BigInt(1), ipow(base, static_cast<unsigned long>(-e)));
}

double ln_abs(const BigInt& n) {
  if (n == 0) throw InvalidArgument("log of zero");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double ln(const BigRat& x) {
  if (x.sign() <= 0) throw InvalidArgument("log of a nonpositive rational " + x.str());
  const BigRat delta = x - BigRat(1);
  if (delta.abs() < BigRat(BigInt(1), BigInt(2))) return std::log1p(delta.to_double());
  return ln_abs(x.numerator()) - ln_abs(x.denominator());
}

double log_base(const BigRat& x, std::uint64_t q) { return ln(x) / std::log(static_cast<double>(q)); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InvalidArgument("square root of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace curvemass
