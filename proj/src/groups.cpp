#include "curvemass/groups.hpp"

#include <algorithm>

#include "curvemass/errors.hpp"

namespace curvemass {

unsigned GroupSpec::central_rank() const {
  return static_cast<unsigned>(std::count(degrees.begin(), degrees.end(), 1U));
}

std::optional<unsigned> GroupSpec::gl_rank() const {
  auto sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<unsigned>(sorted.size());
  if (n == 0 || dim != n * n) return std::nullopt;
  for (unsigned i = 0; i < n; ++i)
    if (sorted[i] != i + 1) return std::nullopt;
  return n;
}

GroupFamily parse_group_family(const std::string& name) {
  if (name == "GL") return GroupFamily::GL;
  if (name == "SL") return GroupFamily::SL;
  if (name == "Sp") return GroupFamily::Sp;
  if (name == "SO-odd") return GroupFamily::SOOdd;
  if (name == "SO-even") return GroupFamily::SOEven;
  if (name == "Gm") return GroupFamily::Gm;
  throw InvalidArgument("unknown group family '" + name + "' (expected GL, SL, Sp, SO-odd, SO-even or Gm)");
}

std::string to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::SL: return "SL";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SOOdd: return "SO-odd";
    case GroupFamily::SOEven: return "SO-even";
    case GroupFamily::Gm: return "Gm";
  }
  return "?";
}

GroupSpec builtin_group(GroupFamily family, unsigned n) {
  GroupSpec g;
  auto evens = [](unsigned upto) {
    std::vector<unsigned> d;
    for (unsigned k = 2; k <= upto; k += 2) d.push_back(k);
    return d;
  };
  switch (family) {
    case GroupFamily::GL:
      if (n < 1) throw InvalidArgument("GL_n needs n >= 1");
      g.name = "GL_" + std::to_string(n);
      g.dim = n * n;
      for (unsigned k = 1; k <= n; ++k) g.degrees.push_back(k);
      break;
    case GroupFamily::SL:
      if (n < 2) throw InvalidArgument("SL_n needs n >= 2");
      g.name = "SL_" + std::to_string(n);
      g.dim = n * n - 1;
      for (unsigned k = 2; k <= n; ++k) g.degrees.push_back(k);
      break;
    case GroupFamily::Sp:
      if (n < 1) throw InvalidArgument("Sp_2n needs rank n >= 1");
      g.name = "Sp_" + std::to_string(2 * n);
      g.dim = 2 * n * n + n;
      g.degrees = evens(2 * n);
      break;
    case GroupFamily::SOOdd:
      if (n < 1) throw InvalidArgument("SO_2n+1 needs rank n >= 1");
      g.name = "SO_" + std::to_string(2 * n + 1);
      g.dim = 2 * n * n + n;
      g.degrees = evens(2 * n);
      g.tamagawa = BigRat(2);
      break;
    case GroupFamily::SOEven:
      if (n < 2) throw InvalidArgument("SO_2n needs rank n >= 2");
      g.name = "SO_" + std::to_string(2 * n);
      g.dim = 2 * n * n - n;
      g.degrees = evens(2 * n - 2);
      g.degrees.push_back(n);
      std::sort(g.degrees.begin(), g.degrees.end());
      g.tamagawa = BigRat(2);
      break;
    case GroupFamily::Gm:
      if (n != 1) throw InvalidArgument("G_m has rank 1");
      g.name = "Gm";
      g.dim = 1;
      g.degrees = {1};
      break;
  }
  return g;
}

void validate(const GroupSpec& spec) {
  if (spec.dim == 0) throw MalformedGroup("group '" + spec.name + "' must have positive dimension");
  if (spec.degrees.empty()) throw MalformedGroup("group '" + spec.name + "' has no invariant degrees");
  for (auto d : spec.degrees)
    if (d == 0) throw MalformedGroup("group '" + spec.name + "' has an invariant of degree 0");
  if (spec.tamagawa.sign() <= 0) throw MalformedGroup("group '" + spec.name + "' needs a positive Tamagawa constant");
}

BigRat mass_ratio(const GroupSpec& spec, std::uint64_t q, unsigned r) {
  validate(spec);
  if (q < 2) throw InvalidArgument("q must be >= 2");
  BigRat ratio(1);
  for (auto d : spec.degrees) ratio *= BigRat(1) - rpow(q, -static_cast<long>(r) * static_cast<long>(d));
  return ratio;
}

BigInt group_order(const GroupSpec& spec, std::uint64_t q, unsigned r) {
  const BigRat order = mass_ratio(spec, q, r) * BigRat(ipow(q, static_cast<unsigned long>(r) * spec.dim));
  if (!order.is_integer() || order.sign() <= 0)
    throw MalformedGroup("group '" + spec.name + "' gives |G(F_" + ipow(q, r).get_str() + ")| = " + order.str() +
                         ", not a positive integer");
  return order.numerator();
}

}  // namespace curvemass
