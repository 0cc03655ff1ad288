#include <doctest.h>

#include <cmath>
#include <cstring>

#include "../oracles/fixtures.hpp"
#include "../oracles/random_tv.hpp"
#include "curvemass/asymptotics.hpp"
#include "curvemass/errors.hpp"
#include "curvemass/mass.hpp"

using namespace curvemass;

namespace {

TVData tv_of(std::uint64_t q, std::map<unsigned, BigRat> beta) { return TVData{q, std::move(beta), {}}; }

BigRat frac(long n, long d) { return BigRat(BigInt(n), BigInt(d)); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

ZetaData zeta_of(const CurveModel& c) { return zeta_from_counts(count_series(c, std::max(genus_of(c), 1u))); }

const GroupSpec& gl(unsigned n) {
  static std::map<unsigned, GroupSpec> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, builtin_group(GroupFamily::GL, n)).first;
  return it->second;
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("tv_bound examples") {
    CHECK(tv_bound(tv_of(4, {{1, BigRat(1)}})) == BigRat(1));
    CHECK(tv_bound(tv_of(4, {})) == BigRat(0));
    CHECK(tv_bound(tv_of(9, {{1, BigRat(2)}})) == BigRat(1));
    CHECK(tv_bound(tv_of(2, {{2, frac(1, 2)}})) == BigRat(1));
    CHECK(is_feasible(tv_of(4, {{1, BigRat(1)}})));
    CHECK_FALSE(is_feasible(tv_of(4, {{1, frac(101, 100)}})));
  }

  TEST_CASE("tv_bound is an upper bound for irrational square roots") {
    const auto tv = tv_of(2, {{1, frac(2, 5)}, {3, frac(1, 7)}});
    const double exact = 0.4 / (std::sqrt(2.0) - 1) + 3.0 / 7 / (std::sqrt(8.0) - 1);
    const double bound = tv_bound(tv).to_double();
    CHECK(bound >= exact);
    CHECK(bound - exact < 1e-15);
  }

  TEST_CASE("rhs_pic examples") {
    const auto r = rhs_pic(tv_of(4, {{1, BigRat(1)}}), 10);
    CHECK(r.value == doctest::Approx(1 - std::log(0.75) / std::log(4.0)).epsilon(1e-14));
    CHECK(r.value == doctest::Approx(1.20752).epsilon(1e-5));
    CHECK(r.tail == 0);
    const auto z = rhs_pic(tv_of(4, {}), 3);
    CHECK(z.value == 1.0);
    CHECK(z.tail == 0);
    const auto r9 = rhs_pic(tv_of(9, {{1, BigRat(2)}}), 5);
    CHECK(r9.value == doctest::Approx(1 - 2 * std::log(8.0 / 9) / std::log(9.0)).epsilon(1e-14));
  }

  TEST_CASE("rhs_group examples") {
    CHECK(rhs_group(tv_of(4, {}), gl(2), 10).value == 4.0);
    const double v = rhs_group(tv_of(4, {{1, BigRat(1)}}), gl(2), 10).value;
    CHECK(v == doctest::Approx(4 - std::log(0.75 * 15.0 / 16) / std::log(4.0)).epsilon(1e-14));
    CHECK(v == doctest::Approx(4.25407).epsilon(1e-6));
  }

  TEST_CASE("truncation tail follows the documented formula") {
    const auto tv = tv_of(4, {{1, frac(1, 2)}, {12, frac(1, 100)}});
    const auto r = rhs_pic(tv, 10);
    const double formula = std::pow(4.0, -5.5) / ((1 - 0.5) * 11 * std::log(4.0));
    CHECK(r.tail >= formula);
    CHECK(r.tail < formula * 1.001);
    CHECK(rhs_group(tv, gl(3), 10).tail >= 3 * formula);
  }

  TEST_CASE("G_m specialization is bit-exact") {
    std::mt19937_64 rng(1);
    const auto gm = builtin_group(GroupFamily::Gm, 1);
    for (int t = 0; t < 50; ++t) {
      const auto tv = oracle::random_feasible_tv(rng);
      for (unsigned M : {5u, 40u}) {
        const auto a = rhs_group(tv, gm, M), b = rhs_pic(tv, M);
        CHECK(same_bits(a.value, b.value));
        CHECK(same_bits(a.tail, b.tail));
      }
    }
  }

  TEST_CASE("general rhs on the constant sheaf reproduces the pic sum term") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
      const auto tv = oracle::random_feasible_tv(rng);
      std::vector<LocalGroup> groups;
      for (const auto& [m, b] : tv.beta) groups.push_back({m, b, BigRat(1) - rpow(tv.q, -static_cast<long>(m))});
      const auto gen = rhs_general(groups, tv.q, 1);
      CHECK(same_bits(gen.value, rhs_pic(tv, 40).sum_term));
    }
  }

  TEST_CASE("rhs_general examples and envelope") {
    CHECK(rhs_general({{1, BigRat(1), BigRat(1)}}, 4, 1).value == 0.0);
    const auto r = rhs_general({{1, frac(1, 2), frac(3, 4)}}, 4, 1);
    CHECK(r.value == doctest::Approx(0.10376).epsilon(1e-4));
    CHECK(r.within_envelope);
    const auto bad = rhs_general({{4, BigRat(1), frac(1, 2)}}, 4, 1);
    CHECK_FALSE(bad.within_envelope);
    CHECK(bad.violations == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(rhs_general({{1, BigRat(1), BigRat(0)}}, 4, 1), InvalidArgument);
  }

  TEST_CASE("rhs direction relative to dim") {
    // log_q of a ratio in (0, 1) is negative and enters with a minus sign, so
    // any positive density pushes the value above dim.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      auto tv = oracle::random_feasible_tv(rng);
      for (unsigned n = 1; n <= 4; ++n) CHECK(rhs_group(tv, gl(n), 40).value >= n * n);
      tv.beta[1] += frac(1, 1000);
      for (unsigned n = 1; n <= 4; ++n) CHECK(rhs_group(tv, gl(n), 40).value > n * n);
    }
    for (unsigned n = 1; n <= 4; ++n) CHECK(rhs_group(tv_of(3, {}), gl(n), 40).value == n * n);
  }

  TEST_CASE("raising a density raises the rhs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
      const auto tv = oracle::random_feasible_tv(rng);
      auto more = tv;
      const unsigned m = 1 + static_cast<unsigned>(rng() % 10);
      more.beta[m] += frac(1, 10);
      CHECK(rhs_pic(more, 40).value > rhs_pic(tv, 40).value);
      CHECK(rhs_group(more, gl(2), 40).value > rhs_group(tv, gl(2), 40).value);
    }
  }

  TEST_CASE("tails are sound under doubling the truncation") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      const auto tv = oracle::random_feasible_tv(rng);
      for (unsigned M : {3u, 10u}) {
        const auto shortr = rhs_pic(tv, M), longr = rhs_pic(tv, 2 * M);
        CHECK(std::fabs(longr.value - shortr.value) <= shortr.tail);
        const auto gs = rhs_group(tv, gl(3), M), gl2 = rhs_group(tv, gl(3), 2 * M);
        CHECK(std::fabs(gl2.value - gs.value) <= gs.tail);
      }
    }
  }

  TEST_CASE("empirical TV estimates") {
    DegreeSpectrum s1{2, 1, {BigInt(3), BigInt(1)}};
    auto e = empirical_tv({s1}, 2);
    CHECK(e.tv.beta.at(1) == BigRat(3));
    CHECK(e.tv.beta.at(2) == BigRat(1));
    DegreeSpectrum s2{2, 4, {BigInt(4), BigInt(2)}};
    e = empirical_tv({s1, s2}, 2);
    CHECK(e.tv.beta.at(1) == BigRat(1));
    REQUIRE(e.quotients.size() == 2);
    CHECK(e.quotients[0][0] == BigRat(3));
    CHECK(e.quotients[1][1] == frac(1, 2));
    CHECK_THROWS_AS(empirical_tv({DegreeSpectrum{2, 0, {BigInt(3)}}}, 1), InvalidArgument);
    CHECK_THROWS_AS(empirical_tv({}, 1), InvalidArgument);
  }

  TEST_CASE("lhs sequence examples") {
    const auto E = zeta_of(fixtures::elliptic_f2());
    const auto gm = lhs_sequence({E}, builtin_group(GroupFamily::Gm, 1));
    CHECK(gm[0].value == doctest::Approx(std::log2(3.0)).epsilon(1e-14));
    const auto gl1 = lhs_sequence({E}, gl(1));
    CHECK(same_bits(gm[0].value, gl1[0].value));
    const auto C2 = zeta_of(fixtures::genus2_f2());
    const auto v = lhs_sequence({C2}, gl(2));
    CHECK(std::isfinite(v[0].value));
    CHECK(v[0].value > 0);
    CHECK(v[0].value == doctest::Approx(log_base(mass_bun(gl(2), C2), 2) / 2).epsilon(1e-14));
    CHECK_THROWS_AS(lhs_sequence({zeta_of(fixtures::p1_f2())}, gl(1)), InvalidArgument);
  }

  TEST_CASE("dominance examples") {
    const auto zero = dominance_check(tv_of(4, {}), 2, 10);
    REQUIRE(zero.rows.size() == 2);
    CHECK(zero.rows[0].exponent == 3.0);
    CHECK(zero.rows[1].exponent == 4.0);
    CHECK(zero.dominant);
    const auto one = dominance_check(tv_of(4, {{1, BigRat(1)}}), 2, 10);
    CHECK(one.rows[1].exponent == doctest::Approx(4.254).epsilon(1e-3));
    CHECK(one.rows[0].exponent == doctest::Approx(3.415).epsilon(1e-3));
    CHECK(one.dominant);
    const auto single = dominance_check(tv_of(4, {}), 1, 10);
    CHECK(single.rows.size() == 1);
    CHECK(single.dominant);
    CHECK_THROWS_AS(dominance_check(tv_of(4, {}), 7, 10), InvalidArgument);
  }

  TEST_CASE("convergence report contracts") {
    CHECK_THROWS_AS(convergence_report(std::vector<PointCounts>{}, gl(2), 10), InvalidArgument);
    const auto one = convergence_report(std::vector<CurveModel>{fixtures::elliptic_f2()}, gl(2), 10);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.empirical.tv.beta.at(1) == BigRat(3));
    CHECK(one.dominance.has_value());
    const auto three = convergence_report(
        std::vector<CurveModel>{fixtures::artin_schreier_f2(1), fixtures::artin_schreier_f2(2), fixtures::artin_schreier_f2(3)},
        gl(2), 20);
    REQUIRE(three.rows.size() == 3);
    for (const auto& row : three.rows) {
      CHECK(std::isfinite(row.gap));
      CHECK(std::isfinite(*row.ss_gap));
    }
    CHECK(three.empirical.quotients.size() == 3);
    CHECK_THROWS_AS(convergence_report(std::vector<CurveModel>{fixtures::genus2_f2(), fixtures::elliptic_f2()}, gl(2), 10),
                    InvalidArgument);
    CHECK_THROWS_AS(convergence_report(std::vector<CurveModel>{fixtures::p1_f2()}, gl(2), 10), InvalidArgument);
  }
}
