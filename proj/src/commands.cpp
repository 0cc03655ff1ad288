#include "curvemass/commands.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "curvemass/errors.hpp"
#include "curvemass/mass.hpp"

namespace curvemass {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json int_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

struct CurveData {
  unsigned g = 0;
  SmoothnessReport smooth;
  std::vector<BigInt> direct;  // enumerated N_1..N_k
  ZetaData zeta;
};

// Smoothness, genus and zeta data from enumerated counts. Counts past the
// genus are enumerated while the budget allows, up to `want`, and must agree
// with the ones the zeta function predicts.
CurveData analyze_curve(const CurveEntry& entry, const CountOptions& opts, unsigned want) {
  CurveData d;
  d.smooth = check_smoothness(entry.model, opts);
  d.g = entry.model.declared_genus();
  const unsigned need = std::max(d.g, 1u);
  for (unsigned m = 1; m <= std::max(need, want); ++m) {
    std::uint64_t n = 0;
    try {
      n = count_points(entry.model, m, opts);
    } catch (const BudgetExceeded&) {
      if (m <= need) throw;
      break;
    }
    const BigInt N(static_cast<unsigned long>(n));
    if (!within_weil_bound(N, ipow(entry.model.q(), m), d.g))
      throw WeilViolation(m, "N_" + std::to_string(m) + " = " + N.get_str());
    d.direct.push_back(N);
  }
  d.zeta = zeta_from_counts(entry.model.q(), d.g, std::span<const BigInt>(d.direct.data(), d.g));
  const auto predicted = regenerate_counts(d.zeta, static_cast<unsigned>(d.direct.size()));
  for (std::size_t m = 0; m < d.direct.size(); ++m)
    if (predicted[m] != d.direct[m])
      throw InconsistentCounts("enumerated N_" + std::to_string(m + 1) + " = " + d.direct[m].get_str() +
                               " but the zeta function predicts " + predicted[m].get_str());
  return d;
}

std::string curve_element(std::size_t i, const CurveEntry& c) {
  return "curves[" + std::to_string(i) + "] '" + c.name + "'";
}

json dominance_json(const DominanceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"composition", r.composition}, {"exponent", r.exponent}});
  return {{"n", t.n}, {"rows", rows}, {"dominant", t.dominant}};
}

json rhs_json(const RhsValue& r) { return {{"value", r.value}, {"sum_term", r.sum_term}, {"tail", r.tail}}; }

json report_json(const ConvergenceReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"index", r.index}, {"g", r.g}, {"mass", r.mass.str()}, {"lhs", r.lhs}, {"gap", r.gap}};
    if (r.ss_mass) row["ss_mass_d0"] = r.ss_mass->str();
    if (r.ss_gap) row["ss_gap"] = number_or_null(*r.ss_gap);
    rows.push_back(std::move(row));
  }
  json beta = json::object();
  for (const auto& [m, b] : rep.empirical.tv.beta) beta[std::to_string(m)] = b.str();
  json quotients = json::array();
  for (const auto& q : rep.empirical.quotients) {
    json row = json::array();
    for (const auto& x : q) row.push_back(x.str());
    quotients.push_back(std::move(row));
  }
  json out = {{"group", rep.group},
              {"trunc", rep.trunc},
              {"rows", rows},
              {"empirical_beta", beta},
              {"beta_quotients", quotients},
              {"rhs", rhs_json(rep.rhs)},
              {"tv_bound", rep.tv_bound.str()},
              {"feasible", rep.feasible},
              {"note", rep.note}};
  if (rep.dominance) out["dominance"] = dominance_json(*rep.dominance);
  if (rep.ss_gap_nonincreasing) out["ss_gap_nonincreasing"] = *rep.ss_gap_nonincreasing;
  return out;
}

void record(CommandReport& rep, const std::string& element, const std::exception& e) {
  rep.errors.emplace_back(element, e.what());
}

json errors_json(const CommandReport& rep) {
  json out = json::array();
  for (const auto& [el, msg] : rep.errors) out.push_back({{"element", el}, {"message", msg}});
  return out;
}

}  // namespace

CommandReport cmd_zeta(const RunConfig& cfg) {
  if (cfg.curves.empty()) throw ConfigError("curves: the zeta command needs at least one curve");
  CommandReport rep;
  const auto opts = cfg.count_options();
  json curves = json::array();
  json sidecar = json::array();
  std::ostringstream csv;
  csv << "curve,m,N_m,B_m\n";
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    const auto& entry = cfg.curves[i];
    try {
      const unsigned g = entry.model.declared_genus();
      const unsigned M = entry.m_max ? entry.m_max : std::max(2 * g, 1u);
      const auto d = analyze_curve(entry, opts, M);
      const auto N = regenerate_counts(d.zeta, M);
      const auto B = degree_spectrum(PointCounts{entry.model.q(), g, N});
      json values = json::object();
      for (int s = 2; s <= 4; ++s) values[std::to_string(s)] = special_value(d.zeta, s).str();
      json cj = {{"name", entry.name},
                 {"model", entry.model.describe()},
                 {"q", entry.model.q()},
                 {"genus", g},
                 {"smoothness", {{"verified_degree", d.smooth.verified_degree},
                                 {"truncated_by_budget", d.smooth.truncated_by_budget}}},
                 {"N", int_list(N)},
                 {"N_enumerated", d.direct.size()},
                 {"B", int_list(B.B)},
                 {"P", int_list(d.zeta.a)},
                 {"h", class_number(d.zeta).get_str()},
                 {"rho", quasi_residue(d.zeta).str()},
                 {"zeta_values", values}};
      sidecar.push_back({{"name", entry.name}, {"q", entry.model.q()}, {"genus", g}, {"P", cj["P"]},
                         {"h", cj["h"]}, {"rho", cj["rho"]}, {"zeta_values", values}});
      for (unsigned m = 1; m <= M; ++m)
        csv << entry.name << ',' << m << ',' << N[m - 1].get_str() << ',' << B.B[m - 1].get_str() << '\n';
      curves.push_back(std::move(cj));
    } catch (const Error& e) {
      record(rep, curve_element(i, entry), e);
    }
  }
  rep.doc = {{"schema", kConfigSchema}, {"command", "zeta"}, {"curves", curves}};
  rep.doc["errors"] = errors_json(rep);
  rep.sidecar = {{"schema", kConfigSchema}, {"command", "zeta"}, {"curves", sidecar}};
  rep.csv = csv.str();
  return rep;
}

CommandReport cmd_mass(const RunConfig& cfg) {
  if (cfg.curves.empty()) throw ConfigError("curves: the mass command needs at least one curve");
  if (cfg.groups.empty()) throw ConfigError("groups: the mass command needs at least one group");
  CommandReport rep;
  const auto opts = cfg.count_options();
  json results = json::array();
  std::ostringstream csv;
  csv << "curve,group,quantity,d,value,log_q,agree\n";
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    const auto& entry = cfg.curves[i];
    std::optional<ZetaData> Z;
    try {
      Z = analyze_curve(entry, opts, 0).zeta;
    } catch (const Error& e) {
      record(rep, curve_element(i, entry), e);
      continue;
    }
    std::optional<HarderNarasimhanSolver> solver;
    for (std::size_t k = 0; k < cfg.groups.size(); ++k) {
      const auto& spec = cfg.groups[k];
      const std::string element = curve_element(i, entry) + " x groups[" + std::to_string(k) + "] '" + spec.name + "'";
      try {
        const BigRat total = mass_bun(spec, *Z);
        const double lg = log_base(total, Z->q);
        json rj = {{"curve", entry.name}, {"group", spec.name}, {"mass", total.str()}, {"log_q", lg}};
        csv << entry.name << ',' << spec.name << ",total,," << total.str() << ',' << format_double(lg) << ",\n";
        if (const auto n = spec.gl_rank()) {
          json ss = json::array();
          for (long d = 0; d < static_cast<long>(*n); ++d) {
            const BigRat z = zagier_ss_mass(*n, d, *Z);
            json row = {{"d", d}, {"zagier", z.str()}};
            std::string agree;
            if (*n <= kHnRankLimit) {
              if (!solver) solver.emplace(*Z);
              const BigRat h = solver->semistable_mass(*n, d);
              row["hn"] = h.str();
              row["agree"] = h == z;
              agree = h == z ? "yes" : "no";
              if (h != z)
                rep.errors.emplace_back(element + " d=" + std::to_string(d),
                                        "semistable mass formulas disagree: " + z.str() + " vs " + h.str());
            } else {
              row["hn"] = nullptr;
              row["agree"] = nullptr;
            }
            const double lz = z.sign() > 0 ? log_base(z, Z->q) : -INFINITY;
            row["log_q"] = number_or_null(lz);
            ss.push_back(std::move(row));
            csv << entry.name << ',' << spec.name << ",semistable," << d << ',' << z.str() << ','
                << format_double(lz) << ',' << agree << '\n';
          }
          rj["semistable"] = std::move(ss);
        }
        results.push_back(std::move(rj));
      } catch (const Error& e) {
        record(rep, element, e);
      }
    }
  }
  rep.doc = {{"schema", kConfigSchema}, {"command", "mass"}, {"results", results}};
  rep.doc["errors"] = errors_json(rep);
  rep.csv = csv.str();
  return rep;
}

CommandReport cmd_asymptote(const RunConfig& cfg) {
  if (!cfg.tv && cfg.family.empty()) throw ConfigError("tv/family: the asymptote command needs tv data or a curve family");
  CommandReport rep;
  std::vector<GroupSpec> groups = cfg.groups;
  if (groups.empty()) groups.push_back(builtin_group(GroupFamily::Gm, 1));
  std::ostringstream csv;
  csv << "source,group,index,g,lhs,rhs,tail,gap,ss_gap\n";
  rep.doc = {{"schema", kConfigSchema}, {"command", "asymptote"}, {"trunc", cfg.trunc}};

  if (cfg.tv) {
    const auto& tv = *cfg.tv;
    json tj;
    try {
      const BigRat bound = tv_bound(tv);
      const auto pic = rhs_pic(tv, cfg.trunc);
      tj = {{"q", tv.q}, {"tv_bound", bound.str()}, {"feasible", bound <= BigRat(1)}, {"rhs_pic", rhs_json(pic)}};
      csv << "tv,pic,,,," << format_double(pic.value) << ',' << format_double(pic.tail) << ",,\n";
      json per_group = json::array();
      for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto& spec = groups[k];
        try {
          const auto r = rhs_group(tv, spec, cfg.trunc);
          json gj = {{"group", spec.name}, {"rhs", rhs_json(r)}};
          if (const auto n = spec.gl_rank(); n && *n <= 6) gj["dominance"] = dominance_json(dominance_check(tv, *n, cfg.trunc));
          per_group.push_back(std::move(gj));
          csv << "tv," << spec.name << ",,,," << format_double(r.value) << ',' << format_double(r.tail) << ",,\n";
        } catch (const Error& e) {
          record(rep, "tv x groups[" + std::to_string(k) + "] '" + spec.name + "'", e);
        }
      }
      tj["groups"] = std::move(per_group);
      if (!tv.groups.empty()) {
        const auto gen = rhs_general(tv.groups, tv.q, cfg.d_bound);
        tj["general"] = {{"value", gen.value}, {"within_envelope", gen.within_envelope}, {"violations", gen.violations}};
        csv << "tv,general,,,," << format_double(gen.value) << ",,,\n";
      }
    } catch (const Error& e) {
      record(rep, "tv", e);
    }
    rep.doc["tv"] = std::move(tj);
  }

  if (!cfg.family.empty()) {
    std::vector<CurveModel> models;
    for (const auto& name : cfg.family) models.push_back(cfg.curve(name).model);
    json reports = json::array();
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const auto& spec = groups[k];
      try {
        const auto r = convergence_report(models, spec, cfg.trunc, cfg.count_options());
        for (const auto& row : r.rows)
          csv << "family," << spec.name << ',' << row.index << ',' << row.g << ',' << format_double(row.lhs) << ','
              << format_double(r.rhs.value) << ',' << format_double(r.rhs.tail) << ',' << format_double(row.gap) << ','
              << (row.ss_gap ? format_double(*row.ss_gap) : "") << '\n';
        json rj = report_json(r);
        rj["members"] = cfg.family;
        reports.push_back(std::move(rj));
      } catch (const Error& e) {
        record(rep, "family x groups[" + std::to_string(k) + "] '" + spec.name + "'", e);
      }
    }
    rep.doc["family"] = std::move(reports);
  }
  rep.doc["errors"] = errors_json(rep);
  rep.csv = csv.str();
  return rep;
}

}  // namespace curvemass
