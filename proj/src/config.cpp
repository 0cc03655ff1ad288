#include "curvemass/config.hpp"

#include <fstream>
#include <set>

#include "curvemass/errors.hpp"

namespace curvemass {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ConfigError(where + ": " + what); }

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    fail(where, std::string("wrong type (") + e.what() + ")");
  }
}

bool nonnegative_integer(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

unsigned get_unsigned(const json& j, const std::string& where) {
  if (!nonnegative_integer(j)) fail(where, "expected a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) fail(where, "value too large");
  return static_cast<unsigned>(v);
}

BigRat get_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return BigRat::parse(j.get<std::string>());
    if (j.is_number_integer()) return BigRat(j.get<long>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational as an integer or a \"p/q\" string");
}

std::vector<std::uint32_t> get_coeffs(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of field elements");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_unsigned(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ConfigError("output.format: unknown format '" + text + "' (csv or json)");
}

const CurveEntry& RunConfig::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.name == name) return c;
  throw ConfigError("family: no curve named '" + name + "'");
}

CountOptions RunConfig::count_options() const {
  CountOptions o;
  o.budget = budget;
  o.jobs = jobs;
  return o;
}

CurveEntry parse_curve(const json& j, const std::string& where_in) {
  std::string where = where_in;
  const auto name = get_as<std::string>(require(j, "name", where), where + ".name");
  where += " '" + name + "'";
  std::optional<CurveModel> model;
  const auto kind = get_as<std::string>(require(j, "kind", where), where + ".kind");
  const unsigned p = get_unsigned(require(j, "p", where), where + ".p");
  const unsigned e = j.contains("e") ? get_unsigned(j["e"], where + ".e") : 1;
  try {
    ExtFieldSpec base;
    if (j.contains("modulus")) {
      base.p = p;
      base.m = e;
      base.modulus = get_coeffs(j["modulus"], where + ".modulus");
      validate(base);
    } else {
      if (!is_prime(p)) fail(where + ".p", std::to_string(p) + " is not prime");
      if (e == 0) fail(where + ".e", "extension degree must be >= 1");
      base = standard_field_spec(p, e);
    }
    if (kind == "projective-line") {
      model = CurveModel::projective_line(base);
    } else if (kind == "hyperelliptic") {
      const auto h = j.contains("h") ? get_coeffs(j["h"], where + ".h") : std::vector<std::uint32_t>{};
      const auto f = get_coeffs(require(j, "f", where), where + ".f");
      model = CurveModel::hyperelliptic(base, h, f);
    } else if (kind == "plane") {
      const unsigned degree = get_unsigned(require(j, "degree", where), where + ".degree");
      const auto& terms = require(j, "terms", where);
      if (!terms.is_array()) fail(where + ".terms", "expected an array of [c, i, j, k]");
      std::vector<PlaneTerm> list;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + ".terms[" + std::to_string(t) + "]";
        if (!terms[t].is_array() || terms[t].size() != 4) fail(tw, "expected [c, i, j, k]");
        list.push_back({get_unsigned(terms[t][0], tw), get_unsigned(terms[t][1], tw), get_unsigned(terms[t][2], tw),
                        get_unsigned(terms[t][3], tw)});
      }
      model = CurveModel::plane(base, degree, std::move(list));
    } else {
      fail(where + ".kind", "unknown curve kind '" + kind + "' (projective-line, hyperelliptic, plane)");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    fail(where, err.what());
  }
  CurveEntry entry{name, std::move(*model)};
  if (j.contains("m_max")) entry.m_max = get_unsigned(j["m_max"], where + ".m_max");
  return entry;
}

GroupSpec parse_group(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  try {
    if (j.contains("family")) {
      const auto fam = parse_group_family(get_as<std::string>(j["family"], where + ".family"));
      return builtin_group(fam, get_unsigned(require(j, "n", where), where + ".n"));
    }
    GroupSpec g;
    g.name = get_as<std::string>(require(j, "name", where), where + ".name");
    g.dim = get_unsigned(require(j, "dim", where), where + ".dim");
    const auto& degrees = require(j, "degrees", where);
    if (!degrees.is_array()) fail(where + ".degrees", "expected an array");
    for (std::size_t i = 0; i < degrees.size(); ++i)
      g.degrees.push_back(get_unsigned(degrees[i], where + ".degrees[" + std::to_string(i) + "]"));
    if (j.contains("tamagawa")) g.tamagawa = get_rational(j["tamagawa"], where + ".tamagawa");
    validate(g);
    return g;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    fail(where, err.what());
  }
}

TVData parse_tv(const json& j, const std::string& where) {
  TVData tv;
  const auto q = require(j, "q", where);
  if (!nonnegative_integer(q)) fail(where + ".q", "expected a prime power");
  tv.q = q.get<std::uint64_t>();
  if (j.contains("beta")) {
    const auto& beta = j["beta"];
    if (!beta.is_object()) fail(where + ".beta", "expected an object {\"m\": \"p/q\"}");
    for (const auto& [key, value] : beta.items()) {
      const std::string bw = where + ".beta[\"" + key + "\"]";
      unsigned m = 0;
      try {
        std::size_t used = 0;
        const long v = std::stol(key, &used);
        if (used != key.size() || v < 1) throw std::invalid_argument(key);
        m = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        fail(bw, "index must be a positive integer");
      }
      tv.beta[m] = get_rational(value, bw);
    }
  }
  if (j.contains("groups")) {
    const auto& groups = j["groups"];
    if (!groups.is_array()) fail(where + ".groups", "expected an array");
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const std::string gw = where + ".groups[" + std::to_string(i) + "]";
      LocalGroup grp;
      grp.deg = get_unsigned(require(groups[i], "deg", gw), gw + ".deg");
      grp.gamma = get_rational(require(groups[i], "gamma", gw), gw + ".gamma");
      grp.L = get_rational(require(groups[i], "L", gw), gw + ".L");
      tv.groups.push_back(std::move(grp));
    }
  }
  try {
    validate(tv);
  } catch (const Error& err) {
    fail(where, err.what());
  }
  return tv;
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  if (!doc.contains("schema")) throw ConfigError("config: missing \"schema\"");
  if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != kConfigSchema)
    throw ConfigError("schema: unsupported version " + doc["schema"].dump() + " (expected 1)");

  RunConfig cfg;
  if (doc.contains("curves")) {
    const auto& curves = doc["curves"];
    if (!curves.is_array()) throw ConfigError("curves: expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      auto entry = parse_curve(curves[i], "curves[" + std::to_string(i) + "]");
      if (!seen.insert(entry.name).second)
        throw ConfigError("curves[" + std::to_string(i) + "]: duplicate name '" + entry.name + "'");
      cfg.curves.push_back(std::move(entry));
    }
  }
  if (doc.contains("groups")) {
    const auto& groups = doc["groups"];
    if (!groups.is_array()) throw ConfigError("groups: expected an array");
    for (std::size_t i = 0; i < groups.size(); ++i)
      cfg.groups.push_back(parse_group(groups[i], "groups[" + std::to_string(i) + "]"));
  }
  if (doc.contains("tv") && !doc["tv"].is_null()) cfg.tv = parse_tv(doc["tv"], "tv");
  if (doc.contains("family")) {
    const auto& fam = doc["family"];
    if (!fam.is_array()) throw ConfigError("family: expected an array of curve names");
    for (std::size_t i = 0; i < fam.size(); ++i)
      cfg.family.push_back(get_as<std::string>(fam[i], "family[" + std::to_string(i) + "]"));
  }
  if (doc.contains("trunc")) cfg.trunc = get_unsigned(doc["trunc"], "trunc");
  if (doc.contains("budget")) {
    if (!nonnegative_integer(doc["budget"])) throw ConfigError("budget: expected a positive integer");
    cfg.budget = doc["budget"].get<std::uint64_t>();
  }
  if (doc.contains("jobs")) cfg.jobs = get_unsigned(doc["jobs"], "jobs");
  if (doc.contains("d_bound")) cfg.d_bound = get_unsigned(doc["d_bound"], "d_bound");
  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output: expected an object");
    if (out.contains("format")) cfg.format = parse_output_format(get_as<std::string>(out["format"], "output.format"));
    if (out.contains("path")) cfg.out_path = get_as<std::string>(out["path"], "output.path");
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: '" + path.string() + "' is not valid JSON (" + e.what() + ")");
  }
  return parse_config(doc);
}

void validate(const RunConfig& cfg) {
  if (cfg.trunc < 1) throw ConfigError("trunc: must be >= 1");
  if (cfg.jobs < 1) throw ConfigError("jobs: must be >= 1");
  if (cfg.d_bound < 1) throw ConfigError("d_bound: must be >= 1");
  for (std::size_t i = 0; i < cfg.curves.size(); ++i)
    if (cfg.budget < cfg.curves[i].model.q())
      throw ConfigError("budget: " + std::to_string(cfg.budget) + " is below q = " +
                        std::to_string(cfg.curves[i].model.q()) + " of curves[" + std::to_string(i) + "] '" +
                        cfg.curves[i].name + "'");
  for (std::size_t i = 0; i < cfg.family.size(); ++i) {
    bool found = false;
    for (const auto& c : cfg.curves) found = found || c.name == cfg.family[i];
    if (!found) throw ConfigError("family[" + std::to_string(i) + "]: no curve named '" + cfg.family[i] + "'");
  }
}

}  // namespace curvemass
