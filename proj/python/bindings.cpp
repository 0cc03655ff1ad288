#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "curvemass/asymptotics.hpp"
#include "curvemass/commands.hpp"
#include "curvemass/errors.hpp"
#include "curvemass/mass.hpp"

namespace py = pybind11;
using namespace curvemass;

namespace {

py::object to_py(const BigInt& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::object to_py(const BigRat& r) {
  // Leaked on purpose: must outlive interpreter teardown.
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_py(r.numerator()), to_py(r.denominator()));
}

// Accepts int, fractions.Fraction or a "p/q" string.
BigRat from_py(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj)) throw InvalidArgument("expected a rational, got bool");
  return BigRat::parse(py::str(obj).cast<std::string>());
}

py::list int_list(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

ZetaData make_zeta(std::uint64_t q, unsigned g, const py::iterable& a) {
  ZetaData Z{q, g, {}};
  for (auto x : a) Z.a.emplace_back(py::str(x).cast<std::string>());
  validate(Z);
  return Z;
}

TVData make_tv(std::uint64_t q, const py::dict& beta) {
  TVData tv;
  tv.q = q;
  for (auto [k, v] : beta) tv.beta[k.cast<unsigned>()] = from_py(v);
  validate(tv);
  return tv;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zeta functions of curves over finite fields and masses of G-bundle moduli";

  auto base = py::register_exception<Error>(m, "CurvemassError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<SingularModel>(m, "SingularModel", base.ptr());
  py::register_exception<InconsistentCounts>(m, "InconsistentCounts", base.ptr());
  py::register_exception<WeilViolation>(m, "WeilViolation", base.ptr());
  py::register_exception<MalformedGroup>(m, "MalformedGroup", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  m.def("find_irreducible", &find_irreducible, py::arg("p"), py::arg("m"),
        "Lexicographically smallest monic irreducible of degree m over F_p, constant term first.");

  py::class_<CurveModel>(m, "CurveModel")
      .def_static("projective_line", [](std::uint32_t p, unsigned e) { return CurveModel::projective_line(standard_field_spec(p, e)); },
                  py::arg("p"), py::arg("e") = 1)
      .def_static("hyperelliptic",
                  [](std::uint32_t p, std::vector<std::uint32_t> h, std::vector<std::uint32_t> f, unsigned e) {
                    return CurveModel::hyperelliptic(standard_field_spec(p, e), std::move(h), std::move(f));
                  },
                  py::arg("p"), py::arg("h"), py::arg("f"), py::arg("e") = 1,
                  "y^2 + h(x) y = f(x); coefficients are field-element encodings, constant term first.")
      .def_static("plane",
                  [](std::uint32_t p, unsigned degree, const std::vector<std::array<unsigned, 4>>& terms, unsigned e) {
                    std::vector<PlaneTerm> list;
                    for (const auto& t : terms) list.push_back({t[0], t[1], t[2], t[3]});
                    return CurveModel::plane(standard_field_spec(p, e), degree, std::move(list));
                  },
                  py::arg("p"), py::arg("degree"), py::arg("terms"), py::arg("e") = 1,
                  "Homogeneous F(x, y, z) = 0 given as [coeff, i, j, k] terms.")
      .def_property_readonly("q", &CurveModel::q)
      .def("genus", [](const CurveModel& c, std::uint64_t budget) { return genus_of(c, {budget}); },
           py::arg("budget") = kDefaultBudget)
      .def("count_points",
           [](const CurveModel& c, unsigned mm, std::uint64_t budget, unsigned jobs) {
             py::gil_scoped_release release;
             return count_points(c, mm, {budget, jobs});
           },
           py::arg("m"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1)
      .def("count_series",
           [](const CurveModel& c, unsigned M, std::uint64_t budget) { return int_list(count_series(c, M, {budget}).N); },
           py::arg("M"), py::arg("budget") = kDefaultBudget)
      .def("__repr__", [](const CurveModel& c) { return "<CurveModel " + c.describe() + ">"; });

  py::class_<ZetaData>(m, "ZetaData")
      .def(py::init(&make_zeta), py::arg("q"), py::arg("g"), py::arg("a"))
      .def_readonly("q", &ZetaData::q)
      .def_readonly("g", &ZetaData::g)
      .def_property_readonly("a", [](const ZetaData& Z) { return int_list(Z.a); })
      .def("class_number", [](const ZetaData& Z) { return to_py(class_number(Z)); })
      .def("quasi_residue", [](const ZetaData& Z) { return to_py(quasi_residue(Z)); })
      .def("special_value", [](const ZetaData& Z, int s) { return to_py(special_value(Z, s)); }, py::arg("s"))
      .def("regenerate_counts", [](const ZetaData& Z, unsigned M) { return int_list(regenerate_counts(Z, M)); },
           py::arg("M"))
      .def(py::self == py::self)
      .def("__repr__", [](const ZetaData& Z) {
        std::string s = "<ZetaData q=" + std::to_string(Z.q) + " g=" + std::to_string(Z.g) + " a=[";
        for (std::size_t i = 0; i < Z.a.size(); ++i) s += (i ? ", " : "") + Z.a[i].get_str();
        return s + "]>";
      });

  m.def("zeta_from_counts",
        [](std::uint64_t q, unsigned g, const py::iterable& counts) {
          std::vector<BigInt> N;
          for (auto x : counts) N.emplace_back(py::str(x).cast<std::string>());
          return zeta_from_counts(q, g, N);
        },
        py::arg("q"), py::arg("g"), py::arg("counts"), "Zeta data from N_1..N_g.");
  m.def("zeta_of",
        [](const CurveModel& c, std::uint64_t budget) {
          const unsigned g = genus_of(c, {budget});
          return zeta_from_counts(count_series(c, std::max(g, 1u), {budget}));
        },
        py::arg("curve"), py::arg("budget") = kDefaultBudget);
  m.def("degree_spectrum",
        [](std::uint64_t q, const py::iterable& counts) {
          PointCounts pc{q, 0, {}};
          for (auto x : counts) pc.N.emplace_back(py::str(x).cast<std::string>());
          return int_list(degree_spectrum(pc).B);
        },
        py::arg("q"), py::arg("counts"));

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init([](std::string name, unsigned dim, std::vector<unsigned> degrees, const py::object& tamagawa) {
             GroupSpec g{std::move(name), dim, std::move(degrees), from_py(tamagawa)};
             validate(g);
             return g;
           }),
           py::arg("name"), py::arg("dim"), py::arg("degrees"), py::arg("tamagawa") = 1)
      .def_readonly("name", &GroupSpec::name)
      .def_readonly("dim", &GroupSpec::dim)
      .def_readonly("degrees", &GroupSpec::degrees)
      .def_property_readonly("tamagawa", [](const GroupSpec& g) { return to_py(g.tamagawa); })
      .def("__repr__", [](const GroupSpec& g) { return "<GroupSpec " + g.name + ">"; });

  m.def("builtin_group", [](const std::string& family, unsigned n) { return builtin_group(parse_group_family(family), n); },
        py::arg("family"), py::arg("n"), "family: GL, SL, Sp, SO-odd, SO-even or Gm; n is the rank.");
  m.def("group_order", [](const GroupSpec& g, std::uint64_t q, unsigned r) { return to_py(group_order(g, q, r)); },
        py::arg("spec"), py::arg("q"), py::arg("r") = 1);

  m.def("mass_bun", [](const GroupSpec& g, const ZetaData& Z) { return to_py(mass_bun(g, Z)); }, py::arg("spec"),
        py::arg("zeta"));
  m.def("zagier_ss_mass", [](unsigned n, long d, const ZetaData& Z) { return to_py(zagier_ss_mass(n, d, Z)); },
        py::arg("n"), py::arg("d"), py::arg("zeta"));
  m.def("hn_ss_mass", [](unsigned n, long d, const ZetaData& Z) { return to_py(hn_ss_mass(n, d, Z)); }, py::arg("n"),
        py::arg("d"), py::arg("zeta"));

  py::class_<TVData>(m, "TVData")
      .def(py::init(&make_tv), py::arg("q"), py::arg("beta"), "beta maps m to a rational density.")
      .def_readonly("q", &TVData::q)
      .def_property_readonly("beta", [](const TVData& tv) {
        py::dict out;
        for (const auto& [k, v] : tv.beta) out[py::int_(k)] = to_py(v);
        return out;
      });
  m.def("tv_bound", [](const TVData& tv) { return to_py(tv_bound(tv)); }, py::arg("tv"));
  m.def("rhs_pic", [](const TVData& tv, unsigned M) { auto r = rhs_pic(tv, M); return py::make_tuple(r.value, r.tail); },
        py::arg("tv"), py::arg("M"), "(value, tail)");
  m.def("rhs_group",
        [](const TVData& tv, const GroupSpec& g, unsigned M) {
          auto r = rhs_group(tv, g, M);
          return py::make_tuple(r.value, r.tail);
        },
        py::arg("tv"), py::arg("spec"), py::arg("M"), "(value, tail)");
  m.def("dominance_check",
        [](const TVData& tv, unsigned n, unsigned M) {
          auto t = dominance_check(tv, n, M);
          py::list rows;
          for (const auto& r : t.rows) rows.append(py::make_tuple(py::tuple(py::cast(r.composition)), r.exponent));
          return py::make_tuple(rows, t.dominant);
        },
        py::arg("tv"), py::arg("n"), py::arg("M"), "([(composition, exponent)], dominant)");

  m.def("run",
        [](const std::string& command, const std::string& config) {
          const RunConfig cfg = parse_config(nlohmann::json::parse(config));
          CommandReport rep;
          if (command == "zeta") rep = cmd_zeta(cfg);
          else if (command == "mass") rep = cmd_mass(cfg);
          else if (command == "asymptote") rep = cmd_asymptote(cfg);
          else throw InvalidArgument("unknown command '" + command + "'");
          return rep.doc.dump();
        },
        py::arg("command"), py::arg("config"), "Runs a CLI subcommand on a JSON config string; returns the JSON report.");
}
