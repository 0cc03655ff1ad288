// curvemass: zeta functions, Bun_G masses and asymptotic formulas from a JSON config.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curvemass/commands.hpp"
#include "curvemass/errors.hpp"

namespace {

using namespace curvemass;

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: output: cannot write '" << path << "'\n";
    return 1;
  }
  out << text;
  return out ? 0 : 1;
}

int emit(const RunConfig& cfg, const CommandReport& rep) {
  int status = 0;
  if (cfg.format == OutputFormat::Json) {
    status = write_text(cfg.out_path, rep.doc.dump(2) + "\n");
  } else {
    status = write_text(cfg.out_path, rep.csv);
    if (!rep.sidecar.is_null() && !cfg.out_path.empty() && cfg.out_path != "-")
      status |= write_text(cfg.out_path + ".poly.json", rep.sidecar.dump(2) + "\n");
  }
  for (const auto& [element, message] : rep.errors) std::cerr << "error: " << element << ": " << message << '\n';
  return rep.ok() ? status : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions, G-bundle masses and Tsfasman-Vladut asymptotics for curves over finite fields"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  std::optional<unsigned> trunc, jobs;
  std::optional<std::uint64_t> budget;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Run configuration (JSON, schema 1)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "Output path (default: stdout)");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--trunc", trunc, "Truncation degree M for asymptotic sums")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "Largest field or point set enumerated")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "Worker threads for point counting")->check(CLI::PositiveNumber);
  };
  auto* zeta = app.add_subcommand("zeta", "Point counts, closed points, P(T), class number and zeta values");
  auto* mass = app.add_subcommand("mass", "Masses of Bun_G and semistable GL_n masses");
  auto* asym = app.add_subcommand("asymptote", "Both sides of the asymptotic mass formulas");
  for (auto* sub : {zeta, mass, asym}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = load_config(config_path);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) cfg.format = parse_output_format(format);
    if (trunc) cfg.trunc = *trunc;
    if (budget) cfg.budget = *budget;
    if (jobs) cfg.jobs = *jobs;
    validate(cfg);

    CommandReport rep;
    if (zeta->parsed()) rep = cmd_zeta(cfg);
    else if (mass->parsed()) rep = cmd_mass(cfg);
    else rep = cmd_asymptote(cfg);
    return emit(cfg, rep);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
