#include "qxr/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>

#include "qxr/config.hpp"
#include "qxr/errors.hpp"
#include "qxr/export.hpp"
#include "qxr/report.hpp"

namespace qxr {

namespace {

using nlohmann::json;

void print_catalog(std::ostream& out, std::optional<int> epsilon, bool as_json) {
  json list = json::array();
  for (const auto& k : catalog_kinds()) {
    if (epsilon && !kind_allows(k.kind, *epsilon)) continue;
    if (as_json) {
      list.push_back({{"kind", k.name}, {"params", k.params}, {"epsilon", k.epsilons}});
      continue;
    }
    out << k.name;
    if (k.epsilons.size() == 1) {
      out << " (epsilon=" << k.epsilons.front() << " only)";
    } else {
      out << " (epsilon in {";
      for (std::size_t i = 0; i < k.epsilons.size(); ++i) out << (i ? ", " : "") << k.epsilons[i];
      out << "})";
    }
    out << ": " << k.params << '\n';
  }
  if (as_json) out << list.dump(2) << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  return f;
}

int cmd_build(const std::string& config_path, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const Config cfg = load_config(config_path);
  const Construction c = build_construction(cfg);
  for (const auto& w : c.warnings) err << "warning: " << w << '\n';
  const GridData grid = sample_grid(c.surface, cfg.grid, Execution::Parallel);
  const Signature& sig = c.surface.signature();
  {
    auto f = open_out(out_path);
    write_grid_csv(f, grid, sig);
  }
  out << "wrote " << out_path << " (" << grid.nodes.size() - grid.skipped << " points";
  if (grid.skipped) out << ", " << grid.skipped << " irregular skipped";
  out << ")\n";
  if (sig.n() == 2 && sig.epsilon() == 0) {
    const std::string obj = std::filesystem::path(out_path).replace_extension(".obj").string();
    auto f = open_out(obj);
    write_obj(f, grid, sig);
    out << "wrote " << obj << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& report_path,
               std::optional<double> tol, std::optional<double> fd_step,
               std::optional<int> samples, std::optional<std::uint64_t> seed, std::ostream& out,
               std::ostream& err) {
  const Config cfg = load_config(config_path);
  const Construction c = build_construction(cfg);
  for (const auto& w : c.warnings) err << "warning: " << w << '\n';
  ReportOptions opts;
  opts.samples = samples.value_or(cfg.verify.samples);
  opts.fd_step = fd_step.value_or(cfg.verify.fd_step);
  opts.tol = tol.value_or(cfg.verify.tol);
  opts.seed = seed.value_or(cfg.verify.seed);
  opts.config_digest = config_digest(cfg);
  const VerificationReport rep = run_report(c.surface, opts);
  {
    auto f = open_out(report_path);
    f << to_json(rep).dump(2) << '\n';
  }
  for (const auto& chk : rep.checks)
    out << (chk.passed ? "PASS " : "FAIL ") << chk.name << " residual=" << format_double(chk.residual)
        << " tol=" << format_double(chk.tolerance) << '\n';
  out << (rep.passed() ? "all checks passed" : "some checks failed") << '\n';
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_profile(const std::string& config_path, const std::string& out_path, std::ostream& out) {
  const Config cfg = load_config(config_path);
  const ProfileTable table = tabulate_profile(cfg);
  auto f = open_out(out_path);
  write_profile_csv(f, table);
  out << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
  for (const auto& n : table.notes) out << n << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypersurfaces of Q^n x R with T as a principal direction"};
  app.require_subcommand(1);

  std::optional<int> epsilon;
  bool as_json = false;
  auto* catalog = app.add_subcommand("catalog", "List base hypersurface kinds");
  catalog->add_option("--epsilon", epsilon, "Restrict to one space form (-1, 0, 1)");
  catalog->add_flag("--json", as_json, "Machine-readable listing");

  std::string config, out_path, report_path;
  std::optional<double> tol, fd_step;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;

  auto* build = app.add_subcommand("build", "Sample the construction on the configured grid");
  build->add_option("--config", config, "Configuration JSON")->required();
  build->add_option("--out", out_path, "Output CSV (an OBJ is written next to it for n=2, eps=0)")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run the finite-difference verification report");
  verify->add_option("--config", config, "Configuration JSON")->required();
  verify->add_option("--report", report_path, "Output report JSON")->required();
  verify->add_option("--tol", tol, "Override verify.tol");
  verify->add_option("--fd-step", fd_step, "Override verify.fd_step");
  verify->add_option("--samples", samples, "Override verify.samples");
  verify->add_option("--seed", seed, "Override verify.seed");

  auto* profile = app.add_subcommand("profile", "Tabulate the profile function");
  profile->add_option("--config", config, "Configuration JSON")->required();
  profile->add_option("--out", out_path, "Output CSV")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*catalog) {
      if (epsilon && (*epsilon < -1 || *epsilon > 1)) throw InputError("--epsilon must be -1, 0 or 1");
      print_catalog(out, epsilon, as_json);
      return kExitOk;
    }
    if (*build) return cmd_build(config, out_path, out, err);
    if (*verify) return cmd_verify(config, report_path, tol, fd_step, samples, seed, out, err);
    if (*profile) return cmd_profile(config, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qxr
