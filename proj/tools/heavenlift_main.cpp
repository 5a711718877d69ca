#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#ifdef HEAVENLIFT_HAVE_OPENMP
#include <omp.h>
#endif

#include "heavenlift/config.hpp"
#include "heavenlift/errors.hpp"
#include "heavenlift/report.hpp"
#include "heavenlift/runner.hpp"

namespace {

struct CommonOpts {
  std::string config;
  std::string out;
  std::string csv;
  std::uint64_t seed = 0;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool config_required) {
  auto* copt = cmd->add_option("--config", o.config, "JSON config file");
  if (config_required) copt->required();
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--seed", o.seed, "override rng_seed from the config");
  cmd->add_option("--jobs", o.jobs, "worker thread count (0 = default)");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw heavenlift::ConfigError({"file: cannot write '" + path + "'"});
  out << text;
}

void emit_report(const CommonOpts& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace heavenlift;

  CLI::App app{
      "heavenlift: residual, duality and curvature checks for lifted "
      "Monge-Ampere solution families"};
  app.require_subcommand(1);

  CommonOpts opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the check suite of a config against its family");
  add_common(verify, opts, true);
  verify->add_option("--csv", opts.csv,
                     "also dump sampled points and residuals as CSV");

  CLI::App* geometry = app.add_subcommand(
      "geometry", "curvature and symmetry data of the transformed family");
  add_common(geometry, opts, true);

  CLI::App* dispersion = app.add_subcommand(
      "dispersion", "frequency table of the travelling-mode partner system");
  add_common(dispersion, opts, false);
  dispersion->add_option("--csv", opts.csv, "write the table as CSV");

  CLI::App* demo = app.add_subcommand(
      "lift-demo", "run the built-in elliptic and hyperbolic pipelines");
  add_common(demo, opts, false);

  CLI::App* sample = app.add_subcommand(
      "sample", "dump sampled field values and residuals as CSV");
  add_common(sample, opts, true);
  sample->add_option("--csv", opts.csv, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad invocation is a config error
  }

  CLI::App* cmd = app.get_subcommands().front();

  try {
    RunConfig cfg;
    if (!opts.config.empty()) cfg = load_config_file(opts.config);
    if (cmd->count("--seed") > 0) cfg.rng_seed = opts.seed;
#ifdef HEAVENLIFT_HAVE_OPENMP
    if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
#else
    (void)opts.jobs;
#endif

    if (cmd == verify) {
      const RunOutcome out = run_verify(cfg);
      emit_report(opts, render_report(out.report));
      if (!opts.csv.empty()) write_file(opts.csv, sample_csv(cfg));
      return out.passed ? 0 : 1;
    }
    if (cmd == geometry) {
      const RunOutcome out = run_geometry_command(cfg);
      emit_report(opts, render_report(out.report));
      return out.passed ? 0 : 1;
    }
    if (cmd == dispersion) {
      std::string csv;
      const RunOutcome out =
          run_dispersion_command(cfg, opts.csv.empty() ? nullptr : &csv);
      emit_report(opts, render_report(out.report));
      if (!opts.csv.empty()) write_file(opts.csv, csv);
      return out.passed ? 0 : 1;
    }
    if (cmd == demo) {
      const RunOutcome out = run_lift_demo();
      emit_report(opts, render_report(out.report));
      return out.passed ? 0 : 1;
    }
    if (cmd == sample) {
      const std::string text = sample_csv(cfg);
      if (!opts.csv.empty())
        write_file(opts.csv, text);
      else if (!opts.out.empty())
        write_file(opts.out, text);
      else
        std::cout << text;
      return 0;
    }
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
