#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ifs_cstar/config.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/gallery.hpp"
#include "ifs_cstar/pipeline.hpp"

using namespace ifs_cstar;

namespace {

struct Options {
  std::string config;
  std::optional<int> depth;
  std::optional<std::string> seeds;
  std::optional<std::uint64_t> rng_seed;
  bool strict = false;
  bool timing = false;
  std::string format = "json";
  std::optional<std::string> output;
};

std::string render(const Report& r, const std::string& format) {
  if (format == "text") return report_to_text(r);
  return report_to_json(r).dump(2) + "\n";
}

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw ConfigError("cannot write output file: " + *path);
  out << text;
  if (!out) throw ConfigError("cannot write output file: " + *path);
}

int run(const std::string& command, RunConfig cfg, const Options& o) {
  if (o.depth) {
    if (*o.depth < 1) throw ConfigError("depth must be at least 1");
    cfg.depth = *o.depth;
  }
  if (o.seeds) cfg.seeds = parse_seed_list(*o.seeds);
  if (o.rng_seed) cfg.rng_seed = *o.rng_seed;
  const Report report = run_pipeline(cfg, RunOptions{command, o.timing});
  emit(render(report, o.format), o.output);
  return report_exit_code(report, o.strict);
}

void add_run_options(CLI::App* sub, Options& o, bool need_config) {
  auto* cfg = sub->add_option("--config", o.config, "configuration file (JSON)");
  if (need_config) cfg->required();
  sub->add_option("--depth", o.depth, "basis depth D");
  sub->add_option("--seeds", o.seeds, "comma-separated seed points, e.g. \"2/3,8/27\"");
  sub->add_option("--rng-seed", o.rng_seed, "seed for random functions and auto seeds");
  sub->add_flag("--strict", o.strict, "exit 4 when the verdict is inconclusive");
  sub->add_flag("--timing", o.timing, "record wall-clock timings in the report");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output", o.output, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural checks and matrix evidence for affine iterated function systems"};
  app.require_subcommand(1);
  Options o;
  auto* check = app.add_subcommand("check", "structural conditions only");
  auto* verify = app.add_subcommand("verify", "matrix identity suites");
  auto* verdict = app.add_subcommand("verdict", "conditions, suites and the masa/Cartan verdict");
  auto* gal = app.add_subcommand("gallery", "bundled example systems");
  for (auto* sub : {check, verify, verdict}) add_run_options(sub, o, true);
  add_run_options(gal, o, false);
  std::string entry;
  bool run_entries = false;
  gal->add_option("name", entry, "entry to print (or run with --run)");
  gal->add_flag("--run", run_entries, "run the verdict pipeline on the entry (all entries when no name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gal->parsed()) {
      if (!run_entries) {
        if (entry.empty()) {
          for (const auto& e : gallery()) std::cout << e.name << "\t" << e.description << "\n";
        } else {
          emit(gallery_entry(entry).config, o.output);
        }
        return 0;
      }
      if (!entry.empty()) return run("verdict", load_config_text(gallery_entry(entry).config), o);
      int worst = 0;
      std::string all;
      for (const auto& e : gallery()) {
        const RunConfig cfg = load_config_text(e.config);
        Options each = o;
        each.output.reset();
        RunConfig c = cfg;
        if (o.depth) c.depth = *o.depth;
        if (o.rng_seed) c.rng_seed = *o.rng_seed;
        const Report report = run_pipeline(c, RunOptions{"verdict", o.timing});
        all += render(report, o.format);
        worst = std::max(worst, report_exit_code(report, o.strict));
      }
      emit(all, o.output);
      return worst;
    }
    const std::string command = check->parsed() ? "check" : verify->parsed() ? "verify" : "verdict";
    return run(command, load_config(o.config), o);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
