// momhist: command-line front end for histogram shape catalogs.
//
// Exit codes: 0 ok, 1 usage, 2 input parse or I/O, 3 degenerate data,
// 4 any other rejected input (invalid grid, too few values, ...).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "momhist/report.hpp"
#include "momhist/svg.hpp"

namespace {

using namespace momhist;

struct RunConfig {
  std::string input;
  int max_bins = 6;
  bool exactly = false;
  std::string flavor = "frequency";
  std::string format = "json";
  std::string svg_path;
  std::string t0;
  std::string h;
  unsigned m = 1;
  double band_t = 0.10;
  double band_f = 0.05;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar flag_value(const std::string& flag, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a decimal or p/q number, got '" + text + "'");
  }
}

Dataset load(const RunConfig& cfg) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw IoError("cannot read " + cfg.input);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_dataset(text.str());
}

VarianceFlavor flavor_of(const RunConfig& cfg) {
  return cfg.flavor == "density" ? VarianceFlavor::Density : VarianceFlavor::Frequency;
}

BinCountMode mode_of(const RunConfig& cfg) { return cfg.exactly ? BinCountMode::Exactly : BinCountMode::AtMost; }

void emit(const RunConfig& cfg, const report::Json& j, const std::string& text) {
  if (cfg.format == "json") std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

// SVG is rendered before anything is printed, so an unwritable path leaves no partial report.
void maybe_svg(const RunConfig& cfg, const std::function<std::string()>& render) {
  if (cfg.svg_path.empty()) return;
  const std::string doc = render();
  try {
    svg::write_file(cfg.svg_path, doc);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

int run(const std::string& command, const RunConfig& cfg) {
  const Dataset d = load(cfg);
  const SkewBands bands{cfg.band_t, cfg.band_f};

  if (command == "audit") {
    const BinGrid g{flag_value("--t0", cfg.t0), flag_value("--h", cfg.h), cfg.max_bins};
    const AuditVerdict v = audit(d, g, {flavor_of(cfg), bands});
    maybe_svg(cfg, [&] { return svg::histogram(v.shape, g, "Histogram " + v.shape.to_string()); });
    emit(cfg, report::audit_json(v), report::audit_text(v));
    return 0;
  }
  if (command == "dotplot") {
    const ExactMomentGrid g = exact_moment_grid(d, cfg.m);
    maybe_svg(cfg, [&] { return svg::histogram(g.shape, g.grid, "Exact-moment grid, m = " + std::to_string(cfg.m)); });
    emit(cfg, report::dotplot_json(d, g), report::dotplot_text(d, g));
    return 0;
  }

  const Catalog cat = enumerate_level_sets(d, cfg.max_bins, mode_of(cfg));
  maybe_svg(cfg, [&] { return svg::level_set_map(cat); });

  if (command == "enumerate") {
    emit(cfg, report::catalog_json(cat), report::catalog_text(cat));
  } else if (command == "classify") {
    const auto classes = classify_catalog(d, cat, flavor_of(cfg));
    const auto ranks = skew_rank(d, cat, classes, bands);
    emit(cfg, report::classification_json(cat, classes, ranks), report::classification_text(cat, classes, ranks));
  } else if (command == "rank") {
    const auto classes = classify_catalog(d, cat, flavor_of(cfg));
    const auto ranks = skew_rank(d, cat, classes, bands);
    const auto ml = ml_rank(d, cat);
    emit(cfg, report::rank_json(ranks, ml), report::rank_text(ranks, ml));
  } else if (command == "stability") {
    const auto r = stability_cells(cat);
    emit(cfg, report::stability_json(r), report::stability_text(r));
  } else if (command == "reversals") {
    const bool sym = is_exactly_symmetric(d);
    const auto pairs = reversal_pairs(cat);
    std::optional<ClassificationReport> classes;
    if (d.size() >= 2) classes = classify_catalog(d, cat, flavor_of(cfg));
    const auto inv = mode_inversion_report(cat, classes ? &*classes : nullptr);
    emit(cfg, report::reversals_json(sym, pairs, inv), report::reversals_text(sym, pairs, inv));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify the histogram shapes a dataset can take"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "data file: decimal values, one per line or comma separated")
        ->required();
    sub->add_option("--max-bins", cfg.max_bins, "largest number of bins K")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--svg", cfg.svg_path, "also write an SVG plot to this path");
    sub->add_option("--flavor", cfg.flavor, "grouped variance flavor")
        ->check(CLI::IsMember({"frequency", "density"}));
    sub->add_option("--band-t", cfg.band_t, "wide skewness band as a fraction of S")->check(CLI::Range(1e-9, 0.5));
    sub->add_option("--band-f", cfg.band_f, "narrow skewness band as a fraction of S")->check(CLI::Range(1e-9, 0.5));
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"enumerate", "list every shape level set"},
      {"classify", "mean/variance consistency class and skewness rank of every shape"},
      {"rank", "skewness ranks and minimum-width likelihood ranking"},
      {"stability", "bin-width intervals with a fixed set of reachable shapes"},
      {"reversals", "symmetry test, reversal pairs and mode inversions"},
      {"dotplot", "grid on which grouped moments equal data moments exactly"},
      {"audit", "check one user-chosen grid"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name != "dotplot" && name != "audit") sub->add_flag("--exactly-k", cfg.exactly, "require exactly K bins");
    if (name == "dotplot") sub->add_option("--m", cfg.m, "grid refinement m >= 1")->check(CLI::PositiveNumber);
    if (name == "audit") {
      sub->set_help_flag("--help", "print this help message and exit");
      sub->add_option("--t0", cfg.t0, "anchor")->required();
      sub->add_option("--h", cfg.h, "bin width")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, cfg);
  } catch (const UsageError& e) {
    std::cerr << "momhist: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "momhist: parse error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "momhist: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateDataError& e) {
    std::cerr << "momhist: degenerate data: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "momhist: " << e.what() << '\n';
    return 4;
  }
}
