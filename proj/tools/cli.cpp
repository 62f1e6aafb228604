#include "lober/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "lober/classes.hpp"
#include "lober/errors.hpp"
#include "lober/fixtures.hpp"
#include "lober/intersect.hpp"
#include "lober/io.hpp"
#include "lober/parallel.hpp"
#include "lober/winding.hpp"

namespace lober::cli {
namespace {

template <typename T>
std::optional<T> parse_unsigned(const std::string& s) {
  T v{};
  if (s.empty() || s.front() == '-') return std::nullopt;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

const std::string& value_of(const std::vector<std::string>& args, std::size_t& i) {
  if (i + 1 >= args.size()) throw UsageError{args[i] + " needs a value"};
  return args[++i];
}

void print_diagnostics(const std::vector<std::string>& diagnostics, std::ostream& err) {
  for (const std::string& d : diagnostics) err << "lober: " << d << '\n';
}

void run_oracle(const ClosedCurve& c1, const ClosedCurve& c2, const RunConfig& cfg,
                const LobeReport& report, std::ostream& err) {
  const auto a = fixtures::montecarlo_diff_area(c1, c2, cfg.oracle_samples, cfg.seed);
  const auto b = fixtures::montecarlo_diff_area(c2, c1, cfg.oracle_samples, cfg.seed + 1);
  err << "lober: oracle A1\\A2 = " << a.value << " +- " << a.std_error
      << " (reported " << report.a1_minus_a2 << "), A2\\A1 = " << b.value << " +- "
      << b.std_error << " (reported " << report.a2_minus_a1 << "), " << a.samples
      << " samples, seed " << a.seed << '\n';
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.workers) parallel::set_worker_count(*cfg.workers);

  io::CurveFile f1 = io::read_curve_file(cfg.c1_path);
  io::CurveFile f2 = io::read_curve_file(cfg.c2_path);
  for (const auto* f : {&f1, &f2}) print_diagnostics(f->warnings, err);
  const ClosedCurve c1 = io::to_curve(std::move(f1), cfg.c1_path.string());
  const ClosedCurve c2 = io::to_curve(std::move(f2), cfg.c2_path.string());

  auto [d1, d2] = densify(c1, c2, cfg.densify);
  if (d1.size() != c1.size() || d2.size() != c2.size()) {
    err << "lober: densified to " << d1.size() << " + " << d2.size() << " vertices\n";
  }
  const ClosedCurve n1 = with_orientation(d1, Orientation::ccw);
  const ClosedCurve n2 = with_orientation(d2, Orientation::ccw);

  LobeReport report;
  IntersectionSet crossings;
  if (cfg.mode == Mode::transverse) {
    LobeOptions opts;
    opts.cross_check = cfg.oracle;
    report = lobe_areas(n1, n2, opts, &crossings);
  } else {
    report = set_difference_areas(n1, n2);
    crossings = find_intersections(n1, n2, DetectionMode::tolerant);
  }
  print_diagnostics(report.diagnostics, err);
  if (cfg.oracle) run_oracle(n1, n2, cfg, report, err);

  io::write_run_outputs(cfg.rslt_path, cfg.artifacts_dir, report, crossings, n1, n2);
  if (cfg.plot_dir) {
    if (cfg.mode == Mode::transverse) {
      io::write_lobe_plots(*cfg.plot_dir, report, crossings, n1, n2);
    } else {
      err << "lober: --plot-data needs the class method; no lobe loops in -light mode\n";
    }
  }
  out << io::format_result(io::result_line(report));
  return kExitOk;
}

}  // namespace

std::string usage() {
  return "usage: lober [-light] <c1> <c2> <rslt> [-DENS <nPass> <nDens>]\n"
         "             [--oracle] [--seed <u64>] [--plot-data <dir>] [--artifacts <dir>]\n"
         "             [--workers <n>]\n"
         "       lober fixture <kind> ... (see lober fixture --help)\n"
         "\n"
         "  -light           winding method (handles tangencies and overlaps)\n"
         "  -DENS a b        densify near crossings: a passes of b-fold refinement\n"
         "                   (default 3 10; -DENS 0 disables)\n"
         "  --oracle         class/winding cross-check and Monte-Carlo estimate\n"
         "  --seed u64       Monte-Carlo seed\n"
         "  --plot-data dir  write one Tecplot file per lobe\n"
         "  --artifacts dir  directory for c10..c21 (default: directory of rslt)\n"
         "  --workers n      worker threads (results do not depend on it)\n";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::vector<std::string> positional;
  std::optional<std::filesystem::path> artifacts;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-light") {
      cfg.mode = Mode::light;
    } else if (a == "-DENS") {
      if (i + 1 >= args.size()) throw UsageError{"-DENS needs <nPass> <nDens>"};
      const auto n_pass = parse_unsigned<int>(args[i + 1]);
      if (!n_pass) throw UsageError{"-DENS: '" + args[i + 1] + "' is not a non-negative integer"};
      ++i;
      std::optional<int> n_dens;
      if (i + 1 < args.size()) n_dens = parse_unsigned<int>(args[i + 1]);
      if (n_dens) {
        ++i;
      } else if (*n_pass != 0) {
        throw UsageError{"-DENS needs <nPass> <nDens>"};
      }
      cfg.densify.n_pass = *n_pass;
      cfg.densify.n_dens = n_dens.value_or(1);
      if (cfg.densify.n_pass > 0 && cfg.densify.n_dens < 1) {
        throw UsageError{"-DENS: <nDens> must be at least 1"};
      }
    } else if (a == "--oracle") {
      cfg.oracle = true;
    } else if (a == "--seed") {
      const auto v = parse_unsigned<std::uint64_t>(value_of(args, i));
      if (!v) throw UsageError{"--seed needs an unsigned 64-bit integer"};
      cfg.seed = *v;
    } else if (a == "--plot-data") {
      cfg.plot_dir = value_of(args, i);
    } else if (a == "--artifacts") {
      artifacts = value_of(args, i);
    } else if (a == "--workers") {
      const auto v = parse_unsigned<unsigned>(value_of(args, i));
      if (!v || *v == 0) throw UsageError{"--workers needs a positive integer"};
      cfg.workers = *v;
    } else if (a.size() > 1 && a.front() == '-') {
      throw UsageError{"unknown option " + a};
    } else {
      positional.push_back(a);
    }
  }
  if (positional.size() != 3) {
    throw UsageError{"expected 3 file arguments, got " + std::to_string(positional.size())};
  }
  cfg.c1_path = positional[0];
  cfg.c2_path = positional[1];
  cfg.rslt_path = positional[2];
  if (artifacts) {
    cfg.artifacts_dir = *artifacts;
  } else {
    cfg.artifacts_dir = cfg.rslt_path.parent_path();
    if (cfg.artifacts_dir.empty()) cfg.artifacts_dir = ".";
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args.front() == "fixture") {
    return run_fixture({args.begin() + 1, args.end()}, out, err);
  }
  if (!args.empty() && (args.front() == "-h" || args.front() == "--help")) {
    out << usage();
    return kExitOk;
  }
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "lober: " << e.message << "\n\n" << usage();
    return kExitUsage;
  }
  try {
    return execute(cfg, out, err);
  } catch (const TransversalityError& e) {
    err << "lober: " << e.what() << "\nlober: the curves touch or overlap without crossing; "
        << "rerun with -light to use the winding method\n";
    return kExitTransversality;
  } catch (const TopologyError& e) {
    err << "lober: " << e.what() << "\nlober: the class method needs simple curves with "
        << "transverse crossings; try -light\n";
    return kExitTransversality;
  } catch (const Error& e) {
    err << "lober: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "lober: unexpected failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace lober::cli
