#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "lober/cli.hpp"
#include "lober/errors.hpp"
#include "lober/fixtures.hpp"
#include "lober/io.hpp"
#include "lober/parallel.hpp"


namespace lober::cli {
namespace {

struct CommonOptions {
  std::vector<double> center{0.0, 0.0};
  double radius = 1.0;
  std::size_t n = 4096;
  std::string output;
  bool reverse = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--center", o.center, "centre x y")->expected(2);
  cmd->add_option("--radius,-r", o.radius, "radius")->check(CLI::PositiveNumber);
  cmd->add_option("--n,-n", o.n, "vertex count")->check(CLI::Range(3, 100'000'000));
  cmd->add_option("--output,-o", o.output, "output Tecplot file")->required();
  cmd->add_flag("--reverse", o.reverse, "emit clockwise");
}

}  // namespace

int run_fixture(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate test curves as Tecplot files", "lober fixture"};
  app.require_subcommand(1);
  unsigned workers = 0;
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  CommonOptions circle_opts;
  auto* circle = app.add_subcommand("circle", "regular polygon on a circle");
  add_common(circle, circle_opts);

  CommonOptions ellipse_opts;
  double a = 2.0;
  double b = 1.0;
  double phase = 0.0;
  auto* ellipse = app.add_subcommand("ellipse", "regular parameter sampling of an ellipse");
  add_common(ellipse, ellipse_opts);
  ellipse->add_option("-a", a, "semi-axis along the rotated x axis")->check(CLI::PositiveNumber);
  ellipse->add_option("-b", b, "other semi-axis")->check(CLI::PositiveNumber);
  ellipse->add_option("--phase", phase, "rotation in radians");

  CommonOptions ovp_opts;
  ovp_opts.center = {0.0, 1.5};
  ovp_opts.radius = 0.3;
  double gamma = 0.5;
  double epsilon = 0.1;
  double periods = 1.0;
  std::size_t steps = 2000;
  auto* ovp = app.add_subcommand("ovp-advected", "circle advected by the oscillating vortex pair");
  add_common(ovp, ovp_opts);
  ovp->add_option("--gamma", gamma, "forcing timescale")->check(CLI::PositiveNumber);
  ovp->add_option("--epsilon", epsilon, "perturbation amplitude");
  ovp->add_option("--periods", periods, "forcing periods to advect");
  ovp->add_option("--steps", steps, "RK4 steps per period")->check(CLI::PositiveNumber);

  CommonOptions cap_opts;
  cap_opts.center = {0.0, 0.0};
  cap_opts.radius = 0.1;
  double x0 = 0.1;
  double ratio = 1.6;
  double time = 5.0;
  double dt = 1e-3;
  auto* capsize = app.add_subcommand(
      "capsize", "circle of (y, vy) initial conditions integrated by the roll/pitch equations");
  add_common(capsize, cap_opts);
  capsize->add_option("--x0", x0, "initial roll x");
  capsize->add_option("--ratio", ratio, "pitch/roll frequency ratio R")->check(CLI::PositiveNumber);
  capsize->add_option("--time", time, "integration time");
  capsize->add_option("--dt", dt, "RK4 step")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lober fixture: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (workers > 0) parallel::set_worker_count(workers);
    const CommonOptions* common = nullptr;
    std::optional<ClosedCurve> curve;
    if (circle->parsed()) {
      common = &circle_opts;
      curve = fixtures::circle({circle_opts.center[0], circle_opts.center[1]}, circle_opts.radius,
                               circle_opts.n);
    } else if (ellipse->parsed()) {
      common = &ellipse_opts;
      curve = fixtures::ellipse({ellipse_opts.center[0], ellipse_opts.center[1]}, a, b, phase,
                                ellipse_opts.n);
    } else if (ovp->parsed()) {
      common = &ovp_opts;
      curve = fixtures::ovp_advected_circle({ovp_opts.center[0], ovp_opts.center[1]},
                                            ovp_opts.radius, ovp_opts.n, gamma, epsilon, periods,
                                            steps);
    } else {
      common = &cap_opts;
      curve = fixtures::capsize_section_curve({cap_opts.center[0], cap_opts.center[1]},
                                              cap_opts.radius, cap_opts.n, x0, ratio, time, dt);
    }
    if (common->reverse) curve = reverse(*curve);
    io::write_curve(common->output, *curve, app.get_subcommands().front()->get_name());
    return kExitOk;
  } catch (const Error& e) {
    err << "lober fixture: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace lober::cli
