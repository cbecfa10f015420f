// darksector: analyze rational two-sided mirror configurations.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "darksector/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = darksector::cli;

  CLI::App app{"Dark sectors of rational mirror configurations"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string scene, report, out, svg, theta_pi;
  double theta = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scene", scene, "Scene JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "Write the report here instead of stdout");
    sub->add_option("--margin", config.margin, "Enclosing circle radius factor")->capture_default_str();
    sub->add_option("--radius", config.radius, "Enclosing circle radius override");
  };
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--seeds", config.seeds, "Seed directions for the circle map")->capture_default_str();
    sub->add_option("--eps-b", config.eps_b, "Boundary localization tolerance (rad)")->capture_default_str();
    sub->add_option("--cap", config.cap, "Bounce cap per ray")->capture_default_str();
    sub->add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check a scene for overlapping mirrors and similar problems");
  add_common(validate);

  auto* trace = app.add_subcommand("trace", "Trace one ray from the source");
  add_common(trace);
  trace->add_option("--cap", config.cap, "Bounce cap")->capture_default_str();
  auto* theta_opt = trace->add_option("--theta", theta, "Emission direction in radians");
  trace->add_option("--theta-pi", theta_pi, "Emission direction as a multiple of pi, e.g. 3/2")
      ->excludes(theta_opt);
  trace->add_option("--svg", svg, "Also draw the trace");

  auto* map = app.add_subcommand("map", "Decompose the escape-direction circle map");
  add_common(map);
  add_numeric(map);

  auto* sectors = app.add_subcommand("sectors", "Find and verify unilluminated sectors");
  add_common(sectors);
  add_numeric(sectors);
  sectors->add_option("--samples", config.samples, "Sample points for darkness verification")->capture_default_str();
  sectors->add_option("--seed", config.seed, "Random seed for verification sampling")->capture_default_str();
  sectors->add_option("--svg", svg, "Also draw scene, traces and sectors");

  auto* unfold = app.add_subcommand("unfold", "Census of the unfolded translation surface");
  add_common(unfold);

  auto* render = app.add_subcommand("render", "Draw a scene, optionally with a saved trace or sectors report");
  add_common(render);
  render->add_option("--report", report, "Saved trace or sectors report")->check(CLI::ExistingFile);
  render->add_option("--svg", svg, "Output SVG path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseError;
  }

  config.command = *cli::parse_command(app.get_subcommands().front()->get_name());
  config.scene_path = scene;
  if (!report.empty()) config.report_path = report;
  if (!out.empty()) config.out_path = out;
  if (!svg.empty()) config.svg_path = svg;
  if (!theta_pi.empty()) {
    try {
      config.theta_pi = cli::parse_pi_multiple(theta_pi);
    } catch (const std::exception& e) {
      std::cerr << "error: --theta-pi: " << e.what() << "\n";
      return cli::kParseError;
    }
  } else if (trace->count("--theta")) {
    config.theta = theta;
  }
  return cli::run(config, std::cout, std::cerr);
}
