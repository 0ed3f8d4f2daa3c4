#include "hexbubble_cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "hexbubble/error.hpp"
#include "hexbubble/singlebubble.hpp"
#include "hexbubble/solver.hpp"
#include "hexbubble_cli/records.hpp"
#include "hexbubble_cli/svg.hpp"
#include "hexbubble_cli/verify.hpp"

namespace hexbubble::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  f.flush();
  if (!f) throw IoError("failed writing " + path);
}

std::string panel_title(const CaseSolution& s, double alpha) {
  return std::string(to_string(s.tag)) + " alpha=" + fmt12(alpha) + " perimeter=" + fmt12(s.perimeter);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("HEXBUBBLE_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    throw DomainError("HEXBUBBLE_SEED is not a nonnegative integer");
  }
  if (env[used] != '\0') throw DomainError("HEXBUBBLE_SEED is not a nonnegative integer");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perimeter-minimizing double bubbles in the hexagonal norm", "hexbubble"};
  app.require_subcommand(1);

  double alpha = 0.0;
  std::string format = "json";
  auto* solve_cmd = app.add_subcommand("solve", "Global minimizer for one volume ratio");
  solve_cmd->add_option("--alpha", alpha, "Volume ratio in (0, 1]")->required();
  solve_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  double from = 0.01;
  double to = 1.0;
  int steps = 100;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve on an inclusive grid of volume ratios, CSV output");
  sweep_cmd->add_option("--from", from, "First alpha");
  sweep_cmd->add_option("--to", to, "Last alpha");
  sweep_cmd->add_option("--steps", steps, "Number of grid points");
  sweep_cmd->add_option("--out", sweep_out, "CSV path (stdout if omitted)");

  std::string suite = "quick";
  std::uint64_t seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and property checks");
  verify_cmd->add_option("--suite", suite, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", seed, "Sampling seed (HEXBUBBLE_SEED overrides)");

  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw the minimizing configuration as SVG");
  render_cmd->add_option("--alpha", alpha, "Volume ratio in (0, 1]")->required();
  render_cmd->add_option("--out", render_out, "SVG path")->required();

  double volume = 0.0;
  std::string iso_svg;
  auto* iso_cmd = app.add_subcommand("iso", "Single-bubble isoperimetric optimum");
  iso_cmd->add_option("--volume", volume, "Enclosed volume")->required();
  iso_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  iso_cmd->add_option("--svg", iso_svg, "Also write the hexagon as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hexbubble: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const DoubleBubbleResult r = solve(alpha);
      if (format == "json") {
        out << output_record(r).dump(2) << "\n";
      } else {
        out << text_report(r);
      }
    } else if (*sweep_cmd) {
      const std::string csv = sweep_csv(sweep(from, to, steps));
      if (sweep_out.empty()) {
        out << csv;
      } else {
        write_file(sweep_out, csv);
      }
    } else if (*verify_cmd) {
      VerifyOptions opts;
      opts.suite = suite == "full" ? Suite::Full : Suite::Quick;
      opts.seed = seed_from_env(seed);
      const VerifyReport report = run_verify(opts);
      out << report.text(opts);
      return report.passed() ? kExitOk : kExitVerifyFailed;
    } else if (*render_cmd) {
      const DoubleBubbleResult r = solve(alpha);
      std::vector<SvgPanel> panels;
      for (const auto& s : r.solutions) panels.push_back({panel_title(s, alpha), {s.geometry_a, s.geometry_b}});
      write_file(render_out, render_svg(panels));
    } else if (*iso_cmd) {
      const IsoperimetricOptimum iso = isoperimetric_optimum(volume);
      if (format == "json") {
        out << iso_record(volume, iso).dump(2) << "\n";
      } else {
        out << "volume      " << fmt12(volume) << "\nL0          " << fmt12(iso.L0) << "\nperimeter   "
            << fmt12(iso.perimeter) << "\n";
      }
      if (!iso_svg.empty()) {
        write_file(iso_svg, render_svg({{"regular hexagon V=" + fmt12(volume), {isoperimetric_polygon(volume)}}}));
      }
    }
  } catch (const DomainError& e) {
    err << "hexbubble: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "hexbubble: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "hexbubble: internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace hexbubble::cli
