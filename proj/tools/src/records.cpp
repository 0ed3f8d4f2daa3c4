#include "hexbubble_cli/records.hpp"

#include <fmt/format.h>

namespace hexbubble::cli {

std::string fmt12(double v) { return fmt::format("{:.12g}", v + 0.0); }

namespace {

nlohmann::json vertex_list(const PolyChain& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : c.vertices()) out.push_back({fmt12(p.x), fmt12(p.y)});
  return out;
}

nlohmann::json bubble(const PolyChain& c, double volume) {
  return {{"volume", fmt12(volume)}, {"vertices", vertex_list(c)}};
}

}  // namespace

nlohmann::json solution_record(const CaseSolution& s, double alpha) {
  nlohmann::json sides = nlohmann::json::array();
  for (const auto& side : s.sides) sides.push_back({{"name", side.name}, {"length", fmt12(side.length)}});
  return {{"case", to_string(s.tag)},
          {"perimeter", fmt12(s.perimeter)},
          {"L1", fmt12(s.L1)},
          {"L2", fmt12(s.L2)},
          {"joint_length", fmt12(s.joint_length)},
          {"sides", std::move(sides)},
          {"bubbles", {bubble(s.geometry_a, 1.0), bubble(s.geometry_b, alpha)}}};
}

nlohmann::json output_record(const DoubleBubbleResult& r) {
  nlohmann::json solutions = nlohmann::json::array();
  for (const auto& s : r.solutions) solutions.push_back(solution_record(s, r.alpha));
  const CaseSolution& first = r.solutions.front();
  return {{"alpha", fmt12(r.alpha)},
          {"case", to_string(r.kase)},
          {"perimeter", fmt12(r.perimeter)},
          {"L1", fmt12(first.L1)},
          {"L2", fmt12(first.L2)},
          {"embedded_perimeter", fmt12(r.embedded_perimeter)},
          {"kissing_perimeter", fmt12(r.kissing_perimeter)},
          {"joint_length", fmt12(r.joint_length)},
          {"solutions", std::move(solutions)}};
}

nlohmann::json iso_record(double volume, const IsoperimetricOptimum& iso) {
  return {{"volume", fmt12(volume)}, {"L0", fmt12(iso.L0)}, {"perimeter", fmt12(iso.perimeter)}};
}

std::string text_report(const DoubleBubbleResult& r) {
  std::string out = fmt::format("alpha       {}\ncase        {}\nperimeter   {}\nembedded    {}\nkissing     {}\n",
                                fmt12(r.alpha), to_string(r.kase), fmt12(r.perimeter), fmt12(r.embedded_perimeter),
                                fmt12(r.kissing_perimeter));
  for (const auto& s : r.solutions) {
    out += fmt::format("\n[{}] perimeter {}  L1 {}  L2 {}  joint {}\n", to_string(s.tag), fmt12(s.perimeter),
                       fmt12(s.L1), fmt12(s.L2), fmt12(s.joint_length));
    for (const auto& side : s.sides) out += fmt::format("  {:<5} {}\n", side.name, fmt12(side.length));
  }
  return out;
}

std::string sweep_csv(const std::vector<DoubleBubbleResult>& rows) {
  std::string out = "alpha,case,perimeter,L1,L2\n";
  for (const auto& r : rows) {
    const CaseSolution& s = r.solutions.front();
    out += fmt::format("{},{},{},{},{}\n", fmt12(r.alpha), to_string(r.kase), fmt12(r.perimeter), fmt12(s.L1),
                       fmt12(s.L2));
  }
  return out;
}

}  // namespace hexbubble::cli
