#include <cmath>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "hexbubble/solver.hpp"
#include "hexbubble_cli/records.hpp"
#include "hexbubble_cli/svg.hpp"

namespace hexbubble::cli {
namespace {

TEST(Fmt12, TwelveSignificantDigits) {
  EXPECT_EQ(fmt12(1.0), "1");
  EXPECT_EQ(fmt12(-0.0), "0");
  EXPECT_EQ(fmt12(0.1), "0.1");
  EXPECT_EQ(fmt12(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(fmt12(123456789012345.0), "1.23456789012e+14");
}

TEST(Fmt12, RoundTripsWithinRelativeTolerance) {
  for (double v : {3.72241943641, 1e-9, 6.6240939349123, 0.152457211433, 1234.5678}) {
    EXPECT_NEAR(std::stod(fmt12(v)), v, 5e-12 * std::abs(v));
    EXPECT_EQ(fmt12(std::stod(fmt12(v))), fmt12(v));
  }
}

TEST(OutputRecord, FieldsAndSolutions) {
  const DoubleBubbleResult r = solve(0.05);
  const auto j = output_record(r);
  for (const char* key : {"alpha", "case", "perimeter", "L1", "L2", "embedded_perimeter", "kissing_perimeter",
                          "joint_length", "solutions"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["case"], "embedded");
  const auto& sol = j["solutions"][0];
  EXPECT_EQ(sol["bubbles"][0]["volume"], "1");
  EXPECT_EQ(sol["bubbles"][1]["volume"], "0.05");
  EXPECT_EQ(sol["bubbles"][0]["vertices"].size(), 8u);
  EXPECT_EQ(sol["sides"].size(), 12u);
}

TEST(SweepCsv, HeaderAndRows) {
  const std::string csv = sweep_csv(sweep(0.1, 0.3, 3));
  EXPECT_EQ(csv.rfind("alpha,case,perimeter,L1,L2\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("\n0.1,embedded,"), std::string::npos);
  EXPECT_NE(csv.find("\n0.3,kissing,"), std::string::npos);
}

TEST(Svg, HeaderScaleAndSharedEdges) {
  const auto [a, b] = build_figure_geometry(solve(1.0));
  const std::string svg = render_svg({{"kissing", {a, b}}});
  EXPECT_NE(svg.find("scale"), std::string::npos);
  EXPECT_NE(svg.find("class=\"shared\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace hexbubble::cli
