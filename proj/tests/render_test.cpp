#include <gtest/gtest.h>

#include "ige/algorithms.hpp"
#include "ige/render.hpp"

namespace ige {
namespace {

TEST(Render, EmptyGrid) {
  EXPECT_EQ(render_frame(Configuration{}, Palette({"R"}), {0, 0, 2, 2}, FrameFormat::Ascii), ". . .\n. . .\n. . .\n");
}

TEST(Render, A1FixedStart) {
  const RuleSet rs = builtin(BuiltinId::A1Fixed);
  EXPECT_EQ(render_frame(rs.initial, rs.colors, {-2, -1, 2, 2}, FrameFormat::Ascii),
            ". . . B .\n"
            "B . . . .\n"
            ". F L . B\n"
            ". . B . .\n");
}

TEST(Render, A2Start) {
  const RuleSet rs = builtin(BuiltinId::A2NoLights);
  EXPECT_EQ(render_frame(rs.initial, rs.colors, {0, -1, 5, 5}, FrameFormat::Ascii),
            ". R . . . .\n"
            ". . . . . R\n"
            ". . . R R .\n"
            ". . . R . .\n"
            ". . . . . .\n"
            "R . . . . .\n"
            ". . . . . R\n");
}

TEST(Render, Svg) {
  const RuleSet rs = builtin(BuiltinId::A1Fixed);
  const std::string svg = render_frame(rs.initial, rs.colors, {-2, -1, 2, 2}, FrameFormat::Svg, "round 0");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("round 0"), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++circles;
  EXPECT_EQ(circles, 6u);
}

TEST(Render, Viewports) {
  EXPECT_THROW(render_frame(Configuration{}, Palette({"R"}), {1, 0, 0, 0}, FrameFormat::Ascii), std::invalid_argument);
  const Viewport v = bounding_viewport(builtin(BuiltinId::A1Fixed).initial, 1);
  EXPECT_EQ(v.x0, -3);
  EXPECT_EQ(v.y0, -2);
  EXPECT_EQ(v.x1, 3);
  EXPECT_EQ(v.y1, 3);
}

}  // namespace
}  // namespace ige
