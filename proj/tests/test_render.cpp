#include "toric/render.hpp"
#include "toric/resolutions.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

size_t count(const std::string& s, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, EmptyGridIsOutlineOnly) {
  ClassificationGrid g;
  g.polygon = cp2(6);
  g.bbox = {0, 0, 6, 6};
  g.resolution = 1;
  std::string svg = emit_svg(g, {.legend = false});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("id=\"outline\""), std::string::npos);
  EXPECT_EQ(count(svg, "class=\""), 0u);
}

TEST(Render, TwoByTwoGridHasFourCells) {
  auto g = classify_grid(cp2(6), {1, 1, rat(3, 2), rat(3, 2)}, rat(1, 2));
  ASSERT_EQ(g.cells.size(), 4u);
  std::string svg = emit_svg(g, {.legend = false});
  EXPECT_EQ(count(svg, "<rect x="), 4u);
  EXPECT_EQ(count(svg, "class=\"DISPLACEABLE_PROBE\""), 4u);
  EXPECT_NE(svg.find("#D9D9D9"), std::string::npos);
}

TEST(Render, DeterministicAndStyleAware) {
  auto g = classify_grid(sector(3, 7), {0, 0, 4, 2}, rat(1, 4));
  RenderStyle style;
  std::string a = emit_svg(g, style), b = emit_svg(g, style);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("fill=\"#595959\" class"), std::string::npos);  // dark nondisplaceable band
  style.fill[VerdictClass::NondispCertified] = "#123456";
  std::string c = emit_svg(g, style);
  EXPECT_EQ(c.find("fill=\"#595959\" class"), std::string::npos);
  EXPECT_NE(c.find("#123456"), std::string::npos);
}
