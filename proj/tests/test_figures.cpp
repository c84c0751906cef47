#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cevian/export.hpp"
#include "cevian/figures.hpp"

using namespace cevian;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Export, NumberFormatting) {
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333");
  EXPECT_EQ(format_number(1.0 / 3.0, 4), "0.3333");
}

TEST(Export, ShapeCsvMarksInfinity) {
  const std::vector<ShapeSample> trace{{0.0, {0.0, 1.0}, {0.0, 1.0}}, {0.5, {1.0, 0.0}, {1.0, 0.0}}};
  EXPECT_EQ(shape_csv(trace), "t,re,im\n0,0,0\n0.5,inf,inf\n");
}

TEST(Export, SvgIsDeterministicAndBounded) {
  SvgScene scene;
  scene.highlighted.push_back({"unit", Triple<Approx>{0.0, 1.0, Approx(0.0, 1.0)}});
  const std::string svg = render_svg(scene);
  EXPECT_EQ(svg, render_svg(scene));
  EXPECT_NE(svg.find("viewBox=\"-0.05 -1.05 1.1 1.1\""), std::string::npos);
  EXPECT_NE(svg.find("<title>unit</title>"), std::string::npos);
}

TEST(Figures, NamesAndErrors) {
  EXPECT_EQ(figure_names().size(), 11u);
  EXPECT_THROW(render_figure("fig0"), InvalidArgument);
  EXPECT_EQ(render_figure("fig4").size(), 6u);
  EXPECT_EQ(render_figure("fig7", 30).size(), 2u);
}

TEST(Figures, MatchGoldenFiles) {
  const std::filesystem::path golden(CEVIAN_GOLDEN_DIR);
  for (const auto& name : figure_names()) {
    for (const auto& panel : render_figure(name)) {
      const auto csv = golden / (panel.name + ".csv");
      const auto svg = golden / (panel.name + ".svg");
      ASSERT_TRUE(std::filesystem::exists(csv)) << csv;
      ASSERT_TRUE(std::filesystem::exists(svg)) << svg;
      EXPECT_EQ(panel.csv, slurp(csv)) << panel.name;
      EXPECT_EQ(panel.svg, slurp(svg)) << panel.name;
    }
  }
}

TEST(Figures, FigureOneContainsExactCevianTriangle) {
  const auto panels = render_figure("fig1");
  ASSERT_EQ(panels.size(), 1u);
  EXPECT_NE(panels[0].csv.find("cevian,0,0.03049180328,0.3554098361"), std::string::npos);
}
