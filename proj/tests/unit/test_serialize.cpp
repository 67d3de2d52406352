#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "veronormal/commands.hpp"
#include "veronormal/curves.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/serialize.hpp"
#include "veronormal/verify.hpp"

using namespace veronormal;

TEST(Json, GradedMapRoundTrip) {
  const GradedMap f = normal_presentation(VeroneseContext(2, 3));
  EXPECT_EQ(graded_map_from_json(to_json(f)), f);
}

TEST(Json, CurveRoundTrip) {
  const CurveParam c = rnc(3, 4);
  const CurveParam back = curve_from_json(to_json(c));
  EXPECT_EQ(back.degree, c.degree);
  EXPECT_EQ(back.forms, c.forms);
}

TEST(Json, CurveRejectsGarbage) {
  EXPECT_THROW(curve_from_json(json{{"degree", 1}}), FormatError);
  EXPECT_THROW(curve_from_json(json{{"degree", 1}, {"forms", {"s", "t^2"}}}), FormatError);
  EXPECT_THROW(curve_from_json(json{{"degree", 2}, {"forms", {"s^2", "s*t"}}}), FormatError);
}

TEST(Commands, NormalExamples) {
  const json a = cmd_normal(2, 2);
  EXPECT_EQ(a["rank"], 3);
  EXPECT_EQ(a["degree"], 9);
  EXPECT_EQ(a["slope"], "3");
  EXPECT_EQ(a["chern"], json({"1", "9", "30"}));
  const json b = cmd_normal(1, 4);
  EXPECT_EQ(b["rank"], 3);
  EXPECT_EQ(b["degree"], 18);
  EXPECT_EQ(b["slope"], "6");
  EXPECT_THROW(cmd_normal(3, 1), MathError);
}

TEST(Commands, RestrictExamples) {
  const json a = cmd_restrict(3, 2, CurveSpec{"line", 0, ""}, 5);
  EXPECT_TRUE(a["all_identical"].get<bool>());
  for (const auto& s : a["samples"]) EXPECT_EQ(s["splitting"]["degrees"], json({4, 3, 3, 2, 2, 2}));

  const json b = cmd_restrict(2, 2, CurveSpec{"rnc", 0, ""}, 3);
  for (const auto& s : b["samples"]) {
    EXPECT_EQ(s["splitting"]["degrees"], json({6, 6, 6}));
    EXPECT_TRUE(s["gm"]["sum_ok"].get<bool>());
  }

  const json c = cmd_restrict(2, 3, CurveSpec{"line", 0, ""}, 10);
  for (const auto& s : c["samples"]) {
    EXPECT_EQ(s["splitting"]["degree"], 27);
    EXPECT_TRUE(s["gm"]["spread_ok"].get<bool>());
  }
}

TEST(Commands, RestrictFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "veronormal_curve_test.json";
  write_text_file(path.string(), to_json(rnc(2, 3)).dump());
  const json a = cmd_restrict(2, 2, CurveSpec{"file", 0, path.string()}, 1);
  EXPECT_EQ(a["samples"][0]["splitting"]["degrees"], json({6, 6, 6}));
  EXPECT_THROW(cmd_restrict(3, 2, CurveSpec{"file", 0, path.string()}, 1), FormatError);
  EXPECT_THROW(cmd_restrict(2, 2, CurveSpec{"file", 0, "/nonexistent/curve.json"}, 1), FormatError);
  std::filesystem::remove(path);
}

TEST(Commands, SlopesExamples) {
  const json a = cmd_slopes(2, 2);
  ASSERT_EQ(a["rows"].size(), 3u);
  EXPECT_EQ(a["rows"][0]["slope"], "-1");
  EXPECT_EQ(a["rows"][1]["slope"], "-2/5");
  EXPECT_EQ(a["rows"][2]["slope"], "0");
  EXPECT_EQ(a["monotone"], "pass");
  const json b = cmd_slopes(1, 2);
  EXPECT_EQ(b["rows"][0]["slope"], "-2");
  // K^2_2 on P^1 is O(-1)^2.
  EXPECT_EQ(b["rows"][1]["slope"], "-1");
  EXPECT_EQ(b["rows"][2]["slope"], "0");
}

TEST(Golden, PinnedFilesMatch) {
  for (const auto& r : check_golden_dir(default_golden_dir())) EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
}

TEST(Golden, CorruptionIsNamed) {
  const auto dir = std::filesystem::temp_directory_path() / "veronormal_golden_corrupt";
  std::filesystem::remove_all(dir);
  write_golden_dir(dir.string());
  {
    std::ofstream f(dir / "rnc_n3_seed1.json", std::ios::app);
    f << "x";
  }
  int failed = 0;
  for (const auto& r : check_golden_dir(dir.string())) {
    if (r.passed) continue;
    ++failed;
    EXPECT_EQ(r.id, "golden:rnc_n3_seed1.json");
  }
  EXPECT_EQ(failed, 1);
  std::filesystem::remove_all(dir);
}
