// Drives the fuzzyspline executable end to end and checks exit statuses.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "fuzzyspline/dataset_io.hpp"
#include "fuzzyspline/reference_example.hpp"
#include "test_paths.hpp"

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = test_paths::cli().string() + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST(Cli, ValidateFixture) {
  const auto r = run("validate " + quoted(test_paths::fixture()));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ok\n");
}

TEST(Cli, ValidateEmptyFile) {
  const auto path = test_paths::scratch("cli-empty.json");
  fuzzyspline::write_text_file(path, "");
  EXPECT_EQ(run("validate " + quoted(path)).status, 2);
}

TEST(Cli, ValidateCorruptedRow) {
  auto d = fuzzyspline::reference_dataset();
  std::swap(d.points[0].ll, d.points[0].l);
  const auto path = test_paths::scratch("cli-corrupt.json");
  fuzzyspline::save_dataset(d, path);
  const auto r = run("validate " + quoted(path));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("point 0: x not monotone at pair (ll, l)"), std::string::npos) << r.out;
}

TEST(Cli, TableMatchesGolden) {
  const auto r = run("table " + quoted(test_paths::fixture()));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, fuzzyspline::read_text_file(test_paths::golden_table()));
}

TEST(Cli, TableOnInvalidDatasetIsValidationFailure) {
  const auto path = test_paths::scratch("cli-one.json");
  fuzzyspline::write_text_file(path, R"([{"ll":[0,0],"l":[0,0],"rl":[0,0],"crisp":[0,0],"lr":[0,0],"r":[0,0],"rr":[0,0]}])");
  EXPECT_EQ(run("table " + quoted(path)).status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("table " + quoted(test_paths::fixture()) + " --alpha 3").status, 2);
  EXPECT_EQ(run("curves " + quoted(test_paths::fixture()) + " --parametrization foley").status, 2);
  EXPECT_EQ(run("curves " + quoted(test_paths::fixture()) + " --degree 9").status, 2);
  EXPECT_EQ(run("table missing-file.json").status, 2);
}

TEST(Cli, CurvesWritesFiles) {
  const auto out = test_paths::scratch("cli-curves");
  std::filesystem::remove_all(out);
  const auto r = run("curves " + quoted(test_paths::fixture()) + " --alpha 0.5 --degree 3 "
                     "--parametrization centripetal --samples 40 --format json --out " + quoted(out));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(std::filesystem::exists(out / "stage_a_fuzzy.svg"));
  EXPECT_TRUE(std::filesystem::exists(out / "stage_d_defuzzified.json"));
}

TEST(Cli, HelpIsSuccess) {
  EXPECT_EQ(run("--help").status, 0);
}
