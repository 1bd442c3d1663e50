#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string command = std::string(LINEGRAPH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("linegraph_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(Cli, RecognizeClaw) {
  auto claw = file("claw.edges", "0 1\n0 2\n0 3\n");
  auto r = run("recognize " + claw);
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "line graph: no")) << r.out;
  EXPECT_TRUE(has(r.out, "witness 1")) << r.out;
  auto j = run("--json recognize " + claw);
  EXPECT_TRUE(has(j.out, "\"line_graph\":false")) << j.out;
}

TEST_F(Cli, RecognizeTriangle) {
  auto r = run("recognize " + file("k3.g6", "Bw\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "line graph: yes"));
}

TEST_F(Cli, EnumerateTriangle) {
  auto r = run("enumerate " + file("k3.g6", "Bw\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "2 decompositions")) << r.out;
}

TEST_F(Cli, DecomposeAndValidate) {
  auto g = file("p3.edges", "0 1\n1 2\n");
  auto r = run("decompose " + g);
  EXPECT_EQ(r.code, 0);
  auto good = run("validate-relation " + g + " " + file("good.rel", "0-1\n1-2\n"));
  EXPECT_EQ(good.code, 0) << good.out;
  auto bad = run("validate-relation " + g + " " + file("bad.rel", "0-1 1-2\n"));
  EXPECT_EQ(bad.code, 1) << bad.out;
  EXPECT_TRUE(has(bad.out, "invalid")) << bad.out;
}

TEST_F(Cli, RootBothRoutes) {
  auto g = file("k3.g6", "Bw\n");
  auto a = run("root " + g);
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(has(a.out, "phi:"));
  auto b = run("root " + g + " --via relation");
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(has(b.out, "roles:")) << b.out;
}

TEST_F(Cli, Whitney) {
  auto p = file("p4.edges", "0 1\n1 2\n2 3\n");
  auto r = run("whitney " + p + " " + p + " " + file("flip.phi", "0-1 2-3\n1-2 1-2\n2-3 0-1\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "induced: sigma = 3 2 1 0")) << r.out;
  auto k3 = file("k3.edges", "0 1\n0 2\n1 2\n");
  auto claw = file("claw.edges", "0 1\n0 2\n0 3\n");
  auto e = run("whitney " + k3 + " " + claw + " " + file("tri.phi", "0-1 0-1\n0-2 0-2\n1-2 0-3\n"));
  EXPECT_EQ(e.code, 1);
  EXPECT_TRUE(has(e.out, "exceptional: K3/K1,3")) << e.out;
}

TEST_F(Cli, K0Demo) {
  auto r = run("k0-demo 2 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "=4 cliques of size 4, line graph: yes, χ=4, root ≅ 4×K_{1,4}")) << r.out;
}

TEST_F(Cli, CapRefusal) {
  auto r = run("--cap 3 decompose " + file("k4.g6", "C~\n"));
  EXPECT_EQ(r.code, 3);
  auto k0 = run("--cap 4 k0-demo 3 3");
  EXPECT_EQ(k0.code, 3);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("recognize " + file("junk.g6", "!!!\n")).code, 2);
  EXPECT_EQ(run("recognize " + (dir_ / "missing.edges").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, CatalogDump) {
  auto r = run("catalog-dump");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "# linegraph catalog v1"));
  std::ifstream shipped(LINEGRAPH_CATALOG_FILE);
  std::string text((std::istreambuf_iterator<char>(shipped)), std::istreambuf_iterator<char>());
  EXPECT_EQ(r.out, text);
}

TEST_F(Cli, Selfcheck) {
  auto r = run("selfcheck --jobs 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "23 passed, 0 failed")) << r.out;
}
