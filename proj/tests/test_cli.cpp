#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cgf/io.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CGF_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

std::string tmp(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, Eval) {
  EXPECT_EQ(run("eval kzh 4/5").out, "1\n");
  EXPECT_EQ(run("eval kzh 219/800 --side plus").out, "51443/147680\n");
  EXPECT_EQ(run("limit kzh 4899/5000 --side minus").out, "101/1000\n");
  EXPECT_EQ(run("eval psi 1/8").out, "1/4\n");
  EXPECT_EQ(run("eval psi_prime 1/8").out, "1/4\n");
  EXPECT_EQ(run("eval kzh_lifted 0").out, "0\n");
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("eval kzh 1/0").code, 2);
  EXPECT_EQ(run("eval nosuchfunction 1/2").code, 2);
  EXPECT_NE(run("").code, 0);
  EXPECT_NE(run("verify bogus").code, 0);
}

TEST(Cli, Minimality) {
  const auto r = run("minimality psi --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["minimal"], true);
  EXPECT_EQ(run("minimality psi --f 1/3").code, 1);
}

TEST(Cli, AdditiveFacesAndCovering) {
  const auto j = run("additive-faces psi --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(j.out));
  EXPECT_NE(run("additive-faces psi --format svg").out.find("<svg"), std::string::npos);
  const auto c = nlohmann::json::parse(run("covering kzh --json").out);
  EXPECT_EQ(c["components"].size(), 2u);
}

TEST(Cli, PerturbationRank) {
  const auto r = run("perturbation-rank psi --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nullity"], 0);
}

TEST(Cli, CatalogExportRoundTrip) {
  EXPECT_NE(run("catalog list").out.find("kzh_lifted"), std::string::npos);
  const auto path = tmp("cgf_cli_psi.txt");
  EXPECT_EQ(run("catalog export psi -o " + path).code, 0);
  EXPECT_EQ(run("eval " + path + " 1/8").out, "1/4\n");
  EXPECT_EQ(run("minimality " + path).code, 0);
  std::remove(path.c_str());
}

TEST(Cli, Epsilon) {
  const auto f = tmp("cgf_cli_pi.txt");
  const auto g = tmp("cgf_cli_bar.txt");
  cgf::write_function_file(f, cgf::testkit::midpoint_pair());
  cgf::write_function_file(g, cgf::testkit::half_difference_pair());
  for (const char* kind : {"scaling", "lipschitz"}) {
    const auto r = run(std::string("epsilon ") + kind + " " + f + " " + g + " --json");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["effective"], true);
  }
  std::remove(f.c_str());
  std::remove(g.c_str());
}

TEST(Cli, VerifyPsi) {
  const auto r = run("verify psi --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "verified");
  EXPECT_EQ(run("verify psi --json").out, run("--serial verify psi --json").out);
}

TEST(Cli, Diagram) {
  const auto svg = tmp("cgf_cli_psi.svg");
  const auto js = tmp("cgf_cli_psi.json");
  EXPECT_EQ(run("diagram psi -o " + svg + " --json " + js).code, 0);
  std::ifstream in(js);
  const auto j = nlohmann::json::parse(in);
  EXPECT_FALSE(j["limit_cones"].empty());
  std::remove(svg.c_str());
  std::remove(js.c_str());
}
