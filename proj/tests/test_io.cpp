#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include <json.hpp>

#include "cgf/catalog.hpp"
#include "cgf/io.hpp"
#include "support.hpp"

using namespace cgf;

TEST(Io, RoundTripCatalog) {
  for (const PwlFunction* p : {&kzh_function(), &psi_function(), &psi_prime_function()}) {
    const std::string text = format_function(*p);
    const auto back = parse_function(text);
    EXPECT_EQ(back.rows(), p->rows());
    EXPECT_EQ(back.f(), p->f());
    EXPECT_EQ(back.name(), p->name());
    EXPECT_EQ(back.special_intervals(), p->special_intervals());
    EXPECT_EQ(format_function(back), text);
  }
}

TEST(Io, RoundTripRandom) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto p = testkit::random_pwl(rng, 6);
    const auto back = parse_function(format_function(p));
    EXPECT_EQ(back.rows(), p.rows());
    EXPECT_EQ(back.f(), p.f());
  }
}

TEST(Io, File) {
  const auto path = (std::filesystem::temp_directory_path() / "cgf_io_test.txt").string();
  write_function_file(path, kzh_function());
  EXPECT_EQ(read_function_file(path).rows(), kzh_function().rows());
  EXPECT_EQ(load_function(path).rows(), kzh_function().rows());
  std::remove(path.c_str());
  EXPECT_EQ(load_function("kzh_lifted").rows(), kzh_function().rows());
  EXPECT_EQ(load_function("psi").rows(), psi_function().rows());
  EXPECT_THROW(load_function("/nonexistent/file"), std::exception);
}

TEST(Io, ErrorLines) {
  try {
    parse_function("name: x\nf: 1/2\n0 | 0 | 0 | 0\n1/2 | 1 | one | 1\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  try {
    parse_function("# c\nf: 1/2\n0 | 0 | 0\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_function("0 | 0 | 0 | 0\n"), FormatError);
  EXPECT_THROW(parse_function("f: 1/2\nbogus: 3\n0 | 0 | 0 | 0\n"), FormatError);
  EXPECT_THROW(parse_function("f: 1/2\n1/2 | 0 | 0 | 0\n0 | 0 | 0 | 0\n"), FormatError);
}

TEST(Io, CommentsAndWhitespace) {
  const auto p = parse_function("# gmic\n\nname: g\nf: 1/2\n  0 | 0 | 0 | 0  # origin\n1/2 | 1 | 1 | 1\n");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.name(), "g");
  EXPECT_EQ(p.eval(QNum::ratio(1, 4)), QNum::ratio(1, 2));
}

TEST(Io, AdditivityJsonReimport) {
  const auto& psi = psi_function();
  const auto rep = additive_face_report(psi);
  const auto text = additivity_json(rep, psi.special_intervals());
  const auto back = parse_additivity_json(text);
  ASSERT_EQ(back.size(), rep.complex.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].first, rep.complex[i].triple());
    EXPECT_EQ(back[i].second, rep.classes[i]);
  }
  EXPECT_EQ(text, additivity_json(additive_face_report(psi, Exec::serial), psi.special_intervals()));
}

TEST(Io, OtherJson) {
  const auto& psi = psi_function();
  const auto rep = additive_face_report(psi);
  const auto faces = nlohmann::json::parse(faces_json(rep.complex, psi.special_intervals()));
  EXPECT_TRUE(faces.is_object() || faces.is_array());
  const auto cov = nlohmann::json::parse(covering_json(covering(rep), rep.complex.complex()));
  EXPECT_TRUE(cov.contains("components"));
}
