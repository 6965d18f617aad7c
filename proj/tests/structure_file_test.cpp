#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hombra/errors.hpp"
#include "hombra/structure_file.hpp"
#include "support.hpp"

using namespace hombra;
using hombra::test::fixture_path;
using hombra::test::random_map;
using hombra::test::random_vec;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kSmall = R"({"dim": 1, "basis": ["g"], "scalars": "rational",
  "mul": [[["1"]]], "unit": ["1"], "alpha": [["1"]],
  "comul": [[["1", 0, 0]]], "counit": ["1"], "beta": [["1"]]})";

std::string with(const std::string& key, const std::string& value) {
  std::string text = kSmall;
  const auto at = text.find("\"" + key + "\"");
  const auto colon = text.find(':', at);
  // replace the value up to the next top-level comma or closing brace
  int depth = 0;
  std::size_t end = colon + 1;
  for (; end < text.size(); ++end) {
    const char c = text[end];
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') {
      if (depth == 0) break;
      --depth;
    }
    if (c == ',' && depth == 0) break;
  }
  return text.substr(0, colon + 1) + " " + value + text.substr(end);
}

}  // namespace

TEST(StructureFile, FixturesRoundTripByteExact) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(HOMBRA_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = slurp(entry.path().string());
    EXPECT_EQ(emit_structure(parse_structure(text)), text) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 8u);
}

TEST(StructureFile, PartialStructures) {
  const StructureFile a = load_structure(fixture_path("example_2d"));
  EXPECT_TRUE(a.algebra);
  EXPECT_FALSE(a.coalgebra);
  EXPECT_THROW((void)a.bialgebra(), DimensionMismatch);
  const StructureFile c = load_structure(fixture_path("example_2dco"));
  EXPECT_FALSE(c.algebra);
  EXPECT_TRUE(c.coalgebra);
  EXPECT_EQ(a.basis, (std::vector<std::string>{"e1", "e2"}));
}

TEST(StructureFile, VerbatimExampleData) {
  const HomBialgebra b = load_structure(fixture_path("example_2dbi")).bialgebra();
  EXPECT_EQ(b.algebra.alpha, (LinMap{{2, 0}, {-1, 1}}));
  EXPECT_EQ(b.coalgebra.beta, (LinMap{{1, 0}, {1, 1}}));
  EXPECT_EQ(b.coalgebra.comul.column(1), (Vec{0, 1, 1, -2}));
  EXPECT_EQ(b.algebra.mul.column(3), (Vec{0, 1}));
}

TEST(StructureFile, SmallParses) {
  const StructureFile s = parse_structure(kSmall);
  EXPECT_EQ(s.dim, 1u);
  EXPECT_TRUE(s.bialgebra().algebra.alpha == LinMap::identity(1));
  EXPECT_NO_THROW(parse_structure(with("unit", "[1]")));  // integer coefficients are accepted
}

TEST(StructureFile, Errors) {
  try {
    parse_structure(with("unit", R"(["1/0"])"));
    FAIL() << "expected DivisionByZero";
  } catch (const DivisionByZero& e) {
    EXPECT_NE(std::string(e.what()).find("/unit/0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_structure(with("unit", R"(["1.5"])")), ParseError);
  EXPECT_THROW(parse_structure(with("unit", "[1.5]")), ParseError);
  EXPECT_THROW(parse_structure(with("unit", R"(["1", "0"])")), DimensionMismatch);
  EXPECT_THROW(parse_structure(with("comul", R"([[["1", 0, 1]]])")), DimensionMismatch);
  EXPECT_THROW(parse_structure(with("scalars", R"("real")")), ParseError);
  EXPECT_THROW(parse_structure(with("dim", "0")), ParseError);
  EXPECT_THROW(parse_structure(R"({"dim": 1, "bogus": 2})"), ParseError);
  EXPECT_THROW(parse_structure(R"({"dim": 1, )"), ParseError);
  EXPECT_THROW(parse_structure(R"({"dim": 1, "mul": [[["1"]]]})"), ParseError);  // mul without unit and alpha
}

TEST(StructureFileProperty, RandomRoundTrip) {
  std::mt19937 rng(31337);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 4);
    const std::size_t n = d(rng);
    StructureFile s;
    s.dim = n;
    s.basis = default_basis(n);
    if (t % 3 != 1) {
      HomAlgebra a;
      a.dim = n;
      a.mul = random_map(rng, n, n * n, 0.3);
      a.unit = random_vec(rng, n);
      a.alpha = random_map(rng, n, n);
      if (t % 5 == 0) {
        Truncation tr;
        for (std::size_t i = 0; i < n; ++i) tr.degree.push_back(static_cast<unsigned>(i));
        tr.max_degree = 2;
        a.truncation = tr;
      }
      s.algebra = a;
    }
    if (t % 3 != 2) {
      HomCoalgebra c;
      c.dim = n;
      c.comul = random_map(rng, n * n, n, 0.3);
      c.counit = random_map(rng, 1, n);
      c.beta = random_map(rng, n, n);
      s.coalgebra = c;
    }
    if (t % 3 == 0) {
      s.antipode = random_map(rng, n, n);
      if (t % 2 == 0) s.antipode_exponent = static_cast<unsigned>(t % 4);
    }
    if (t % 4 == 0) s.params["q"] = Scalar(t + 1, 3);
    const std::string text = emit_structure(s);
    const StructureFile back = parse_structure(text);
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(emit_structure(back), text);
  }
}
