#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "lieq/algebra_io.hpp"
#include "lieq/catalog.hpp"

using namespace lieq;

TEST(AlgebraFile, ExportRoundTripsEveryCatalogEntry) {
  for (const auto& name : catalog_names()) {
    LieAlgebra a = catalog(name);
    std::string text = export_algebra(a);
    LieAlgebra back = parse_algebra(text);
    EXPECT_EQ(back.name(), a.name());
    EXPECT_EQ(back.generators(), a.generators());
    EXPECT_EQ(back.symbols(), a.symbols());
    EXPECT_EQ(back.table(), a.table()) << name;
    EXPECT_EQ(export_algebra(back), text) << "export is byte-stable";
  }
}

TEST(AlgebraFile, HandWritten) {
  LieAlgebra a = parse_algebra(R"({
    "name": "so3",
    "symbols": [],
    "generators": ["Jx", "Jy", "Jz"],
    "brackets": [
      {"a": "Jx", "b": "Jy", "result": [{"gen": "Jz", "coeff": "i"}]},
      {"a": "Jy", "b": "Jz", "result": [{"gen": "Jx", "coeff": "i"}]},
      {"a": "Jz", "b": "Jx", "result": [{"gen": "Jy", "coeff": "i"}]}
    ]
  })");
  EXPECT_EQ(a.dimension(), 3u);
  EXPECT_TRUE(validate(a).ok());
  EXPECT_EQ(bracket(a, "Jx", "Jz"), Combination::of(1, -Scalar::i()));
}

TEST(AlgebraFile, OmittedBracketsAreZero) {
  LieAlgebra a = parse_algebra(R"({"name": "ab", "symbols": ["eps"], "generators": ["A", "B"]})");
  EXPECT_TRUE(a.table().empty());
}

TEST(AlgebraFile, Errors) {
  try {
    parse_algebra("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_algebra(R"({"symbols": [], "generators": []})"), ParseError);
  EXPECT_THROW(parse_algebra(R"({"name": "x", "symbols": [], "generators": ["A", "A"]})"), DuplicateName);
  EXPECT_THROW(parse_algebra(R"({"name": "x", "symbols": [], "generators": ["A"],
      "brackets": [{"a": "A", "b": "B", "result": []}]})"),
               UnknownName);
  EXPECT_THROW(parse_algebra(R"({"name": "x", "symbols": [], "generators": ["A", "B"],
      "brackets": [{"a": "A", "b": "B", "result": [{"gen": "A", "coeff": "eps"}]}]})"),
               ParseError);
}

TEST(AlgebraFile, MapsAndRenamings) {
  RescalingMap m = parse_rescaling(R"({"Px": 1, "M": 2, "H": 0})");
  EXPECT_EQ(m.at("M"), 2);
  EXPECT_THROW(parse_rescaling(R"({"Px": 1.5})"), ParseError);
  EXPECT_THROW(parse_rescaling("[1, 2]"), ParseError);
  Renaming r = parse_renaming(R"({"Hb": "H"})");
  EXPECT_EQ(r.at("Hb"), "H");
  EXPECT_THROW(parse_renaming(R"({"Hb": 3})"), ParseError);
}

TEST(AlgebraFile, LoadByNameOrPath) {
  EXPECT_EQ(load_algebra("u1").name(), "u1");
  std::string path = testing::TempDir() + "lieq_io_test.json";
  {
    std::ofstream f(path);
    f << export_algebra(catalog("heisenberg3"));
  }
  EXPECT_EQ(load_algebra(path).table(), catalog("heisenberg3").table());
  std::remove(path.c_str());
  EXPECT_THROW(load_algebra("no_such_algebra"), UnknownName);
}
