#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "finring/catalog.hpp"
#include "finring/io.hpp"

using namespace finring;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::VerificationFailed;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "finring_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Json, RoundTripsTheCatalog) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const FiniteRing r = e.ring();
    const FiniteRing back = ring_from_json(Json::parse(ring_to_json(r).dump()));
    EXPECT_EQ(back.orders(), r.orders());
    EXPECT_EQ(back.table(), r.table());
    EXPECT_EQ(back.one(), r.one());
    EXPECT_EQ(back.label(), r.label());
  }
}

TEST(Json, Layout) {
  const Json j = ring_to_json(zmod(2, 2));
  EXPECT_EQ(j.at("orders"), Json::parse("[4]"));
  EXPECT_EQ(j.at("one"), Json::parse("[1]"));
  EXPECT_EQ(j.at("mul"), Json::parse("[[[1]]]"));
  EXPECT_EQ(j.at("label"), "Z/4");
  const FiniteRing unlabelled = ring_from_json(Json::parse(R"({"orders":[3],"one":[1],"mul":[[[1]]]})"));
  EXPECT_EQ(unlabelled.order(), 3u);
}

TEST(Json, Errors) {
  EXPECT_EQ(code_of([] { ring_from_json(Json::parse("[1,2]")); }), Errc::IllFormedTable);
  EXPECT_EQ(code_of([] { ring_from_json(Json::parse(R"({"orders":[2],"one":[1]})")); }), Errc::IllFormedTable);
  EXPECT_EQ(code_of([] { ring_from_json(Json::parse(R"({"orders":"x","one":[1],"mul":[[[1]]]})")); }),
            Errc::IllFormedTable);
  // Valid JSON, but not commutative.
  EXPECT_EQ(code_of([] {
              ring_from_json(Json::parse(R"({"orders":[2,2],"one":[1,0],"mul":[[[1,0],[0,1]],[[0,0],[0,1]]]})"));
            }),
            Errc::NotCommutative);
}

TEST(Files, SaveAndLoad) {
  const auto path = scratch("sz.json").string();
  const FiniteRing r = parse_preset("square_zero(galois(2,1,2),2)");
  save_ring_file(path, r);
  const FiniteRing back = load_ring_file(path);
  EXPECT_EQ(back.table(), r.table());
  EXPECT_EQ(back.label(), r.label());

  const auto bad = scratch("bad.json").string();
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(code_of([&] { load_ring_file(bad); }), Errc::IllFormedTable);
  EXPECT_EQ(code_of([] { load_ring_file("/nonexistent/dir/ring.json"); }), Errc::IoError);
  EXPECT_EQ(code_of([&] { save_ring_file("/nonexistent/dir/ring.json", r); }), Errc::IoError);
}

TEST(Presets, Labels) {
  EXPECT_EQ(parse_preset("zmod(12)").label(), "Z/12");
  EXPECT_EQ(parse_preset("zmod(2,1)").label(), "F_2");
  EXPECT_EQ(parse_preset("zmod(3,2)").label(), "Z/9");
  EXPECT_EQ(parse_preset("field(2,3)").label(), "F_8");
  EXPECT_EQ(parse_preset("galois(3,2,2)").label(), "GR(9,2)");
  EXPECT_EQ(parse_preset("trunc_poly(zmod(2,1),3)").label(), "F_2[x]/(x^3)");
}

TEST(Presets, Orders) {
  EXPECT_EQ(parse_preset("  product( zmod(2,1) , galois(2,1,2) ) ").order(), 8u);
  EXPECT_EQ(parse_preset("square_zero(zmod(3,1),3)").order(), 81u);
  EXPECT_EQ(parse_preset("square_zero(zmod(2,2),1)").order(), 8u);
  EXPECT_EQ(parse_preset("trunc_poly(galois(2,2,2),2)").order(), 256u);
  EXPECT_EQ(parse_preset("product(zmod(5),zmod(7),zmod(2,1))").order(), 70u);
}

TEST(Presets, Errors) {
  for (const char* bad : {"", "zmod", "zmod()", "zmod(1)", "zmod(4,2)", "galois(2,1)", "frob(2)", "zmod(2,1) x",
                          "trunc_poly(3,2)", "product(zmod(2,1)", "square_zero(zmod(6),1)", "zmod(2,-1)"}) {
    EXPECT_EQ(code_of([&] { parse_preset(bad); }), Errc::BadParameters) << bad;
  }
  EXPECT_EQ(code_of([] { parse_preset("file(x.json)"); }), Errc::BadParameters);
}

TEST(Presets, FileLoader) {
  const auto path = scratch("z9.json").string();
  save_ring_file(path, zmod(3, 2));
  const RingFileLoader loader = [](const std::string& p) { return load_ring_file(p); };
  EXPECT_EQ(parse_preset("file(" + path + ")", loader).order(), 9u);
  EXPECT_EQ(parse_preset("trunc_poly(file(" + path + "),2)", loader).order(), 81u);
}
