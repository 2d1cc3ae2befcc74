#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "qhaar/table_io.hpp"
#include "test_util.hpp"

using namespace qhaar;
using qhaar::testutil::qp;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qhaar_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("value JSON round trip") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    QRational v = qhaar::testutil::random_rational(rng);
    CHECK(qrational_from_json(qrational_to_json(v)) == v);
  }
  CHECK(qrational_to_json(QRational(1)) == R"({"num":[1],"den":[1]})");
  CHECK(qrational_to_json(qp(-2)) == R"({"num":[1],"den":[0,0,1]})");
}

TEST_CASE("non-canonical or malformed values are rejected on read") {
  CHECK_THROWS_AS(qrational_from_json(R"({"num":[2],"den":[2]})"), inconsistency_error);
  CHECK_THROWS_AS(qrational_from_json(R"({"num":[0,1],"den":[0,1]})"), inconsistency_error);
  CHECK_THROWS_AS(qrational_from_json(R"({"num":[1]})"), inconsistency_error);
  CHECK_THROWS_AS(qrational_from_json("not json"), inconsistency_error);
  // big coefficients ride through as strings
  QRational big(IntPoly(mpz_class("123456789012345678901234567890")), IntPoly(1));
  CHECK(qrational_from_json(qrational_to_json(big)) == big);
}

TEST_CASE("table JSON round trip and file cache") {
  TempDir dir;
  HaarContext cx(HaarContext::Options{2, dir.path.string(), true});
  const HaarTable& t1 = cx.solve_order(1);
  CHECK(std::filesystem::exists(dir.path / "haar_order_1.json"));

  HaarTable parsed = table_from_json(table_to_json(t1));
  CHECK(parsed.order == 1);
  CHECK(parsed.values == t1.values);

  // A second context reads the cache instead of recomputing.
  HaarContext cx2(HaarContext::Options{2, dir.path.string(), true});
  CHECK(cx2.solve_order(1).values == t1.values);
}

TEST_CASE("corrupt caches are detected") {
  TempDir dir;
  {
    HaarContext cx(HaarContext::Options{1, dir.path.string(), true});
    cx.solve_order(1);
  }
  auto path = dir.path / "haar_order_1.json";

  SUBCASE("truncated file") {
    std::ofstream(path) << "{\"order\":1,\"values\":{}";
    HaarContext cx(HaarContext::Options{1, dir.path.string(), true});
    CHECK_THROWS_AS(cx.solve_order(1), inconsistency_error);
  }
  SUBCASE("missing entry") {
    std::ofstream(path) << R"({"order":1,"values":{},"format_version":1})";
    HaarContext cx(HaarContext::Options{1, dir.path.string(), true});
    CHECK_THROWS_AS(cx.solve_order(1), inconsistency_error);
  }
  SUBCASE("tampered values fail the normalization check") {
    std::string text;
    {
      std::ifstream in(path);
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    auto j = nlohmann::ordered_json::parse(text);
    std::swap(j["values"]["1.0.0.0.0.0"], j["values"]["0.0.0.0.0.1"]);
    std::ofstream(path) << j.dump(2);
    HaarContext cx(HaarContext::Options{1, dir.path.string(), true});
    CHECK_THROWS_AS(cx.solve_order(1), inconsistency_error);
  }
  SUBCASE("order mismatch with the file name") {
    std::filesystem::rename(path, dir.path / "haar_order_2.json");
    HaarContext cx(HaarContext::Options{2, dir.path.string(), true});
    CHECK_THROWS_AS(cx.solve_order(2), inconsistency_error);
  }
}

TEST_CASE("combination parser") {
  NCPoly p = parse_combination("aeekak - q*aefhak - q*aeekcg + q^2*aefhcg");
  CHECK(p.term_count() == 4);
  CHECK(p.coeff(Word::parse("aefhak")) == -qp(1));
  CHECK(p.coeff(Word::parse("aefhcg")) == qp(2));
  NCPoly single = parse_combination("3*q^-2*ab");
  CHECK(single.coeff(Word::parse("ab")) == 3 * qp(-2));
  NCPoly xform = parse_combination("x11x22 - q*x12x21");
  CHECK(xform.coeff(Word::parse("x12 x21")) == -qp(1));
  CHECK_THROWS_AS(parse_combination("a +"), parse_error);
  CHECK_THROWS_AS(parse_combination("a ? b"), parse_error);
}
