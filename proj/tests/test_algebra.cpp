#include <doctest.h>

#include "qhaar/algebra.hpp"
#include "qhaar/verify.hpp"
#include "test_util.hpp"

using namespace qhaar;
using qhaar::testutil::qp;

namespace {
Word W(const std::string& text) { return Word::parse(text); }
}  // namespace

TEST_CASE("monomial parsing") {
  CHECK(W("cegafh").to_string() == "cegafh");
  CHECK(Word::parse("x11 x22 x33").to_string() == "aek");
  CHECK(Word::parse(" x13x31 ").to_string() == "cg");
  CHECK_THROWS_AS(Word::parse("abi"), parse_error);
  CHECK_THROWS_AS(Word::parse("aj"), parse_error);
  CHECK_THROWS_AS(Word::parse("x14"), parse_error);
  CHECK_THROWS_AS(Word::parse("x41 x11"), parse_error);
  CHECK(Word::parse("x12 x21", 2).size() == 2);
  CHECK_THROWS_AS(Word::parse("ab", 2), parse_error);
}

TEST_CASE("relation_swap covers the four defining cases") {
  auto a = Generator{1, 1}, b = Generator{1, 2}, d = Generator{2, 1}, e = Generator{2, 2};
  // same row: a*b = q * b*a
  auto same_row = relation_swap(3, a, b);
  REQUIRE(same_row.size() == 1);
  CHECK(same_row[0].first == W("ba"));
  CHECK(same_row[0].second == qp(1));
  // antidiagonal: b*d = d*b
  auto commute = relation_swap(3, b, d);
  REQUIRE(commute.size() == 1);
  CHECK(commute[0].first == W("db"));
  CHECK(commute[0].second == QRational(1));
  // diagonal: a*e = e*a + (q - 1/q) b*d
  auto cross = relation_swap(3, a, e);
  REQUIRE(cross.size() == 2);
  CHECK(cross[0].first == W("ea"));
  CHECK(cross[0].second == QRational(1));
  CHECK(cross[1].first == W("bd"));
  CHECK(cross[1].second == qp(1) - qp(-1));
  // inverse directions carry q^{-1} and -(q - 1/q)
  auto col_down = relation_swap(3, d, a);
  CHECK(col_down[0].second == qp(-1));
  auto cross_down = relation_swap(3, e, a);
  REQUIRE(cross_down.size() == 2);
  CHECK(cross_down[1].first == W("bd"));
  CHECK(cross_down[1].second == -(qp(1) - qp(-1)));
}

TEST_CASE("relation_swap round trip restores the pair") {
  // Normal order a two-letter polynomial by putting the smaller code first;
  // a single pass suffices because every error pair comes out ordered.
  auto normal_order = [](const NCPoly& p) {
    NCPoly out(3);
    for (const auto& [w, c] : p.terms()) {
      if (w.code(0) <= w.code(1)) {
        out.add_term(w, c);
      } else {
        for (const auto& [sw, sc] : relation_swap(3, w.letter(0), w.letter(1)))
          out.add_term(sw, sc * c);
      }
    }
    return out;
  };
  for (int c1 = 0; c1 < 9; ++c1)
    for (int c2 = 0; c2 < 9; ++c2) {
      Word w(3);
      w.push_code(static_cast<std::uint8_t>(c1));
      w.push_code(static_cast<std::uint8_t>(c2));
      NCPoly original = NCPoly::monomial(w);
      NCPoly swapped(3);
      for (const auto& [sw, coeff] : relation_swap(3, w.letter(0), w.letter(1)))
        swapped.add_term(sw, coeff);
      NCPoly back(3);
      for (const auto& [sw, coeff] : swapped.terms())
        for (const auto& [bw, bc] : relation_swap(3, sw.letter(0), sw.letter(1)))
          back.add_term(bw, bc * coeff);
      CHECK(normal_order(back) == normal_order(original));
    }
}

TEST_CASE("free multiplication is bilinear concatenation") {
  NCPoly p = NCPoly::monomial(W("a")) - NCPoly::monomial(W("b"), qp(1));
  NCPoly r = NCPoly::monomial(W("c"));
  NCPoly prod = multiply(p, r);
  CHECK(prod.coeff(W("ac")) == QRational(1));
  CHECK(prod.coeff(W("bc")) == -qp(1));
  CHECK(multiply(NCPoly(3), r).is_zero());
  CHECK(multiply(NCPoly::monomial(W("a")), NCPoly::monomial(W("e"))).coeff(W("ae")) ==
        QRational(1));
}

TEST_CASE("quantum determinant") {
  NCPoly d1 = quantum_determinant(1);
  CHECK(d1.term_count() == 1);
  CHECK(d1.coeff(Word::parse("x11", 1)) == QRational(1));

  NCPoly d2 = quantum_determinant(2);
  CHECK(d2.term_count() == 2);
  CHECK(d2.coeff(Word::parse("x11 x22", 2)) == QRational(1));
  CHECK(d2.coeff(Word::parse("x12 x21", 2)) == -qp(1));

  NCPoly d3 = quantum_determinant(3);
  CHECK(d3.term_count() == 6);
  CHECK(d3.coeff(W("aek")) == QRational(1));
  CHECK(d3.coeff(W("afh")) == -qp(1));
  CHECK(d3.coeff(W("bdk")) == -qp(1));
  CHECK(d3.coeff(W("bfg")) == qp(2));
  CHECK(d3.coeff(W("cdh")) == qp(2));
  CHECK(d3.coeff(W("ceg")) == -qp(3));
}

TEST_CASE("comultiplication expansion") {
  TensorPoly da = comultiply(W("a"));
  CHECK(da.term_count() == 3);
  CHECK(da.coeff(W("a"), W("a")) == QRational(1));
  CHECK(da.coeff(W("b"), W("d")) == QRational(1));
  CHECK(da.coeff(W("c"), W("g")) == QRational(1));

  TensorPoly dae = comultiply(W("ae"));
  CHECK(dae.term_count() == 9);
  CHECK(dae.coeff(W("bd"), W("db")) == QRational(1));
  for (const auto& [pair, coeff] : dae.terms()) {
    CHECK(coeff == QRational(1));
    CHECK(satisfies_order_restriction(pair.first, pair.second));
  }

  // Pruning cuts the expansion to the diagonal choices.
  TensorPoly pruned = comultiply(W("ae"), [](const Word& left) {
    Generator g = left.letter(left.size() - 1);
    return g.row == g.col;
  });
  CHECK(pruned.term_count() == 1);
}

TEST_CASE("comultiplication is an algebra homomorphism on samples") {
  auto words = verify::random_balanced_words(12, 2, 99);
  for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
    Word u(3), v(3);
    for (std::size_t p = 0; p < std::min<std::size_t>(3, words[i].size()); ++p)
      u.push_code(words[i].code(p));
    for (std::size_t p = 0; p < std::min<std::size_t>(3, words[i + 1].size()); ++p)
      v.push_code(words[i + 1].code(p));
    CHECK(comultiply(u + v) == comultiply(u) * comultiply(v));
  }
}

TEST_CASE("modular automorphism scalar") {
  CHECK(eta(W("aek")).first == QRational(1));
  CHECK(eta(W("a")).first == qp(-4));
  CHECK(eta(W("ceg")).first == QRational(1));
  CHECK(eta(W("k")).first == qp(4));
  CHECK(eta(W("aek")).second == W("aek"));
}

TEST_CASE("diagonal and double flips") {
  CHECK(gamma(W("afh")) == W("ahf"));
  CHECK(gamma(W("aek")) == W("aek"));
  CHECK(omega(W("cdh")) == W("bfg"));
  CHECK(omega(W("ceg")) == W("ceg"));
  std::mt19937 rng(5);
  for (const Word& w : verify::random_balanced_words(25, 3, 31)) {
    CHECK(gamma(gamma(w)) == w);
    CHECK(omega(omega(w)) == w);
  }
}

TEST_CASE("flips are compatible with comultiplication") {
  auto tau = [](const TensorPoly& t) {
    TensorPoly r(t.n());
    for (const auto& [pair, c] : t.terms()) r.add_term(pair.second, pair.first, c);
    return r;
  };
  auto map_tensor = [](const TensorPoly& t, Word (*f)(const Word&)) {
    TensorPoly r(t.n());
    for (const auto& [pair, c] : t.terms()) r.add_term(f(pair.first), f(pair.second), c);
    return r;
  };
  std::vector<Word> samples = {W("a"), W("e"), W("k"), W("bd"), W("ah"), W("fg")};
  for (const Word& w : samples) {
    CHECK(comultiply(gamma(w)) == tau(map_tensor(comultiply(w), gamma)));
    CHECK(comultiply(omega(w)) == map_tensor(comultiply(w), omega));
  }
}

TEST_CASE("quantum minors match the starred expansions") {
  NCPoly m11 = quantum_minor(1, 1);
  CHECK(m11.coeff(W("ek")) == QRational(1));
  CHECK(m11.coeff(W("fh")) == -qp(1));
  NCPoly m22 = quantum_minor(2, 2);
  CHECK(m22.coeff(W("ak")) == QRational(1));
  CHECK(m22.coeff(W("cg")) == -qp(1));
  NCPoly m31 = quantum_minor(3, 1);
  CHECK(m31.coeff(W("bf")) == QRational(1));
  CHECK(m31.coeff(W("ce")) == -qp(1));
  NCPoly m12 = quantum_minor(1, 2);
  CHECK(m12.coeff(W("dk")) == QRational(1));
  CHECK(m12.coeff(W("fg")) == -qp(1));
}
