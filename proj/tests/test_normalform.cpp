#include <doctest.h>

#include "qhaar/normalform.hpp"
#include "qhaar/verify.hpp"
#include "test_util.hpp"

using namespace qhaar;
using qhaar::testutil::qp;

namespace {

Word W(const std::string& text) { return Word::parse(text); }

// Independent brute-force count of 3x3 matrices with all row and column
// sums equal to m: all nine entries enumerated with early pruning.
long count_doubly_stochastic(int m) {
  long count = 0;
  for (int a11 = 0; a11 <= m; ++a11)
    for (int a12 = 0; a11 + a12 <= m; ++a12) {
      int a13 = m - a11 - a12;
      for (int a21 = 0; a21 <= m; ++a21)
        for (int a22 = 0; a21 + a22 <= m; ++a22) {
          int a23 = m - a21 - a22;
          for (int a31 = 0; a31 <= m; ++a31)
            for (int a32 = 0; a31 + a32 <= m; ++a32) {
              int a33 = m - a31 - a32;
              if (a11 + a21 + a31 != m) continue;
              if (a12 + a22 + a32 != m) continue;
              if (a13 + a23 + a33 != m) continue;
              ++count;
            }
        }
    }
  return count;
}

}  // namespace

TEST_CASE("counting matrices") {
  CountingMatrix id = counting_matrix(W("aek"));
  CHECK(id.at(1, 1) == 1);
  CHECK(id.at(2, 2) == 1);
  CHECK(id.at(3, 3) == 1);
  CHECK(id.doubly_stochastic_order() == 1);

  CountingMatrix ones = counting_matrix(W("aekbfgcdh"));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(ones.at(i, j) == 1);
  CHECK(ones.doubly_stochastic_order() == 3);
  CHECK(counting_matrix(W("afhbdkceg")) == ones);
  CHECK(counting_matrix(W("bdkafhceg")) == ones);

  CountingMatrix ab = counting_matrix(W("ab"));
  CHECK(ab.at(1, 1) == 1);
  CHECK(ab.at(1, 2) == 1);
  CHECK_FALSE(ab.doubly_stochastic_order());

  CountingMatrix zero(3);
  CHECK_FALSE(zero.doubly_stochastic_order());

  CountingMatrix uneven(3);
  uneven.at(1, 1) = 1;
  uneven.at(1, 2) = 1;
  uneven.at(2, 2) = 1;
  uneven.at(3, 3) = 1;
  CHECK_FALSE(uneven.doubly_stochastic_order());
}

TEST_CASE("matrix order key realizes the total order") {
  CHECK(counting_matrix(W("aek")).order_key() == std::vector<int>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(counting_matrix(W("aekbfgcdh")).order_key() ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(counting_matrix(W("ceg")).order_key() < counting_matrix(W("aek")).order_key());
}

TEST_CASE("standard representatives") {
  CHECK(std_rep(counting_matrix(W("aek"))).c == std::array<int, 6>{1, 0, 0, 0, 0, 0});
  CHECK(std_rep(counting_matrix(W("aekbfgcdh"))).c == std::array<int, 6>{1, 0, 0, 1, 1, 0});
  CountingMatrix hollow(3);
  hollow.at(1, 2) = 1;
  hollow.at(1, 3) = 1;
  hollow.at(2, 1) = 1;
  hollow.at(2, 3) = 1;
  hollow.at(3, 1) = 1;
  hollow.at(3, 2) = 1;
  CHECK(std_rep(hollow).c == std::array<int, 6>{0, 0, 0, 1, 1, 0});
  CHECK_THROWS_AS(std_rep(counting_matrix(W("ab"))), std::domain_error);
}

TEST_CASE("standard words and keys") {
  CHECK(std_word(StdExponents{{1, 0, 0, 0, 0, 0}}) == W("aek"));
  CHECK(std_word(StdExponents{{0, 1, 0, 0, 0, 1}}) == W("afhceg"));
  CHECK(std_word(StdExponents{{2, 0, 0, 0, 0, 0}}) == W("aekaek"));
  StdExponents e{{1, 2, 0, 0, 3, 1}};
  CHECK(e.key() == "1.2.0.0.3.1");
  CHECK(StdExponents::parse_key("1.2.0.0.3.1") == e);
  CHECK_THROWS_AS(StdExponents::parse_key("1.2.3"), parse_error);
  CHECK_THROWS_AS(StdExponents::parse_key("1.2.3.4.5.x"), parse_error);
}

TEST_CASE("basis enumeration matches the brute-force matrix count") {
  const long expected[] = {1, 6, 21, 55, 120, 231, 406};
  for (int m = 0; m <= 6; ++m) {
    auto basis = enumerate_basis(m);
    CHECK(static_cast<long>(basis.size()) == expected[m]);
    if (m >= 1) CHECK(count_doubly_stochastic(m) == expected[m]);
    // One representative per matrix, all in the basis, sorted by matrix key.
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].in_basis());
      CHECK(basis[i].order() == m);
      if (i) CHECK(basis[i - 1].counting().order_key() < basis[i].counting().order_key());
    }
  }
}

TEST_CASE("reduce handles canonical and rejected inputs") {
  Reducer red;
  const Decomp& id = red.reduce(W("aek"));
  REQUIRE(id.size() == 1);
  CHECK(id.at(StdExponents{{1, 0, 0, 0, 0, 0}}) == QRational(1));
  CHECK_THROWS_AS(red.reduce(W("ab")), std::domain_error);
}

TEST_CASE("reduce reproduces the published segment identities") {
  HaarContext cx;
  auto report = verify::verify_appendix_identities(cx);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}

TEST_CASE("the quantum determinant is fixed by both flips") {
  Reducer red;
  NCPoly dq = quantum_determinant(3);
  Decomp reference = red.reduce(dq);
  NCPoly flipped_g(3), flipped_o(3);
  for (const auto& [w, c] : dq.terms()) {
    flipped_g.add_term(gamma(w), c);
    flipped_o.add_term(omega(w), c);
  }
  CHECK(red.reduce(flipped_g) == reference);
  CHECK(red.reduce(flipped_o) == reference);
}

TEST_CASE("reduce of cegafh") {
  Reducer red;
  const Decomp& d = red.reduce(W("cegafh"));
  REQUIRE(d.size() == 2);
  CHECK(d.at(StdExponents{{0, 1, 0, 0, 0, 1}}) == qp(2));
  CHECK(d.at(StdExponents{{0, 0, 0, 1, 1, 0}}) == 1 - qp(2));
}

TEST_CASE("reduction is linear over polynomials") {
  Reducer red;
  NCPoly p = NCPoly::monomial(W("cegafh"), qp(2)) + NCPoly::monomial(W("afhceg"), 1 - qp(2));
  Decomp d = red.reduce(p);
  Decomp expected;
  decomp_add_scaled(expected, red.reduce(W("cegafh")), qp(2));
  decomp_add_scaled(expected, red.reduce(W("afhceg")), 1 - qp(2));
  CHECK(d == expected);
}

TEST_CASE("confluence of the two strategies and invariant preservation") {
  Reducer ltr(Reducer::Strategy::LeftToRight);
  Reducer rtl(Reducer::Strategy::RightToLeft);
  ltr.set_check_invariants(true);
  rtl.set_check_invariants(true);
  for (const Word& w : verify::random_balanced_words(120, 3, 4242)) {
    const Decomp& a = ltr.reduce(w);
    const Decomp& b = rtl.reduce(w);
    INFO("word ", w.to_string());
    CHECK(a == b);
  }
}

TEST_CASE("every unbalanced length-6 word is rejected, balanced ones agree") {
  Reducer ltr(Reducer::Strategy::LeftToRight);
  Reducer rtl(Reducer::Strategy::RightToLeft);
  long unbalanced = 0, balanced = 0;
  std::vector<std::uint8_t> codes(6);
  for (long mask = 0; mask < 531441; ++mask) {  // 9^6 words
    long v = mask;
    Word w(3);
    for (int i = 0; i < 6; ++i) {
      w.push_code(static_cast<std::uint8_t>(v % 9));
      v /= 9;
    }
    auto order = counting_matrix(w).doubly_stochastic_order();
    if (order) {
      ++balanced;
      CHECK(ltr.reduce(w) == rtl.reduce(w));
    } else {
      ++unbalanced;
      if (mask % 97 == 0) CHECK_THROWS_AS(ltr.reduce(w), std::domain_error);
    }
  }
  CHECK(balanced + unbalanced == 531441);
  CHECK(balanced > 0);
}
