#include <doctest.h>

#include "qhaar/haar.hpp"
#include "qhaar/verify.hpp"
#include "test_util.hpp"

using namespace qhaar;
using qhaar::testutil::qp;

namespace {

Word W(const std::string& text) { return Word::parse(text); }

HaarContext& shared_context() {
  static HaarContext cx(HaarContext::Options{4, "", false});
  return cx;
}

StdExponents E(std::array<int, 6> a) { return StdExponents{a}; }

}  // namespace

TEST_CASE("order-1 closed form") {
  QRational base = (1 - qp(2)).pow(2) / ((1 - qp(4)) * (1 - qp(6)));
  CHECK(haar_order1({1, 2, 3}) == base);
  CHECK(haar_order1({1, 3, 2}) == -qp(1) * base);
  CHECK(haar_order1({3, 2, 1}) == -qp(3) * base);
  CHECK(haar_order1({1, 2}) == QRational(1) / (1 + qp(2)));
  CHECK(haar_order1({1}) == QRational(1));
  CHECK_THROWS_AS(haar_order1({1, 1}), std::domain_error);
}

TEST_CASE("quantum determinant power decompositions") {
  HaarContext& cx = shared_context();
  const Decomp& d1 = cx.dq_power_decomposition(1);
  REQUIRE(d1.size() == 6);
  CHECK(d1.at(E({1, 0, 0, 0, 0, 0})) == QRational(1));
  CHECK(d1.at(E({0, 1, 0, 0, 0, 0})) == -qp(1));
  CHECK(d1.at(E({0, 0, 1, 0, 0, 0})) == -qp(1));
  CHECK(d1.at(E({0, 0, 0, 1, 0, 0})) == qp(2));
  CHECK(d1.at(E({0, 0, 0, 0, 1, 0})) == qp(2));
  CHECK(d1.at(E({0, 0, 0, 0, 0, 1})) == -qp(3));

  // coefficient of (aek)^{m-1}afh in D_q^m is -mq; of (aek)^{m-1}bfg at m=2
  // it is 3q^2 - 1.
  const Decomp& d2 = cx.dq_power_decomposition(2);
  CHECK(d2.at(E({1, 1, 0, 0, 0, 0})) == -2 * qp(1));
  CHECK(d2.at(E({1, 0, 0, 1, 0, 0})) == 3 * qp(2) - 1);
  const Decomp& d3 = cx.dq_power_decomposition(3);
  CHECK(d3.at(E({2, 1, 0, 0, 0, 0})) == -3 * qp(1));
  CHECK(d3.at(E({3, 0, 0, 0, 0, 0})) == QRational(1));
}

TEST_CASE("quantum determinant lift at order 1 is the normalization") {
  HaarContext& cx = shared_context();
  LinearRelation rel = cx.dq_lift_relation(StdExponents{});
  CHECK(rel.rhs_coeff == QRational(1));
  CHECK(rel.coefficients == cx.dq_power_decomposition(1));
  QRational acc(0);
  for (const auto& [e, c] : rel.coefficients) acc += c * cx.solve_order(1).values.at(e);
  CHECK(acc.is_one());
}

TEST_CASE("quantum determinant lifts are satisfied by the solved tables") {
  HaarContext& cx = shared_context();
  // Lift of bfg relates the order-2 unknowns to h(bfg).
  LinearRelation rel = cx.dq_lift_relation(StdExponents{{0, 0, 0, 1, 0, 0}});
  QRational acc(0);
  for (const auto& [e, c] : rel.coefficients) acc += c * cx.solve_order(2).values.at(e);
  CHECK(acc == cx.solve_order(1).values.at(StdExponents{{0, 0, 0, 1, 0, 0}}));
}

TEST_CASE("general-n structural layer") {
  // Order-1 formula at n = 4, reversal permutation: l = 6 inversions.
  QRational fact(1);
  for (int j = 2; j <= 4; ++j)
    fact *= (1 - qp(2 * j)) / (1 - qp(2));
  CHECK(haar_order1({4, 3, 2, 1}) == qp(6) / fact);
  // Defining relations and the determinant exist for every n.
  CHECK(quantum_determinant(4).term_count() == 24);
  Word w = Word::parse("x11 x22 x33 x44", 4);
  CHECK(counting_matrix(w).doubly_stochastic_order() == 1);
  CHECK(omega(w) == w);  // reversal and index complement cancel on the diagonal
  CHECK(omega(Word::parse("x12", 4)) == Word::parse("x43", 4));
  auto swapped = relation_swap(4, Generator{1, 1}, Generator{4, 4});
  REQUIRE(swapped.size() == 2);
  CHECK(swapped[1].first == Word::parse("x14 x41", 4));
}

TEST_CASE("the staged value of the non-basis triple matches the word route") {
  HaarContext& cx = shared_context();
  StdExponents triple{{0, 1, 1, 0, 0, 1}};
  CHECK(cx.standard_monomial_value(triple) == cx.haar(std_word(triple)));
}

TEST_CASE("source-matrix entries regenerate from the comultiplication") {
  HaarContext& cx = shared_context();
  for (int m : {2, 3}) {
    const QRational q2m = qp(2 * m);
    const QRational den = qp(2 * m) * (qp(2) - 1).pow(2);
    const StdExponents ceg_m = E({0, 0, 0, 0, 0, m});

    // row (aek)^{m-1}ceg, column aek(ceg)^{m-1}
    LinearRelation r1 = cx.derive_linear_relation(ceg_m, E({m - 1, 0, 0, 0, 0, 1}));
    CHECK(r1.coefficients.at(E({1, 0, 0, 0, 0, m - 1})) == qp(2) * (q2m - 1).pow(2) / den);
    // same row, column afh(ceg)^{m-1}
    CHECK(r1.coefficients.at(E({0, 1, 0, 0, 0, m - 1})) ==
          -qp(1) * (q2m - 1).pow(2) / (qp(2 * m) * (qp(2) - 1)));
    // same row, column bdk(ceg)^{m-1}: q^3 (1-q^{2m})^3 / (q^{4m} (q^2-1)^2)
    CHECK(r1.coefficients.at(E({0, 0, 1, 0, 0, m - 1})) ==
          qp(3) * (1 - q2m).pow(3) / (qp(4 * m) * (qp(2) - 1).pow(2)));
    // same row, column cdh(ceg)^{m-1}: m (q^{2m}-1)^2 / q^{2m}
    CHECK(r1.coefficients.at(E({0, 0, 0, 0, 1, m - 1})) == m * (q2m - 1).pow(2) / q2m);

    // row (aek)^{m-1}afh: coefficient of cdh(ceg)^{m-1} is
    // q^2(q^m - q^{-m})^2/(1-q^2)^2, and the relation has b_j = -mq.
    LinearRelation r2 = cx.derive_linear_relation(ceg_m, E({m - 1, 1, 0, 0, 0, 0}));
    CHECK(r2.coefficients.at(E({0, 0, 0, 0, 1, m - 1})) ==
          qp(2) * (qp(m) - qp(-m)).pow(2) / (1 - qp(2)).pow(2));
    CHECK(r2.rhs_coeff == -m * qp(1));
    // tabulated cegceg entry: c_{(ceg)^m,j} - b_j = q(q^{2m}-1)/(q^{2m}(q^2-1))
    CHECK(r2.coefficients.at(ceg_m) - r2.rhs_coeff == qp(1) * (q2m - 1) / (q2m * (qp(2) - 1)));

    // row (aek)^{m-1}bdk: coefficient of bfg(ceg)^{m-1} and the cegceg entry.
    LinearRelation r3 = cx.derive_linear_relation(ceg_m, E({m - 1, 0, 1, 0, 0, 0}));
    CHECK(r3.coefficients.at(E({0, 0, 0, 1, 0, m - 1})) == qp(2) * (q2m - 1).pow(2) / den);
    CHECK(r3.coefficients.at(ceg_m) - r3.rhs_coeff == qp(1) * (q2m - 1) / (q2m * (qp(2) - 1)));

    // row (aek)^{m-1}bfg: coefficient of afh(ceg)^{m-1} is
    // q^2(q^{2m}-1)^3/(q^{2m}(q^2-1)^3).
    LinearRelation r4 = cx.derive_linear_relation(ceg_m, E({m - 1, 0, 0, 1, 0, 0}));
    CHECK(r4.coefficients.at(E({0, 1, 0, 0, 0, m - 1})) ==
          qp(2) * (q2m - 1).pow(3) / (q2m * (qp(2) - 1).pow(3)));
    // and the bfgcdh(ceg)^{m-2} column of that row vanishes.
    auto it = r4.coefficients.find(E({0, 0, 0, 1, 1, m - 2}));
    CHECK((it == r4.coefficients.end() || it->second.is_zero()));
  }
}

TEST_CASE("the one-unknown relation of the afh family") {
  // equation (afh)^{w-1}(cdh)^{r+1}(bfg)^{m-r-w}, comparing (aek)^{m-1}bdk:
  // the target coefficient is q^2(q^{-r-1} - q^{r+1})^2/(1-q^2)^2.
  HaarContext& cx = shared_context();
  struct Case {
    int m, w, r;
  };
  for (auto [m, w, r] : {Case{2, 1, 0}, Case{2, 1, 1}, Case{3, 2, 1}, Case{3, 1, 1}}) {
    const int s = m - r - w;
    LinearRelation rel =
        cx.derive_linear_relation(E({0, w - 1, 0, s, r + 1, 0}), E({m - 1, 0, 1, 0, 0, 0}));
    INFO("m=", m, " w=", w, " r=", r);
    CHECK(rel.coefficients.at(E({0, w, 0, s, r, 0})) ==
          qp(2) * (qp(-r - 1) - qp(r + 1)).pow(2) / (1 - qp(2)).pow(2));
  }
}

TEST_CASE("solved tables match the published ones") {
  HaarContext& cx = shared_context();
  for (int m : {1, 2}) {
    const HaarTable& table = cx.solve_order(m);
    CHECK(table.values.size() == enumerate_basis(m).size());
    for (const auto& [e, expected] : verify::golden_table(m)) {
      INFO("entry ", e.key());
      CHECK(table.values.at(e) == expected);
    }
  }
}

TEST_CASE("defining property: all derived relations hold on solved tables") {
  HaarContext& cx = shared_context();
  for (int m : {1, 2}) {
    const HaarTable& table = cx.solve_order(m);
    const auto basis = enumerate_basis(m);
    for (const auto& eq : basis) {
      for (const auto& cmp : basis) {
        LinearRelation rel = cx.derive_linear_relation(eq, cmp);
        QRational lhs(0);
        for (const auto& [e, c] : rel.coefficients) lhs += c * table.values.at(e);
        INFO("eq ", eq.key(), " cmp ", cmp.key());
        CHECK(lhs == rel.rhs_coeff * table.values.at(eq));
      }
    }
  }
}

TEST_CASE("closed forms agree with the solver") {
  HaarContext& cx = shared_context();
  for (int m : {1, 2}) {
    const HaarTable& table = cx.solve_order(m);
    for (const auto& [e, v] : cx.source_matrix_solution(m)) {
      INFO("source entry ", e.key(), " at m=", m);
      CHECK(table.values.at(e) == v);
    }
    auto family = cx.rec_cdh_ceg(m);
    for (int i = 0; i <= m; ++i) {
      CHECK(table.values.at(E({0, 0, 0, 0, i, m - i})) == family[i]);
      CHECK(table.values.at(E({0, 0, 0, i, 0, m - i})) == family[i]);
    }
    for (const auto& [rs, v] : cx.rec_cdh_bfg_ceg(m))
      CHECK(table.values.at(E({0, 0, 0, rs.second, rs.first, m - rs.first - rs.second})) == v);
  }
}

TEST_CASE("staged algorithm equals the solver at small orders") {
  HaarContext& cx = shared_context();
  for (int m : {1, 2}) {
    const HaarTable& staged = cx.full_algorithm(m);
    const HaarTable& solved = cx.solve_order(m);
    REQUIRE(staged.values.size() == solved.values.size());
    for (const auto& [e, v] : solved.values) {
      INFO("entry ", e.key(), " at m=", m);
      CHECK(staged.values.at(e) == v);
    }
  }
}

TEST_CASE("symmetry orbits") {
  auto orbit1 = symmetry_orbit(E({0, 1, 2, 0, 0, 3}));
  CHECK(orbit1.count(E({0, 2, 1, 0, 0, 3})));
  auto orbit2 = symmetry_orbit(E({1, 1, 1, 2, 1, 0}));
  CHECK(orbit2.count(E({1, 1, 1, 1, 2, 0})));
  CHECK_FALSE(orbit2.count(E({1, 1, 1, 0, 1, 2})));
  auto orbit3 = symmetry_orbit(E({2, 3, 1, 0, 0, 0}));
  CHECK(orbit3.count(E({2, 1, 3, 0, 0, 0})));
}

TEST_CASE("haar evaluation on words") {
  HaarContext& cx = shared_context();
  CHECK(cx.haar(W("ab")).is_zero());
  CHECK(cx.haar(W("aek")) == haar_order1({1, 2, 3}));
  CHECK(cx.haar(Word::parse("x11 x22 x33")) == haar_order1({1, 2, 3}));
  // h(cegafh) = q^4 / ((q^2+1)^2 (q^4+1) (q^2-q+1)^2 (q^2+q+1)^2)
  QRational expected = qp(4) / ((qp(2) + 1).pow(2) * (qp(4) + 1) * (qp(2) - qp(1) + 1).pow(2) *
                                (qp(2) + qp(1) + 1).pow(2));
  CHECK(cx.haar(W("cegafh")) == expected);
  CHECK(cx.haar(W("afhceg")) == cx.haar(W("bfgcdh")));
}

TEST_CASE("every unbalanced length-6 word has Haar state zero") {
  HaarContext& cx = shared_context();
  long zeros = 0, nonzero_allowed = 0;
  for (long mask = 0; mask < 531441; ++mask) {  // 9^6 words
    long v = mask;
    Word w(3);
    for (int i = 0; i < 6; ++i) {
      w.push_code(static_cast<std::uint8_t>(v % 9));
      v /= 9;
    }
    if (counting_matrix(w).doubly_stochastic_order()) {
      ++nonzero_allowed;
      continue;
    }
    if (!cx.haar(w).is_zero()) {
      FAIL("nonzero Haar state for unbalanced word ", w.to_string());
    }
    ++zeros;
  }
  CHECK(zeros + nonzero_allowed == 531441);
  CHECK(zeros > nonzero_allowed);
}

TEST_CASE("haar respects the order limit") {
  HaarContext bounded(HaarContext::Options{1, "", false});
  CHECK_THROWS_AS(bounded.haar(W("aekaek")), std::domain_error);
  CHECK(bounded.haar(W("aek")) == haar_order1({1, 2, 3}));
  CHECK(bounded.haar(W("ab")).is_zero());
}

TEST_CASE("weingarten limits of the three examples") {
  HaarContext& cx = shared_context();
  auto report = verify::verify_weingarten(cx);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}

TEST_CASE("modular property and flip invariance on random words") {
  HaarContext& cx = shared_context();
  auto report = verify::verify_symmetry(cx, 40, 777);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}
