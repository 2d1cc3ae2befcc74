#include "qhaar/verify.hpp"

#include <random>
#include <sstream>

namespace qhaar::verify {

namespace {

QRational qp(int k) { return QRational::q_pow(k); }
QRational Z(long v) { return QRational(v); }

using Entry = std::pair<StdExponents, QRational>;
using Table = std::vector<Entry>;

void put(Table& t, std::initializer_list<std::array<int, 6>> exps, const QRational& v) {
  for (const auto& a : exps) t.push_back({StdExponents{a}, v});
}

Table make_order1() {
  Table t;
  const QRational base = (1 - qp(2)).pow(2) / ((1 - qp(4)) * (1 - qp(6)));
  put(t, {{1, 0, 0, 0, 0, 0}}, base);
  put(t, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}, -qp(1) * base);
  put(t, {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}}, qp(2) * base);
  put(t, {{0, 0, 0, 0, 0, 1}}, -qp(3) * base);
  return t;
}

Table make_order2() {
  Table t;
  const QRational p1 = (qp(2) + 1).pow(2);
  const QRational p2 = qp(4) + 1;
  const QRational p3 = (qp(2) - qp(1) + 1).pow(2) * (qp(2) + qp(1) + 1).pow(2);
  const QRational D = p1 * p2 * p3;     // (q^2+1)^2 (q^4+1) (q^4+q^2+1)^2-ish split
  const QRational Dn4 = p1 * p3;        // no (q^4+1) factor
  const QRational Ds = (qp(2) + 1) * p3;
  put(t, {{2, 0, 0, 0, 0, 0}}, (2 * qp(8) + qp(4) + 1) / D);
  put(t, {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}}, -qp(1) * (qp(8) - qp(6) + qp(4) + 1) / D);
  put(t, {{1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 0}}, -qp(2) * (qp(6) - qp(4) - 1) / D);
  put(t, {{1, 0, 0, 0, 0, 1}}, -qp(3) / Dn4);
  put(t, {{0, 2, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0}}, qp(2) * (qp(4) + 1) / Dn4);
  put(t, {{0, 1, 1, 0, 0, 0}}, -qp(2) * (qp(6) - qp(4) - 1) / D);
  put(t, {{0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}}, -qp(3) / Dn4);
  put(t, {{0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}, -qp(3) / Dn4);
  put(t, {{0, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1}}, qp(4) / D);
  put(t, {{0, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 2, 0}}, qp(4) / Ds);
  put(t, {{0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}, -qp(5) / ((qp(2) + 1) * p2 * p3));
  put(t, {{0, 0, 0, 0, 0, 2}}, qp(6) / (p2 * p3));
  return t;
}

Table make_order3() {
  Table t;
  const QRational c1 = qp(2) + 1;
  const QRational c2 = (qp(4) + 1).pow(2);
  const QRational c3 = (qp(2) - qp(1) + 1) * (qp(2) + qp(1) + 1);
  const QRational c10 = 1 - qp(10);
  const QRational E = c1.pow(2) * c2 * c3.pow(2) * c10;
  const QRational E1 = c1 * c2 * c3.pow(2) * c10;
  const QRational E2 = c1 * c2 * c3 * c10;
  const QRational E3 = c1 * c2 * c10;
  const QRational u = 1 - qp(2);

  put(t, {{3, 0, 0, 0, 0, 0}},
      (qp(20) + 6 * qp(16) - 6 * qp(14) + 13 * qp(12) - 6 * qp(10) + 9 * qp(8) - 2 * qp(6) +
       3 * qp(4) - qp(2) + 1) *
          u / E);
  put(t, {{2, 1, 0, 0, 0, 0}, {2, 0, 1, 0, 0, 0}},
      -qp(1) *
          (qp(18) - 2 * qp(14) + 7 * qp(12) - 7 * qp(10) + 8 * qp(8) - 4 * qp(6) + 3 * qp(4) -
           qp(2) + 1) *
          u / E);
  put(t, {{2, 0, 0, 1, 0, 0}, {2, 0, 0, 0, 1, 0}},
      -qp(2) *
          (qp(16) - qp(14) - qp(12) + 3 * qp(10) - 5 * qp(8) + 4 * qp(6) - 3 * qp(4) + qp(2) - 1) *
          u / E);
  put(t, {{2, 0, 0, 0, 0, 1}},
      -qp(3) * (qp(14) + qp(10) + 3 * qp(8) - 2 * qp(6) + 3 * qp(4) - qp(2) + 1) * u / E);
  put(t, {{1, 2, 0, 0, 0, 0}, {1, 0, 2, 0, 0, 0}},
      qp(2) *
          (qp(18) - 2 * qp(16) + 2 * qp(14) + qp(12) - 3 * qp(10) + 7 * qp(8) - 4 * qp(6) +
           4 * qp(4) - qp(2) + 1) *
          u / E);
  put(t, {{1, 1, 1, 0, 0, 0}},
      -qp(2) *
          (qp(16) - qp(14) - 2 * qp(12) + 4 * qp(10) - 6 * qp(8) + 5 * qp(6) - 3 * qp(4) + qp(2) -
           1) *
          u / E);
  put(t, {{1, 1, 0, 1, 0, 0}, {1, 1, 0, 0, 1, 0}},
      -qp(3) * (qp(14) - qp(12) + 2 * qp(8) - 3 * qp(6) + 3 * qp(4) - qp(2) + 1) * u / E);
  put(t, {{1, 1, 0, 0, 0, 1}}, qp(4) * (qp(10) - qp(6) + 2 * qp(4) - qp(2) + 1) * u / E);
  put(t, {{1, 0, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0}},
      qp(3) *
          (qp(16) - 2 * qp(14) + 2 * qp(12) - qp(10) - 2 * qp(8) + 3 * qp(6) - 3 * qp(4) + qp(2) -
           1) *
          u / E);
  put(t, {{1, 0, 1, 0, 0, 1}},
      qp(4) * (qp(12) - 2 * qp(10) + 4 * qp(8) - 5 * qp(6) + 4 * qp(4) - 2 * qp(2) + 1) * u / E1);
  put(t, {{1, 0, 0, 2, 0, 0}, {1, 0, 0, 0, 2, 0}},
      -qp(4) * (qp(10) - 2 * qp(8) + 3 * qp(6) - 3 * qp(4) + qp(2) - 1) * u / E1);
  put(t, {{1, 0, 0, 1, 1, 0}}, qp(4) * u.pow(2) * (qp(10) + qp(6) + 2 * qp(4) + 1) / E);
  put(t, {{1, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 1, 1}},
      qp(5) * (qp(3) - qp(1) - 1) * (qp(3) - qp(1) + 1) * u / E1);
  put(t, {{1, 0, 0, 0, 0, 2}}, qp(6) * (qp(6) + qp(4) + 1) * u / E1);
  put(t, {{0, 3, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}},
      -qp(3) * (qp(8) - qp(6) + 3 * qp(4) - qp(2) + 1).pow(2) * u / E1);
  put(t, {{0, 2, 1, 0, 0, 0}, {0, 1, 2, 0, 0, 0}},
      qp(3) * (qp(16) - 2 * qp(14) + 2 * qp(12) - 3 * qp(8) + 4 * qp(6) - 4 * qp(4) + qp(2) - 1) *
          u / E);
  put(t, {{0, 2, 0, 1, 0, 0}, {0, 0, 2, 0, 1, 0}, {0, 2, 0, 0, 1, 0}, {0, 0, 2, 1, 0, 0}},
      qp(4) * (qp(4) - qp(2) + 1) * (qp(8) - qp(6) + 3 * qp(4) - qp(2) + 1) * u / E1);
  put(t, {{0, 2, 0, 0, 0, 1}, {0, 0, 2, 0, 0, 1}}, -qp(5) * (qp(4) - qp(2) + 1).pow(2) * u / E1);
  put(t, {{0, 1, 1, 1, 0, 0}, {0, 1, 1, 0, 1, 0}},
      qp(4) * (qp(12) - 3 * qp(10) + 5 * qp(8) - 6 * qp(6) + 5 * qp(4) - 2 * qp(2) + 1) * u / E1);
  put(t, {{0, 1, 1, 0, 0, 1}}, -qp(5) * u.pow(2) * (qp(10) + 2 * qp(6) + qp(4) + 1) / E);
  put(t, {{0, 1, 0, 2, 0, 0}, {0, 0, 1, 0, 2, 0}, {0, 1, 0, 0, 2, 0}, {0, 0, 1, 2, 0, 0}},
      -qp(5) * (qp(8) - qp(6) + 3 * qp(4) - qp(2) + 1) * u / E1);
  put(t, {{0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}}, qp(6) * (qp(4) - qp(2) + 1) * u / E1);
  put(t, {{0, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 1}}, qp(6) * (qp(4) - qp(2) + 1) * u / E1);
  put(t, {{0, 1, 0, 0, 0, 2}, {0, 0, 1, 0, 0, 2}, {0, 0, 0, 1, 1, 1}}, -qp(7) * u / E1);
  put(t, {{0, 0, 0, 3, 0, 0}, {0, 0, 0, 0, 3, 0}},
      qp(6) * (qp(8) - qp(6) + 3 * qp(4) - qp(2) + 1) * u / E2);
  put(t, {{0, 0, 0, 2, 1, 0}, {0, 0, 0, 1, 2, 0}}, qp(6) * (qp(4) - qp(2) + 1) * u / E1);
  put(t, {{0, 0, 0, 2, 0, 1}, {0, 0, 0, 0, 2, 1}}, -qp(7) * (qp(4) - qp(2) + 1) * u / E2);
  put(t, {{0, 0, 0, 1, 0, 2}, {0, 0, 0, 0, 1, 2}}, qp(8) * u / E2);
  put(t, {{0, 0, 0, 0, 0, 3}}, -qp(9) * u / E3);
  return t;
}

Decomp D(std::initializer_list<std::pair<std::array<int, 6>, QRational>> items) {
  Decomp d;
  for (const auto& [a, v] : items) d.emplace(StdExponents{a}, v);
  return d;
}

std::vector<SegmentIdentity> make_identities() {
  std::vector<SegmentIdentity> out;
  const QRational qm = qp(1) - qp(-1);        // q - 1/q
  const QRational s2 = (qp(2) - 1).pow(2);    // (q^2-1)^2

  out.push_back(
      {"ceg swaps",
       {{"cegaek", D({{{1, 0, 0, 0, 0, 1}, Z(1)},
                      {{0, 1, 0, 0, 0, 1}, qp(3) - qp(1)},
                      {{0, 0, 1, 0, 0, 1}, -qm},
                      {{0, 0, 0, 1, 1, 0}, -s2 / qp(1)}})},
        {"cegafh", D({{{0, 1, 0, 0, 0, 1}, qp(2)}, {{0, 0, 0, 1, 1, 0}, 1 - qp(2)}})},
        {"cegbdk", D({{{0, 0, 1, 0, 0, 1}, qp(-2)}, {{0, 0, 0, 1, 1, 0}, 1 - qp(-2)}})}}});
  out.push_back(
      {"cdh swaps",
       {{"cdhaek", D({{{1, 0, 0, 0, 1, 0}, Z(1)},
                      {{0, 1, 0, 0, 0, 1}, qp(4) - qp(2)},
                      {{0, 0, 1, 0, 0, 1}, 1 - qp(2)},
                      {{0, 0, 0, 1, 1, 0}, -s2}})},
        {"cdhafh", D({{{0, 1, 0, 0, 1, 0}, Z(1)},
                      {{0, 1, 0, 0, 0, 1}, qp(3) - qp(1)},
                      {{0, 0, 0, 1, 1, 0}, -(qp(3) - qp(1))}})},
        {"cdhbdk", D({{{0, 0, 1, 0, 1, 0}, Z(1)},
                      {{0, 0, 1, 0, 0, 1}, -qm},
                      {{0, 0, 0, 1, 1, 0}, qm}})}}});
  out.push_back(
      {"bfg swaps",
       {{"bfgaek", D({{{1, 0, 0, 1, 0, 0}, Z(1)},
                      {{0, 1, 0, 0, 0, 1}, qp(4) - qp(2)},
                      {{0, 0, 1, 0, 0, 1}, 1 - qp(2)},
                      {{0, 0, 0, 1, 1, 0}, -s2}})},
        {"bfgafh", D({{{0, 1, 0, 1, 0, 0}, Z(1)},
                      {{0, 1, 0, 0, 0, 1}, qp(3) - qp(1)},
                      {{0, 0, 0, 1, 1, 0}, -(qp(3) - qp(1))}})},
        {"bfgbdk", D({{{0, 0, 1, 1, 0, 0}, Z(1)},
                      {{0, 0, 1, 0, 0, 1}, -qm},
                      {{0, 0, 0, 1, 1, 0}, qm}})}}});
  out.push_back(
      {"bdk past afh",
       {{"bdkafh", D({{{0, 1, 1, 0, 0, 0}, qp(-2)},
                      {{1, 0, 0, 1, 0, 0}, 1 - qp(-2)},
                      {{1, 0, 0, 0, 1, 0}, 1 - qp(-2)},
                      {{1, 0, 0, 0, 0, 1}, -s2 / qp(3)},
                      {{0, 1, 0, 0, 0, 1}, s2 * (qp(2) + 1) / qp(2)},
                      {{0, 0, 0, 1, 1, 0}, -(qp(4) - qp(2))}})}}});
  out.push_back(
      {"afh past aek",
       {{"afhaek", D({{{1, 1, 0, 0, 0, 0}, Z(1)},
                      {{0, 1, 1, 0, 0, 0}, qm},
                      {{1, 0, 0, 1, 0, 0}, -qm},
                      {{1, 0, 0, 0, 1, 0}, -qm},
                      {{1, 0, 0, 0, 0, 1}, qm.pow(2)},
                      {{0, 1, 0, 0, 0, 1}, qm}})}}});
  out.push_back(
      {"bdk past aek",
       {{"bdkaek", D({{{1, 0, 1, 0, 0, 0}, Z(1)},
                      {{0, 1, 1, 0, 0, 0}, -qm},
                      {{1, 0, 0, 1, 0, 0}, qm},
                      {{1, 0, 0, 0, 1, 0}, qm},
                      {{1, 0, 0, 0, 0, 1}, -qm.pow(2)},
                      {{0, 1, 0, 0, 0, 1}, s2 * (qp(2) + 1) / qp(1)},
                      {{0, 0, 1, 0, 0, 1}, -(qp(3) - qp(1))},
                      {{0, 0, 0, 1, 1, 0}, -qp(1) * s2}})}}});
  out.push_back(
      {"afh bdk ceg triple",
       {{"afhbdkceg", D({{{1, 0, 0, 1, 1, 0}, qp(1)},
                         {{1, 0, 0, 1, 0, 1}, 1 - qp(2)},
                         {{1, 0, 0, 0, 1, 1}, 1 - qp(2)},
                         {{1, 0, 0, 0, 0, 2}, s2 / qp(1)},
                         {{0, 1, 0, 1, 1, 0}, 1 - qp(2)},
                         {{0, 1, 0, 1, 0, 1}, qp(3) - qp(1)},
                         {{0, 1, 0, 0, 1, 1}, qp(3) - qp(1)},
                         {{0, 1, 0, 0, 0, 2}, -s2}})}}});
  out.push_back(
      {"bdk afh ceg triple",
       {{"bdkafhceg", D({{{1, 0, 0, 1, 1, 0}, qp(-1)},
                         {{0, 1, 0, 1, 1, 0}, -(1 - qp(-2))},
                         {{0, 1, 0, 1, 0, 1}, qm},
                         {{0, 1, 0, 0, 1, 1}, qm},
                         {{0, 1, 0, 0, 0, 2}, s2},
                         {{0, 0, 0, 1, 1, 1}, -(qp(4) - qp(2))}})}}});
  return out;
}

Word random_balanced_word(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> order_dist(1, max_order);
  const int m = order_dist(rng);
  StdExponents e;
  std::uniform_int_distribution<int> seg_dist(0, 5);
  for (int i = 0; i < m; ++i) ++e.c[seg_dist(rng)];
  Word w = std_word(e);
  std::vector<std::uint8_t> codes = w.codes();
  std::shuffle(codes.begin(), codes.end(), rng);
  Word out(3);
  for (auto c : codes) out.push_code(c);
  return out;
}

std::string mismatch_detail(const StdExponents& e, const QRational& got,
                            const QRational& expected) {
  std::ostringstream out;
  out << e.key() << ": computed " << got.to_string() << ", expected " << expected.to_string();
  return out.str();
}

}  // namespace

const std::vector<std::pair<StdExponents, QRational>>& golden_table(int m) {
  static const Table t1 = make_order1();
  static const Table t2 = make_order2();
  static const Table t3 = make_order3();
  switch (m) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    default:
      throw std::domain_error("golden_table: published tables cover orders 1..3");
  }
}

const std::vector<SegmentIdentity>& segment_identities() {
  static const auto ids = make_identities();
  return ids;
}

std::vector<Word> random_balanced_words(int count, int max_order, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_balanced_word(rng, max_order));
  return out;
}

Report verify_tables(HaarContext& cx, int max_order) {
  Report rep;
  for (int m = 1; m <= max_order; ++m) {
    const HaarTable& solved = cx.solve_order(m);
    const HaarTable& staged = cx.full_algorithm(m);
    CheckResult golden{"order " + std::to_string(m) + " golden values", true, ""};
    int checked = 0;
    for (const auto& [e, expected] : golden_table(m)) {
      QRational got = e.in_basis() ? solved.values.at(e) : cx.standard_monomial_value(e);
      ++checked;
      if (got != expected) {
        golden.passed = false;
        golden.detail = mismatch_detail(e, got, expected);
        break;
      }
    }
    if (golden.passed) golden.detail = std::to_string(checked) + " entries";
    rep.checks.push_back(std::move(golden));

    CheckResult agree{"order " + std::to_string(m) + " solver == algorithm", true, ""};
    for (const auto& [e, v] : solved.values) {
      if (staged.values.at(e) != v) {
        agree.passed = false;
        agree.detail = e.key();
        break;
      }
    }
    rep.checks.push_back(std::move(agree));
  }

  CheckResult order1{"order 1 closed form", true, ""};
  static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                  {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  static const std::array<int, 6> perm_exps[6] = {
      {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  for (int i = 0; i < 6; ++i) {
    QRational direct = haar_order1({perms[i][0], perms[i][1], perms[i][2]});
    if (direct != cx.solve_order(1).values.at(StdExponents{perm_exps[i]})) {
      order1.passed = false;
      order1.detail = StdExponents{perm_exps[i]}.key();
      break;
    }
  }
  rep.checks.push_back(std::move(order1));
  return rep;
}

Report verify_appendix_identities(HaarContext& cx) {
  Report rep;
  for (const auto& group : segment_identities()) {
    CheckResult check{group.name, true, ""};
    for (const auto& [lhs, expected] : group.lines) {
      const Decomp& got = cx.reducer().reduce(Word::parse(lhs));
      if (got != expected) {
        check.passed = false;
        check.detail = lhs + ": decomposition has " + std::to_string(got.size()) +
                       " terms, expected " + std::to_string(expected.size());
        break;
      }
    }
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

Report verify_symmetry(HaarContext& cx, int random_words, unsigned seed) {
  Report rep;

  CheckResult orbits{"symmetry orbits share table values (orders 1..3)", true, ""};
  for (int m = 1; m <= 3 && orbits.passed; ++m) {
    const HaarTable& table = cx.solve_order(m);
    for (const auto& [e, v] : table.values) {
      for (const auto& o : symmetry_orbit(e)) {
        if (table.values.at(o) != v) {
          orbits.passed = false;
          orbits.detail = e.key() + " vs " + o.key();
          break;
        }
      }
      if (!orbits.passed) break;
    }
  }
  rep.checks.push_back(std::move(orbits));

  CheckResult shift{"afh (bfg)^a (cdh)^b (ceg)^{c+1} matches (bfg)^{a+1} (cdh)^{b+1} (ceg)^c", true,
                    ""};
  for (int m1 = 0; m1 <= 1; ++m1)
    for (int m2 = 0; m2 + m1 <= 1; ++m2)
      for (int m3 = 0; m3 + m2 + m1 <= 1; ++m3) {
        const int order = 2 + m1 + m2 + m3;
        const auto& table = cx.solve_order(order);
        QRational lhs = table.values.at(StdExponents{{0, 1, 0, m1, m2, m3 + 1}});
        QRational rhs = table.values.at(StdExponents{{0, 0, 0, m1 + 1, m2 + 1, m3}});
        if (lhs != rhs) {
          shift.passed = false;
          shift.detail = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                         " m3=" + std::to_string(m3);
        }
      }
  rep.checks.push_back(std::move(shift));

  std::mt19937 rng(seed);
  CheckResult flips{"h(gamma(w)) = h(w) = h(omega(w)) on random balanced words", true, ""};
  CheckResult modular{"h(xy) = h(y eta(x)) on random balanced words", true, ""};
  for (int i = 0; i < random_words; ++i) {
    Word w = random_balanced_word(rng, 3);
    QRational hw = cx.haar(w);
    if (flips.passed) {
      if (cx.haar(gamma(w)) != hw || cx.haar(omega(w)) != hw) {
        flips.passed = false;
        flips.detail = w.to_string();
      }
    }
    if (modular.passed && w.size() >= 2) {
      std::uniform_int_distribution<std::size_t> cut_dist(1, w.size() - 1);
      std::size_t cut = cut_dist(rng);
      Word x(3), y(3);
      for (std::size_t p = 0; p < cut; ++p) x.push_code(w.code(p));
      for (std::size_t p = cut; p < w.size(); ++p) y.push_code(w.code(p));
      auto [scale, xw] = eta(x);
      if (hw != scale * cx.haar(y + xw)) {
        modular.passed = false;
        modular.detail = w.to_string() + " cut at " + std::to_string(cut);
      }
    }
  }
  rep.checks.push_back(std::move(flips));
  rep.checks.push_back(std::move(modular));
  return rep;
}

Report verify_weingarten(HaarContext& cx) {
  Report rep;
  auto expect = [&rep, &cx](const std::string& name, const NCPoly& p, const QRational& exact,
                            long num, long den) {
    CheckResult check{name, true, ""};
    QRational value = cx.haar(p);
    if (value != exact) {
      check.passed = false;
      check.detail = "q-value mismatch: " + value.to_string();
    } else {
      mpq_class limit = cx.weingarten_limit(p);
      if (limit != mpq_class(num, den)) {
        check.passed = false;
        check.detail = "limit mismatch: " + limit.get_str();
      } else {
        check.detail = "limit " + limit.get_str();
      }
    }
    rep.checks.push_back(std::move(check));
  };

  auto word_poly = [](const std::string& text) { return NCPoly::monomial(Word::parse(text)); };

  NCPoly ex1 = multiply(multiply(word_poly("ae"), quantum_minor(1, 1)), quantum_minor(2, 2));
  expect("h(a e a* e*) -> 1/8", ex1, qp(2) / ((qp(2) + 1).pow(2) * (qp(4) + 1)), 1, 8);

  NCPoly ex2 = multiply(multiply(word_poly("ah"), quantum_minor(3, 1)), quantum_minor(1, 2)) *
               (-qp(-1));
  expect("h(a h g* b*) -> -1/24", ex2,
         -qp(1) / ((qp(2) + 1).pow(2) * (qp(4) + 1) * (qp(4) + qp(2) + 1)), -1, 24);

  NCPoly ex3 = multiply(multiply(word_poly("aa"), quantum_minor(1, 1)), quantum_minor(1, 1));
  expect("h(a a a* a*) -> 1/6", ex3, Z(1) / ((qp(4) + 1) * (qp(4) + qp(2) + 1)), 1, 6);

  // Reordered variants from the same family.
  NCPoly ex1b = multiply(multiply(word_poly("ea"), quantum_minor(1, 1)), quantum_minor(2, 2));
  expect("h(e a a* e*) -> 1/8", ex1b,
         qp(2) * (qp(6) + qp(2) + 1) / ((qp(2) + 1).pow(2) * (qp(4) + 1) * (qp(4) + qp(2) + 1)), 1,
         8);
  NCPoly ex3b = multiply(multiply(word_poly("a"), quantum_minor(1, 1)),
                         multiply(word_poly("a"), quantum_minor(1, 1)));
  expect("h(a a* a a*) -> 1/6", ex3b,
         (qp(4) - qp(2) + 1) / ((qp(4) + 1) * (qp(4) + qp(2) + 1)), 1, 6);
  return rep;
}

Report verify_all(HaarContext& cx) {
  Report rep;
  for (auto part : {verify_tables(cx, 3), verify_appendix_identities(cx), verify_symmetry(cx),
                    verify_weingarten(cx)})
    for (auto& c : part.checks) rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace qhaar::verify
