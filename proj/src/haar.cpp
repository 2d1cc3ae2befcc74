#include "qhaar/haar.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>

#include "qhaar/table_io.hpp"

namespace qhaar {

namespace {

enum Segment { kAek = 0, kAfh = 1, kBdk = 2, kBfg = 3, kCdh = 4, kCeg = 5 };

void append_segment(Word& w, int seg, int count = 1) {
  static const std::uint8_t codes[6][3] = {
      {0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6},
  };
  for (int rep = 0; rep < count; ++rep)
    for (int l = 0; l < 3; ++l) w.push_code(codes[seg][l]);
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

QRational q_int(long v) { return QRational(v); }

const QRational& one_minus_q2() {
  static const QRational v = q_int(1) - QRational::q_pow(2);
  return v;
}

}  // namespace

QRational haar_order1(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw std::domain_error("haar_order1: empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) throw std::domain_error("haar_order1: not a permutation");
    seen[v] = true;
  }
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) ++inv;
  // [n]_{q^2}! = prod_j (1-q^{2j})/(1-q^2)
  QRational fact(1);
  for (int j = 2; j <= n; ++j)
    fact *= (q_int(1) - QRational::q_pow(2 * j)) / (q_int(1) - QRational::q_pow(2));
  QRational numer = QRational::q_pow(inv);
  if (inv % 2) numer = -numer;
  return numer / fact;
}

std::set<StdExponents> symmetry_orbit(const StdExponents& e) {
  std::set<StdExponents> orbit{e};
  std::vector<StdExponents> queue{e};
  auto push = [&](StdExponents x) {
    if (orbit.insert(x).second) queue.push_back(x);
  };
  while (!queue.empty()) {
    StdExponents x = queue.back();
    queue.pop_back();
    StdExponents y = x;
    std::swap(y.c[3], y.c[4]);
    push(y);
    if (x.c[3] == 0 && x.c[4] == 0 && x.c[5] == 0) {
      y = x;
      std::swap(y.c[1], y.c[2]);
      push(y);
    }
    if (x.c[0] == 0) {
      y = x;
      std::swap(y.c[1], y.c[2]);
      push(y);
      std::swap(y.c[3], y.c[4]);
      push(y);
    }
  }
  return orbit;
}

const Decomp& HaarContext::dq_power_decomposition(int m) {
  if (m < 1) throw std::domain_error("dq_power_decomposition: m must be positive");
  auto hit = dq_decomp_.find(m);
  if (hit != dq_decomp_.end()) return hit->second;
  NCPoly dq = quantum_determinant(3);
  NCPoly power = dq;
  for (int i = 1; i < m; ++i) power = multiply(power, dq);
  Decomp d = reducer_.reduce(power);
  return dq_decomp_.emplace(m, std::move(d)).first->second;
}

LinearRelation HaarContext::derive_linear_relation(const StdExponents& equation_basis,
                                                   const StdExponents& comparing_basis) {
  const int m = equation_basis.order();
  if (m < 1 || comparing_basis.order() != m)
    throw std::domain_error("derive_linear_relation: bases must share a positive order");

  const Word w = std_word(equation_basis);
  const int len = static_cast<int>(w.size());

  CountingMatrix cm = comparing_basis.counting();
  const int need_a = cm.at(1, 1), need_k = cm.at(3, 3);
  const int cap_c = cm.at(1, 3), cap_g = cm.at(3, 1);

  // How many row-1 / row-3 positions remain at or after each index.
  std::vector<int> suff1(len + 1, 0), suff3(len + 1, 0);
  for (int i = len - 1; i >= 0; --i) {
    suff1[i] = suff1[i + 1] + (w.letter(i).row == 1);
    suff3[i] = suff3[i + 1] + (w.letter(i).row == 3);
  }

  LinearRelation rel;
  rel.rhs_basis = equation_basis;
  const Decomp& dq = dq_power_decomposition(m);
  auto bj = dq.find(comparing_basis);
  rel.rhs_coeff = bj == dq.end() ? QRational(0) : bj->second;

  Word z(3), y(3);
  int colcount[4] = {0, 0, 0, 0};
  int za = 0, zk = 0, zc = 0, zg = 0;

  std::function<void(int)> dfs = [&](int i) {
    if (i == len) {
      const Decomp& dz = reducer_.reduce(z);
      auto zt = dz.find(comparing_basis);
      if (zt == dz.end()) return;
      const Decomp& dy = reducer_.reduce(y);
      decomp_add_scaled(rel.coefficients, dy, zt->second);
      return;
    }
    const Generator g = w.letter(i);
    for (int l = 1; l <= 3; ++l) {
      if (colcount[l] == m) continue;
      const int da = (g.row == 1 && l == 1);
      const int dk = (g.row == 3 && l == 3);
      const int dc = (g.row == 1 && l == 3);
      const int dg = (g.row == 3 && l == 1);
      // The comparing basis can appear in the decomposition of z only if z
      // has enough a's and k's and not too many c's and g's.
      if (zc + dc > cap_c || zg + dg > cap_g) continue;
      if (za + da + std::min(suff1[i + 1], m - colcount[1] - (l == 1)) < need_a) continue;
      if (zk + dk + std::min(suff3[i + 1], m - colcount[3] - (l == 3)) < need_k) continue;
      ++colcount[l];
      za += da;
      zk += dk;
      zc += dc;
      zg += dg;
      z.push_back(Generator{g.row, static_cast<std::uint8_t>(l)});
      y.push_back(Generator{static_cast<std::uint8_t>(l), g.col});
      dfs(i + 1);
      z.pop_back();
      y.pop_back();
      --colcount[l];
      za -= da;
      zk -= dk;
      zc -= dc;
      zg -= dg;
    }
  };
  dfs(0);
  return rel;
}

LinearRelation HaarContext::dq_lift_relation(const StdExponents& lower) {
  NCPoly dq = quantum_determinant(3);
  NCPoly prod = multiply(dq, NCPoly::monomial(std_word(lower)));
  LinearRelation rel;
  rel.coefficients = reducer_.reduce(prod);
  rel.rhs_basis = lower;
  rel.rhs_coeff = QRational(1);
  return rel;
}

void HaarContext::check_normalization(const HaarTable& table) {
  if (table.order < 1) return;
  const Decomp& b = dq_power_decomposition(table.order);
  QRational acc(0);
  for (const auto& [e, c] : b) acc += c * table.values.at(e);
  if (!acc.is_one())
    throw inconsistency_error("haar table of order " + std::to_string(table.order) +
                              " violates the normalization h(D_q^m) = 1");
}

const HaarTable& HaarContext::solve_order(int m) {
  if (m < 0) throw std::domain_error("solve_order: negative order");
  if (m > opts_.max_order)
    throw std::domain_error("solve_order: order " + std::to_string(m) +
                            " exceeds the configured maximum " + std::to_string(opts_.max_order));
  auto hit = solver_tables_.find(m);
  if (hit != solver_tables_.end()) return hit->second;
  if (m == 0) {
    HaarTable t;
    t.order = 0;
    t.values[StdExponents{}] = QRational(1);
    return solver_tables_.emplace(0, std::move(t)).first->second;
  }
  std::string cache_path;
  if (opts_.use_cache && !opts_.cache_dir.empty()) {
    cache_path = opts_.cache_dir + "/haar_order_" + std::to_string(m) + ".json";
    if (auto cached = try_load_table_file(cache_path, m)) {
      check_normalization(*cached);
      return solver_tables_.emplace(m, std::move(*cached)).first->second;
    }
  }
  HaarTable t = solve_order_impl(m);
  if (!cache_path.empty()) save_table_file(cache_path, t);
  return solver_tables_.emplace(m, std::move(t)).first->second;
}

HaarTable HaarContext::solve_order_impl(int m) {
  const bool verbose = std::getenv("QHAAR_VERBOSE") != nullptr;
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&started] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  const auto basis = enumerate_basis(m);
  const int K = static_cast<int>(basis.size());
  std::map<StdExponents, int> index;
  for (int i = 0; i < K; ++i) index.emplace(basis[i], i);

  // Rows are kept fraction-free: integer-polynomial coefficients on the
  // left, a rational right-hand side, the whole row primitive. Pivot
  // combinations then cost polynomial multiplications only; the per-entry
  // rational arithmetic happens once, at back-substitution.
  struct PolyRow {
    std::map<int, IntPoly> lhs;
    QRational rhs;
  };

  auto strip_row = [](PolyRow& row) {
    if (row.lhs.empty()) return;
    IntPoly g;
    for (const auto& [c, p] : row.lhs) {
      g = IntPoly::gcd(g, p);
      if (g.is_one()) return;
    }
    for (auto& [c, p] : row.lhs) p = p.divided_exact(g);
    row.rhs = row.rhs / QRational(g, IntPoly(1));
  };

  auto row_from_relation = [&](const LinearRelation& rel, const QRational& rhs) -> PolyRow {
    PolyRow row;
    row.rhs = rhs;
    std::map<int, QRational> entries;
    for (const auto& [e, c] : rel.coefficients) entries.emplace(index.at(e), c);
    if (!rel.rhs_coeff.is_zero() && rel.rhs_basis.order() == m) {
      auto [it, inserted] = entries.try_emplace(index.at(rel.rhs_basis), -rel.rhs_coeff);
      if (!inserted) it->second -= rel.rhs_coeff;
    }
    // Clear denominators (one per entry; they are q-monomials in practice).
    IntPoly scale(1);
    for (const auto& [c, v] : entries) {
      if (v.den().is_one()) continue;
      IntPoly g = IntPoly::gcd(scale, v.den());
      scale = scale * v.den().divided_exact(g);
    }
    for (const auto& [c, v] : entries) {
      if (v.is_zero()) continue;
      row.lhs.emplace(c, v.num() * scale.divided_exact(v.den()));
    }
    row.rhs = row.rhs * QRational(scale, IntPoly(1));
    strip_row(row);
    return row;
  };

  std::vector<std::optional<PolyRow>> pivots(K);
  std::vector<PolyRow> generated;
  int rank = 0;

  // Reduce a row against the current pivots; install it as a new pivot when
  // a fresh leading column survives. A row that vanishes must have zero
  // right-hand side, otherwise the relation set is inconsistent.
  auto eliminate = [&](PolyRow row) -> bool {
    while (!row.lhs.empty()) {
      const int j = row.lhs.begin()->first;
      if (!pivots[j]) {
        pivots[j] = std::move(row);
        return true;
      }
      const PolyRow& p = *pivots[j];
      const IntPoly fr = std::move(row.lhs.begin()->second);
      const IntPoly& fp = p.lhs.begin()->second;
      row.lhs.erase(row.lhs.begin());
      // row := fp * row - fr * pivot (the leading column cancels).
      for (auto& [c, v] : row.lhs) v = v * fp;
      for (auto it = std::next(p.lhs.begin()); it != p.lhs.end(); ++it) {
        IntPoly delta = it->second * fr;
        auto [slot, inserted] = row.lhs.try_emplace(it->first, IntPoly());
        slot->second = inserted ? -delta : slot->second - delta;
        if (slot->second.is_zero()) row.lhs.erase(slot);
      }
      row.rhs = row.rhs * QRational(fp, IntPoly(1)) - p.rhs * QRational(fr, IntPoly(1));
      strip_row(row);
    }
    if (!row.rhs.is_zero()) throw inconsistency_error("solve_order: inconsistent relation");
    return false;
  };

  // Inhomogeneous anchors first: one quantum-determinant lift per basis
  // element of the previous order.
  const auto lower_basis = enumerate_basis(m - 1);
  for (const auto& e : lower_basis) {
    LinearRelation rel = dq_lift_relation(e);
    QRational rhs = rel.rhs_basis.order() == 0 ? QRational(1)
                                               : solve_order(m - 1).values.at(rel.rhs_basis);
    PolyRow row = row_from_relation(rel, rhs);
    generated.push_back(row);
    if (rank < K && eliminate(std::move(row))) ++rank;
  }
  if (verbose)
    std::fprintf(stderr, "[solve %d] %zu lifts -> rank %d/%d (%.2fs)\n", m, lower_basis.size(),
                 rank, K, elapsed());

  if (rank < K) {
    // Comparing bases with many a's and k's first, ties in basis order.
    std::vector<int> cmp_order(K);
    for (int i = 0; i < K; ++i) cmp_order[i] = i;
    std::stable_sort(cmp_order.begin(), cmp_order.end(), [&](int x, int y) {
      return basis[x].a_count() + basis[x].k_count() > basis[y].a_count() + basis[y].k_count();
    });
    for (int ci : cmp_order) {
      for (int ei = 0; ei < K && rank < K; ++ei) {
        PolyRow row = row_from_relation(derive_linear_relation(basis[ei], basis[ci]),
                                        QRational(0));
        if (row.lhs.empty()) continue;
        generated.push_back(row);
        if (eliminate(std::move(row))) ++rank;
      }
      if (verbose)
        std::fprintf(stderr, "[solve %d] cmp %s -> rank %d/%d, %zu relations (%.2fs)\n", m,
                     basis[ci].key().c_str(), rank, K, generated.size(), elapsed());
      if (rank == K) break;
    }
  }
  if (rank < K)
    throw inconsistency_error("solve_order: rank deficiency after exhausting relation pairs");

  std::vector<QRational> vals(K);
  for (int j = K - 1; j >= 0; --j) {
    const PolyRow& p = *pivots[j];
    QRational v = p.rhs;
    for (auto it = std::next(p.lhs.begin()); it != p.lhs.end(); ++it)
      v -= QRational(it->second, IntPoly(1)) * vals[it->first];
    vals[j] = v / QRational(p.lhs.begin()->second, IntPoly(1));
  }

  // Every generated relation, used or not, must hold exactly.
  for (const auto& row : generated) {
    QRational acc(0);
    for (const auto& [c, v] : row.lhs) acc += QRational(v, IntPoly(1)) * vals[c];
    if (acc != row.rhs) throw inconsistency_error("solve_order: a generated relation is violated");
  }

  HaarTable t;
  t.order = m;
  for (int i = 0; i < K; ++i) t.values.emplace(basis[i], vals[i]);
  check_normalization(t);
  return t;
}

std::map<StdExponents, QRational> HaarContext::source_matrix_solution(int m) {
  if (m < 1) throw std::domain_error("source_matrix_solution: m must be positive");
  const QRational q = QRational::q();
  const QRational q2m = QRational::q_pow(2 * m);
  auto minus_q_pow = [](int k) {
    QRational v = QRational::q_pow(k);
    return k % 2 ? -v : v;
  };
  const QRational f2 = QRational::q_pow(2) - 1;                        // q^2-1
  const QRational f4 = QRational::q_pow(4) - 1;                        // q^4-1
  const QRational d0 = q2m - 1;                                        // q^{2m}-1
  const QRational d1 = QRational::q_pow(2 * m + 2) - 1;                // q^{2m+2}-1
  const QRational d2 = QRational::q_pow(2 * m + 4) - 1;                // q^{2m+4}-1

  std::map<StdExponents, QRational> out;
  const QRational common = minus_q_pow(3 * m - 2) * f2.pow(3) * f4 / (d0.pow(2) * d1.pow(2) * d2);
  // aek (ceg)^{m-1}
  out[StdExponents{{1, 0, 0, 0, 0, m - 1}}] =
      common * (1 + QRational::q_pow(4) - QRational::q_pow(2) - QRational::q_pow(2 * m + 2)) / q;
  // afh (ceg)^{m-1} and bdk (ceg)^{m-1}
  const QRational hb = common * f2;
  out[StdExponents{{0, 1, 0, 0, 0, m - 1}}] = hb;
  out[StdExponents{{0, 0, 1, 0, 0, m - 1}}] = hb;
  // bfg cdh (ceg)^{m-2}
  if (m >= 2) out[StdExponents{{0, 0, 0, 1, 1, m - 2}}] = hb;
  // bfg (ceg)^{m-1} and cdh (ceg)^{m-1}
  const QRational hl = minus_q_pow(3 * m - 1) * f2.pow(3) * f4 / (d0 * d1.pow(2) * d2);
  out[StdExponents{{0, 0, 0, 1, 0, m - 1}}] = hl;
  out[StdExponents{{0, 0, 0, 0, 1, m - 1}}] = hl;
  // (ceg)^m
  out[StdExponents{{0, 0, 0, 0, 0, m}}] = minus_q_pow(3 * m) * f2.pow(2) * f4 / (d1.pow(2) * d2);
  return out;
}

std::vector<QRational> HaarContext::rec_cdh_ceg(int m) {
  if (m < 1) throw std::domain_error("rec_cdh_ceg: m must be positive");
  auto src = source_matrix_solution(m);
  std::vector<QRational> v(m + 1);
  v[0] = src.at(StdExponents{{0, 0, 0, 0, 0, m}});
  v[1] = src.at(StdExponents{{0, 0, 0, 0, 1, m - 1}});
  const QRational q = QRational::q();
  const QRational qm1 = QRational::q_pow(-1) - q;  // q^{-1} - q
  const QRational q1m = q - QRational::q_pow(-1);  // q - q^{-1}
  for (int i = 2; i <= m; ++i) {
    const QRational lhs = QRational::q_pow(2) *
                          (QRational::q_pow(m - i + 1) - QRational::q_pow(-(m - i + 1))).pow(2) /
                          one_minus_q2().pow(2);
    QRational rhs = -q / (QRational::q_pow(2) - 1) * v[i - 1];
    for (int k = 1; k <= i - 1; ++k) {
      QRational ck = qm1.pow(k - 2) * q_int(binomial(i, k)) * QRational::q_pow(-2 * (m - i + 1)) +
                     q1m.pow(k - 2) * QRational::q_pow(2 * k) * q_int(binomial(i - 1, k)) *
                         QRational::q_pow(2 * (m - i + 1));
      rhs -= ck * v[i - k];
    }
    rhs -= qm1.pow(i - 2) * QRational::q_pow(-2 * (m - i + 1)) * v[0];
    v[i] = rhs / lhs;
  }
  return v;
}

std::map<std::pair<int, int>, QRational> HaarContext::rec_cdh_bfg_ceg(int m) {
  if (m < 1) throw std::domain_error("rec_cdh_bfg_ceg: m must be positive");
  auto base = rec_cdh_ceg(m);
  std::map<std::pair<int, int>, QRational> out;
  for (int r = 0; r <= m; ++r) out[{r, 0}] = base[r];
  for (int s = 1; s <= m; ++s) out[{0, s}] = base[s];  // double-flip equality
  const QRational q = QRational::q();
  const QRational qm1 = QRational::q_pow(-1) - q;
  const QRational q1m = q - QRational::q_pow(-1);
  for (int r = 1; r <= m - 1; ++r) {
    for (int s = 0; s <= m - r - 1; ++s) {
      const QRational lhs = QRational::q_pow(2) *
                            (QRational::q_pow(m - s) - QRational::q_pow(s - m)).pow(2) /
                            one_minus_q2().pow(2);
      QRational rhs = -q / (QRational::q_pow(2) - 1) * out.at({r, s});
      for (int i = 0; i <= s - 1; ++i) {
        QRational ai =
            qm1.pow(i - 1) * q_int(binomial(s + 1, i + 1)) * QRational::q_pow(-2 * m + 2 * s) +
            q1m.pow(i - 1) * QRational::q_pow(2 * i - 2) * q_int(binomial(s, i + 1)) *
                QRational::q_pow(2 * m - 2 * s + 4);
        rhs -= ai * out.at({r, s - i});
      }
      rhs -= qm1.pow(s - 1) * QRational::q_pow(-2 * m + 2 * s) * out.at({r, 0});
      out[{r, s + 1}] = rhs / lhs;
    }
  }
  return out;
}

const HaarTable& HaarContext::full_algorithm(int m) {
  if (m < 0) throw std::domain_error("full_algorithm: negative order");
  auto hit = full_tables_.find(m);
  if (hit != full_tables_.end()) return hit->second;
  if (m == 0) {
    HaarTable t;
    t.order = 0;
    t.values[StdExponents{}] = QRational(1);
    return full_tables_.emplace(0, std::move(t)).first->second;
  }
  HaarTable t = full_algorithm_impl(m);
  return full_tables_.emplace(m, std::move(t)).first->second;
}

HaarTable HaarContext::full_algorithm_impl(int m) {
  const HaarTable& lower_table = full_algorithm(m - 1);
  std::map<StdExponents, QRational> vals;

  auto value_of = [&](const StdExponents& e) -> const QRational& {
    auto it = vals.find(e);
    if (it == vals.end())
      throw inconsistency_error("full_algorithm: value of " + e.key() +
                                " is needed before its stage");
    return it->second;
  };
  auto h_known = [&](const Word& w) -> QRational {
    const Decomp& d = reducer_.reduce(w);
    QRational acc(0);
    for (const auto& [e, c] : d) acc += c * value_of(e);
    return acc;
  };

  // Step 1: families with low-complexity segments only.
  for (const auto& [rs, v] : rec_cdh_bfg_ceg(m)) {
    const auto [r, s] = rs;
    vals[StdExponents{{0, 0, 0, s, r, m - r - s}}] = v;
  }

  // Step 2: (afh)^w families by induction on w; Step 3 mirrors them to bdk.
  const StdExponents cmp_bdk{{m - 1, 0, 1, 0, 0, 0}};
  for (int w = 1; w <= m; ++w) {
    // i) at least one ceg segment: rewrite ceg(afh)^w and divide by 1-q^{2w}.
    for (int s = 0; s + w <= m; ++s) {
      for (int r = 0; r + s + w <= m; ++r) {
        const int t = m - w - s - r;
        if (t < 1) continue;
        QRational sum(0);
        for (int i = 0; i < w; ++i) {
          Word word(3);
          append_segment(word, kAfh, i);
          append_segment(word, kBfg);
          append_segment(word, kCdh);
          append_segment(word, kAfh, w - 1 - i);
          append_segment(word, kBfg, s);
          append_segment(word, kCdh, r);
          append_segment(word, kCeg, t - 1);
          sum += QRational::q_pow(2 * i) * one_minus_q2() * h_known(word);
        }
        vals[StdExponents{{0, w, 0, s, r, t}}] = sum / (q_int(1) - QRational::q_pow(2 * w));
      }
    }
    // ii) no ceg segment: one unknown in the relation from equation basis
    // (afh)^{w-1}(cdh)^{r+1}(bfg)^s and comparing basis (aek)^{m-1}bdk.
    for (int r = 0; r + w <= m; ++r) {
      const int s = m - w - r;
      const StdExponents target{{0, w, 0, s, r, 0}};
      const StdExponents eq{{0, w - 1, 0, s, r + 1, 0}};
      LinearRelation rel = derive_linear_relation(eq, cmp_bdk);
      QRational num = rel.rhs_coeff * value_of(eq);
      QRational target_coeff(0);
      for (const auto& [e, c] : rel.coefficients) {
        if (e == target) {
          target_coeff = c;
        } else {
          num -= c * value_of(e);
        }
      }
      if (target_coeff.is_zero())
        throw inconsistency_error("full_algorithm: vanishing coefficient for " + target.key());
      vals[target] = num / target_coeff;
    }
    for (int s = 0; s + w <= m; ++s)
      for (int r = 0; r + s + w <= m; ++r) {
        const int t = m - w - s - r;
        vals[StdExponents{{0, 0, w, s, r, t}}] = vals.at(StdExponents{{0, w, 0, r, s, t}});
      }
  }

  // Step 4: induction on the number of high-complexity segments, inner
  // induction on the number of aek segments.
  const StdExponents cmp_afh{{m - 1, 1, 0, 0, 0, 0}};
  const QRational dq_coeffs[6] = {q_int(1),          -QRational::q(),  -QRational::q(),
                                  QRational::q_pow(2), QRational::q_pow(2), -QRational::q_pow(3)};
  for (int hc = 1; hc <= m; ++hc) {
    // u = 0, both afh and bdk present, no ceg (the only basis case left).
    for (int v = 1; v < hc; ++v) {
      const int w2 = hc - v;
      for (int s = 0; s + hc <= m; ++s) {
        const int r = m - hc - s;
        const StdExponents target{{0, v, w2, s, r, 0}};
        const StdExponents eq{{0, v, w2 - 1, s + 1, r, 0}};
        LinearRelation rel = derive_linear_relation(eq, cmp_afh);
        QRational num = rel.rhs_coeff * value_of(eq);
        QRational target_coeff(0);
        for (const auto& [e, c] : rel.coefficients) {
          if (e == target) {
            target_coeff = c;
          } else {
            num -= c * value_of(e);
          }
        }
        if (target_coeff.is_zero())
          throw inconsistency_error("full_algorithm: vanishing coefficient for " + target.key());
        vals[target] = num / target_coeff;
      }
    }
    // u >= 1: one quantum-determinant lift per target.
    for (int u = 1; u <= hc; ++u) {
      for (int v = 0; v + u <= hc; ++v) {
        const int w2 = hc - u - v;
        for (int s = 0; s + hc <= m; ++s)
          for (int r = 0; r + s + hc <= m; ++r) {
            const int t = m - hc - s - r;
            if (v != 0 && w2 != 0 && t != 0) continue;  // outside the basis
            const StdExponents target{{u, v, w2, s, r, t}};
            const StdExponents lower{{u - 1, v, w2, s, r, t}};
            QRational value = lower_table.values.at(lower);
            for (int seg = 1; seg < 6; ++seg) {
              Word word(3);
              append_segment(word, kAek, u - 1);
              append_segment(word, seg);
              append_segment(word, kAfh, v);
              append_segment(word, kBdk, w2);
              append_segment(word, kBfg, s);
              append_segment(word, kCdh, r);
              append_segment(word, kCeg, t);
              value -= dq_coeffs[seg] * h_known(word);
            }
            vals[target] = value;
          }
      }
    }
  }

  HaarTable t;
  t.order = m;
  for (const auto& e : enumerate_basis(m)) t.values.emplace(e, vals.at(e));
  check_normalization(t);
  return t;
}

QRational HaarContext::standard_monomial_value(const StdExponents& e) {
  const int m = e.order();
  const HaarTable& table = full_algorithm(m);
  if (e.in_basis()) return table.values.at(e);

  auto h_table = [&](const Word& w) -> QRational {
    const Decomp& d = reducer_.reduce(w);
    QRational acc(0);
    for (const auto& [be, c] : d) acc += c * table.values.at(be);
    return acc;
  };

  // Rearrange (aek)^u(afh)^v(bdk)^w(bfg)^s(cdh)^r(ceg)^t so that one
  // afh*bdk*ceg triple sits together, then push that triple through its
  // eight-term standard decomposition.
  const int u = e.c[0], v = e.c[1], w2 = e.c[2], s = e.c[3], r = e.c[4], t = e.c[5];
  Word arranged(3);
  append_segment(arranged, kAek, u);
  append_segment(arranged, kAfh, v - 1);
  append_segment(arranged, kBdk, w2 - 1);
  append_segment(arranged, kAfh);
  append_segment(arranged, kBdk);
  append_segment(arranged, kCeg);
  append_segment(arranged, kBfg, s);
  append_segment(arranged, kCdh, r);
  append_segment(arranged, kCeg, t - 1);

  Reducer::Reordering ro = reducer_.reorder_toward(std_word(e), arranged);
  QRational value(0);
  for (const auto& [ew, ec] : ro.errors) value += ec * h_table(ew);

  Word triple(3);
  append_segment(triple, kAfh);
  append_segment(triple, kBdk);
  append_segment(triple, kCeg);
  const Decomp& triple_decomp = reducer_.reduce(triple);
  for (const auto& [se, sc] : triple_decomp) {
    Word word(3);
    append_segment(word, kAek, u);
    append_segment(word, kAfh, v - 1);
    append_segment(word, kBdk, w2 - 1);
    for (int seg = 0; seg < 6; ++seg) append_segment(word, seg, se.c[seg]);
    append_segment(word, kBfg, s);
    append_segment(word, kCdh, r);
    append_segment(word, kCeg, t - 1);
    value += ro.scalar * sc * h_table(word);
  }
  return value;
}

QRational HaarContext::haar(const Word& w) {
  if (w.n() != 3) throw std::domain_error("haar: n = 3 only");
  if (w.empty()) return QRational(1);
  CountingMatrix m = counting_matrix(w);
  auto k = m.doubly_stochastic_order();
  if (!k) return QRational(0);
  if (*k > opts_.max_order)
    throw std::domain_error("haar: order " + std::to_string(*k) +
                            " exceeds the configured maximum " + std::to_string(opts_.max_order));
  const HaarTable& table = solve_order(*k);
  const Decomp& d = reducer_.reduce(w);
  QRational acc(0);
  for (const auto& [e, c] : d) acc += c * table.values.at(e);
  return acc;
}

QRational HaarContext::haar(const NCPoly& p) {
  QRational acc(0);
  for (const auto& [w, c] : p.terms()) acc += c * haar(w);
  return acc;
}

mpq_class HaarContext::weingarten_limit(const NCPoly& p) {
  return haar(p).eval_at(mpq_class(1));
}

}  // namespace qhaar
