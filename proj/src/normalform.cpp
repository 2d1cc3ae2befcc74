#include "qhaar/normalform.hpp"

#include <algorithm>
#include <sstream>

namespace qhaar {

std::vector<int> CountingMatrix::row_sums() const {
  std::vector<int> s(n_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s[i - 1] += at(i, j);
  return s;
}

std::vector<int> CountingMatrix::col_sums() const {
  std::vector<int> s(n_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s[j - 1] += at(i, j);
  return s;
}

std::optional<int> CountingMatrix::doubly_stochastic_order() const {
  auto rows = row_sums();
  auto cols = col_sums();
  int k = rows[0];
  if (k < 1) return std::nullopt;
  for (int v : rows)
    if (v != k) return std::nullopt;
  for (int v : cols)
    if (v != k) return std::nullopt;
  return k;
}

CountingMatrix counting_matrix(const Word& w) {
  CountingMatrix m(w.n());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Generator g = w.letter(i);
    ++m.at(g.row, g.col);
  }
  return m;
}

namespace {

// Letter codes of the six segments for n = 3 (a=0, b=1, ..., h=7, k=8),
// in the fixed order aek, afh, bdk, bfg, cdh, ceg.
constexpr std::uint8_t kSegments[6][3] = {
    {0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6},
};

// Cell (row-major, 0-based) covered by each segment's permutation matrix.
constexpr int kSegmentCells[6][3] = {
    {0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6},
};

}  // namespace

CountingMatrix StdExponents::counting() const {
  CountingMatrix m(3);
  for (int s = 0; s < 6; ++s)
    for (int cell : kSegmentCells[s]) m.at(cell / 3 + 1, cell % 3 + 1) += c[s];
  return m;
}

std::string StdExponents::key() const {
  std::ostringstream out;
  for (int i = 0; i < 6; ++i) {
    if (i) out << ".";
    out << c[i];
  }
  return out.str();
}

StdExponents StdExponents::parse_key(const std::string& text) {
  StdExponents e;
  std::istringstream in(text);
  for (int i = 0; i < 6; ++i) {
    if (!(in >> e.c[i]) || e.c[i] < 0)
      throw parse_error("invalid exponent key '" + text + "'");
    if (i < 5) {
      char dot;
      if (!(in >> dot) || dot != '.') throw parse_error("invalid exponent key '" + text + "'");
    }
  }
  char extra;
  if (in >> extra) throw parse_error("invalid exponent key '" + text + "'");
  return e;
}

Word std_word(const StdExponents& e) {
  Word w(3);
  for (int s = 0; s < 6; ++s)
    for (int rep = 0; rep < e.c[s]; ++rep)
      for (int l = 0; l < 3; ++l) w.push_code(kSegments[s][l]);
  return w;
}

StdExponents std_rep(const CountingMatrix& m) {
  if (m.n() != 3) throw std::domain_error("std_rep: n = 3 only");
  if (!m.doubly_stochastic_order())
    throw std::domain_error("std_rep: matrix is not doubly stochastic");

  int a = m.at(1, 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) a = std::min(a, m.at(i, j));

  int N[3][3];
  int zi = -1, zj = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      N[i][j] = m.at(i + 1, j + 1) - a;
      if (N[i][j] == 0 && zi < 0) {
        zi = i;
        zj = j;
      }
    }
  if (zi < 0) throw inconsistency_error("std_rep: no zero cell after peeling the flat part");

  // A zero cell rules out the two permutation matrices through it; the
  // remaining coefficients are then forced. n1 = aek coefficient:
  int n1 = 0;
  if (zi == zj) {
    n1 = 0;  // aek passes through every diagonal cell
  } else if ((zi == 0 && zj == 1) || (zi == 1 && zj == 0)) {
    n1 = N[2][2];  // cells (1,2),(2,1): bdk and one even matrix are gone
  } else if ((zi == 0 && zj == 2) || (zi == 2 && zj == 0)) {
    n1 = N[1][1];  // cells (1,3),(3,1): ceg is gone
  } else {
    n1 = N[0][0];  // cells (2,3),(3,2): afh is gone
  }

  int n2 = N[0][0] - n1;
  int n6 = N[1][1] - n1;
  int n3 = N[2][2] - n1;
  int n4 = N[0][1] - n3;
  int n5 = N[1][0] - n3;

  const int coeffs[6] = {n1, n2, n3, n4, n5, n6};
  int check[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  for (int s = 0; s < 6; ++s) {
    if (coeffs[s] < 0)
      throw inconsistency_error("std_rep: forced coefficient is negative");
    for (int cell : kSegmentCells[s]) check[cell / 3][cell % 3] += coeffs[s];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (check[i][j] != N[i][j])
        throw inconsistency_error("std_rep: decomposition does not reproduce the matrix");

  StdExponents e;
  e.c = {n1 + a, n2, n3, n4 + a, n5 + a, n6};
  return e;
}

std::vector<StdExponents> enumerate_basis(int m) {
  if (m < 0) throw std::domain_error("enumerate_basis: m must be non-negative");
  if (m == 0) return {StdExponents{}};
  std::vector<std::pair<std::vector<int>, StdExponents>> keyed;
  for (int m11 = 0; m11 <= m; ++m11)
    for (int m12 = 0; m12 + m11 <= m; ++m12)
      for (int m21 = 0; m21 + m11 <= m; ++m21)
        for (int m22 = 0; m22 + std::max(m12, m21) <= m; ++m22) {
          CountingMatrix c(3);
          c.at(1, 1) = m11;
          c.at(1, 2) = m12;
          c.at(1, 3) = m - m11 - m12;
          c.at(2, 1) = m21;
          c.at(2, 2) = m22;
          c.at(2, 3) = m - m21 - m22;
          c.at(3, 1) = m - m11 - m21;
          c.at(3, 2) = m - m12 - m22;
          c.at(3, 3) = m11 + m12 + m21 + m22 - m;
          bool ok = true;
          for (int i = 1; i <= 3 && ok; ++i)
            for (int j = 1; j <= 3 && ok; ++j)
              if (c.at(i, j) < 0) ok = false;
          if (!ok) continue;
          keyed.emplace_back(c.order_key(), std_rep(c));
        }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<StdExponents> out;
  out.reserve(keyed.size());
  for (auto& [key, e] : keyed) out.push_back(e);
  return out;
}

void decomp_add(Decomp& acc, const StdExponents& e, const QRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void decomp_add_scaled(Decomp& acc, const Decomp& other, const QRational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [e, c] : other) decomp_add(acc, e, c * scale);
}

namespace {

struct SwapStep {
  int qexp_delta = 0;
  bool has_error = false;
  int error_sign = 1;
  std::uint8_t e1 = 0, e2 = 0;
};

// Rewrite of the two-letter product u*v over the swapped order for n = 3
// codes: u*v = q^qexp_delta * (v*u) [+ error_sign*(q - 1/q) * (e1*e2)].
SwapStep swap_step(std::uint8_t u, std::uint8_t v) {
  SwapStep s;
  int ur = u / 3, uc = u % 3, vr = v / 3, vc = v % 3;
  if (u == v) return s;
  if (ur == vr) {
    s.qexp_delta = uc < vc ? 1 : -1;
  } else if (uc == vc) {
    s.qexp_delta = ur < vr ? 1 : -1;
  } else if ((ur < vr) == (uc < vc)) {
    s.has_error = true;
    if (ur < vr) {
      s.error_sign = 1;
      s.e1 = static_cast<std::uint8_t>(ur * 3 + vc);
      s.e2 = static_cast<std::uint8_t>(vr * 3 + uc);
    } else {
      s.error_sign = -1;
      s.e1 = static_cast<std::uint8_t>(vr * 3 + uc);
      s.e2 = static_cast<std::uint8_t>(ur * 3 + vc);
    }
  }
  return s;
}

Word word_from_codes(const std::vector<std::uint8_t>& codes) {
  Word w(3);
  for (auto c : codes) w.push_code(c);
  return w;
}

QRational q_minus_qinv() {
  static const QRational v = QRational::q() - QRational::q_pow(-1);
  return v;
}

}  // namespace

Reducer::Reordering Reducer::reorder_toward(const Word& w, const Word& target) const {
  if (w.n() != 3 || target.n() != 3)
    throw std::domain_error("reorder_toward: n = 3 only");
  if (w.size() != target.size())
    throw std::domain_error("reorder_toward: length mismatch");

  std::vector<std::uint8_t> cur = w.codes();
  const std::vector<std::uint8_t>& tgt = target.codes();
  const std::size_t len = cur.size();
  int qexp = 0;
  Reordering out;

  auto apply_swap = [&](std::size_t lo) {
    // Positions (lo, lo+1) hold the product cur[lo]*cur[lo+1].
    SwapStep s = swap_step(cur[lo], cur[lo + 1]);
    if (s.has_error) {
      std::vector<std::uint8_t> err = cur;
      err[lo] = s.e1;
      err[lo + 1] = s.e2;
      QRational coeff = q_minus_qinv() * QRational::q_pow(qexp);
      out.errors.emplace_back(word_from_codes(err), s.error_sign > 0 ? coeff : -coeff);
    }
    qexp += s.qexp_delta;
    std::swap(cur[lo], cur[lo + 1]);
  };

  if (strategy_ == Strategy::LeftToRight) {
    for (std::size_t p = 0; p < len; ++p) {
      if (cur[p] == tgt[p]) continue;
      std::size_t src = p + 1;
      while (src < len && cur[src] != tgt[p]) ++src;
      if (src == len) throw std::domain_error("reorder_toward: target is not a rearrangement");
      for (std::size_t j = src; j > p; --j) apply_swap(j - 1);
    }
  } else {
    for (std::size_t p = len; p-- > 0;) {
      if (cur[p] == tgt[p]) continue;
      std::size_t src = p;
      while (src > 0 && cur[src - 1] != tgt[p]) --src;
      if (src == 0) throw std::domain_error("reorder_toward: target is not a rearrangement");
      --src;
      for (std::size_t j = src; j < p; ++j) apply_swap(j);
    }
  }
  out.scalar = QRational::q_pow(qexp);
  return out;
}

const Decomp& Reducer::reduce(const Word& w) {
  CountingMatrix m = counting_matrix(w);
  if (w.n() != 3) throw std::domain_error("reduce: n = 3 only");
  if (!w.empty() && !m.doubly_stochastic_order())
    throw std::domain_error("reduce: word is not balanced");
  return reduce_balanced(w);
}

Decomp Reducer::reduce(const NCPoly& p) {
  Decomp acc;
  for (const auto& [w, c] : p.terms()) decomp_add_scaled(acc, reduce(w), c);
  return acc;
}

const Decomp& Reducer::reduce_balanced(const Word& w) {
  auto hit = memo_.find(w);
  if (hit != memo_.end()) return hit->second;

  CountingMatrix m = counting_matrix(w);
  StdExponents exps = w.empty() ? StdExponents{} : std_rep(m);
  Word target = std_word(exps);

  Reordering r = reorder_toward(w, target);
  Decomp acc;
  decomp_add(acc, exps, r.scalar);
  for (const auto& [ew, ec] : r.errors) {
    if (check_invariants_) {
      CountingMatrix em = counting_matrix(ew);
      if (em.row_sums() != m.row_sums() || em.col_sums() != m.col_sums())
        throw inconsistency_error("reduce: error term changed the row or column sums");
      if (!(em.order_key() < m.order_key()))
        throw inconsistency_error("reduce: error term did not shrink in the matrix order");
    }
    decomp_add_scaled(acc, reduce_balanced(ew), ec);
  }

  if (check_invariants_) {
    int wa = m.at(1, 1), wk = m.at(3, 3), wc = m.at(1, 3), wg = m.at(3, 1);
    for (const auto& [e, coeff] : acc) {
      if (e.a_count() > wa || e.k_count() > wk || e.c_count() < wc || e.g_count() < wg)
        throw inconsistency_error("reduce: monotonicity violated in the decomposition");
    }
  }

  auto [it, inserted] = memo_.emplace(w, std::move(acc));
  return it->second;
}

}  // namespace qhaar
