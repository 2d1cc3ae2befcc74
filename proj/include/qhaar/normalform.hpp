#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhaar/algebra.hpp"
#include "qhaar/qfield.hpp"
#include "qhaar/word.hpp"

namespace qhaar {

/// n x n matrix of generator occurrence counts.
class CountingMatrix {
 public:
  explicit CountingMatrix(int n = 3) : n_(n), entries_(n * n, 0) {}

  int n() const { return n_; }
  int at(int row, int col) const { return entries_[(row - 1) * n_ + (col - 1)]; }
  int& at(int row, int col) { return entries_[(row - 1) * n_ + (col - 1)]; }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  /// k when all row and column sums equal k >= 1, absent otherwise (so the
  /// all-zero matrix returns absent).
  std::optional<int> doubly_stochastic_order() const;

  /// Row-major flattening; lexicographic comparison of these keys realizes
  /// the total order on counting matrices.
  const std::vector<int>& order_key() const { return entries_; }

  bool operator==(const CountingMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }
  bool operator<(const CountingMatrix& other) const { return entries_ < other.entries_; }

 private:
  int n_;
  std::vector<int> entries_;
};

CountingMatrix counting_matrix(const Word& w);

/// Exponents (c1..c6) of a standard monomial
/// (aek)^c1 (afh)^c2 (bdk)^c3 (bfg)^c4 (cdh)^c5 (ceg)^c6 for n = 3.
struct StdExponents {
  std::array<int, 6> c{0, 0, 0, 0, 0, 0};

  int order() const { return c[0] + c[1] + c[2] + c[3] + c[4] + c[5]; }
  bool in_basis() const { return c[1] == 0 || c[2] == 0 || c[5] == 0; }

  int a_count() const { return c[0] + c[1]; }
  int k_count() const { return c[0] + c[2]; }
  int c_count() const { return c[4] + c[5]; }
  int g_count() const { return c[3] + c[5]; }
  /// Letters in high-complexity segments (aek, afh, bdk).
  int high_complexity_count() const { return c[0] + c[1] + c[2]; }

  CountingMatrix counting() const;

  /// Text key "c1.c2.c3.c4.c5.c6" used in table files and CLI output.
  std::string key() const;
  static StdExponents parse_key(const std::string& text);

  auto operator<=>(const StdExponents&) const = default;
};

/// Concatenation of the six segments with the given multiplicities.
Word std_word(const StdExponents& e);

/// The basis representative of a doubly stochastic 3x3 matrix: peel off
/// a = min entry as aek*bfg*cdh copies, decompose the rest uniquely over the
/// six permutation matrices (forced once a zero cell is known). Throws
/// inconsistency_error if the forced coefficients are negative or the cells
/// do not add up.
StdExponents std_rep(const CountingMatrix& m);

/// One representative per m-doubly-stochastic 3x3 matrix, ordered by the
/// matrix order key.
std::vector<StdExponents> enumerate_basis(int m);

using Decomp = std::map<StdExponents, QRational>;

void decomp_add(Decomp& acc, const StdExponents& e, const QRational& coeff);
void decomp_add_scaled(Decomp& acc, const Decomp& other, const QRational& scale);

/// Rewriting engine decomposing balanced words over the standard-monomial
/// basis. Memoizes per word; deterministic for a fixed strategy.
class Reducer {
 public:
  enum class Strategy { LeftToRight, RightToLeft };

  explicit Reducer(Strategy strategy = Strategy::LeftToRight) : strategy_(strategy) {}

  /// Exact decomposition of w over basis standard monomials. Throws
  /// std::domain_error for unbalanced words.
  const Decomp& reduce(const Word& w);

  /// Linear extension to noncommutative polynomials (all words balanced).
  Decomp reduce(const NCPoly& p);

  /// Express `w` as scalar * target + sum of error terms whose counting
  /// matrices are strictly smaller; `target` must be a rearrangement of `w`.
  struct Reordering {
    QRational scalar;
    std::vector<std::pair<Word, QRational>> errors;
  };
  Reordering reorder_toward(const Word& w, const Word& target) const;

  /// When set, every intermediate word is checked to preserve row and column
  /// sums, and final decompositions are checked against the reordering
  /// monotonicity rule (#a, #k never grow; #c, #g never shrink).
  void set_check_invariants(bool on) { check_invariants_ = on; }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  const Decomp& reduce_balanced(const Word& w);

  Strategy strategy_;
  bool check_invariants_ = false;
  std::unordered_map<Word, Decomp, WordHash> memo_;
};

}  // namespace qhaar
