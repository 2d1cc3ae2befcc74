#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qhaar/qfield.hpp"
#include "qhaar/word.hpp"

namespace qhaar {

/// Noncommutative polynomial: finite map word -> coefficient in Q(q).
/// No zero coefficients are stored; all words share the same n.
class NCPoly {
 public:
  using term_map = std::map<Word, QRational>;

  explicit NCPoly(int n = 3) : n_(n) {}
  static NCPoly monomial(const Word& w, QRational coeff = QRational(1));

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }
  QRational coeff(const Word& w) const;

  void add_term(const Word& w, const QRational& coeff);

  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  NCPoly operator*(const QRational& scalar) const;
  bool operator==(const NCPoly& other) const { return n_ == other.n_ && terms_ == other.terms_; }
  bool operator!=(const NCPoly& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  int n_;
  term_map terms_;
};

/// Element of the tensor square: finite map (left word, right word) -> Q(q).
/// Pairs coming from comultiplication satisfy the order restriction: equal
/// lengths, and the column index of the l-th left generator equals the row
/// index of the l-th right generator.
class TensorPoly {
 public:
  using term_map = std::map<std::pair<Word, Word>, QRational>;

  explicit TensorPoly(int n = 3) : n_(n) {}

  int n() const { return n_; }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  QRational coeff(const Word& left, const Word& right) const;

  void add_term(const Word& left, const Word& right, const QRational& coeff);

  TensorPoly operator*(const TensorPoly& other) const;  // componentwise concatenation
  bool operator==(const TensorPoly& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  int n_;
  term_map terms_;
};

/// Whether the l-th left column index matches the l-th right row index for
/// every position (and lengths agree).
bool satisfies_order_restriction(const Word& left, const Word& right);

/// The defining q-commutation relations, as the decomposition of g1*g2 over
/// words in which the two letters appear in the opposite order. Same row or
/// column with ascending second index gives a factor q; the antidiagonal pair
/// commutes; the diagonal pair acquires a (q - 1/q) error term. Inverse
/// directions carry q^{-1} and -(q - 1/q).
std::vector<std::pair<Word, QRational>> relation_swap(int n, Generator g1, Generator g2);

/// Bilinear concatenation product (no reordering).
NCPoly multiply(const NCPoly& p, const NCPoly& r);

/// Sum over permutations of (-q)^{inversions} x_{1,s(1)} ... x_{n,s(n)}.
NCPoly quantum_determinant(int n);

using PrunePredicate = std::function<bool(const Word& partial_left)>;

/// Full expansion of Delta(w) = prod_l (sum_k x_{i_l,k} (x) x_{k,j_l}),
/// coefficient 1 per term, keeping only terms whose partial left words
/// survive the prune predicate. Without pruning the term count is n^|w|.
TensorPoly comultiply(const Word& w, const PrunePredicate& prune = nullptr);

/// Callback form of the comultiplication expansion: visit(left, right) is
/// called once per surviving term. Used where materializing the tensor
/// polynomial would be wasteful.
void comultiply_visit(const Word& w, const PrunePredicate& prune,
                      const std::function<void(const Word&, const Word&)>& visit);

/// Modular automorphism scalar: eta(w) = q^{sum(2i+2j-2n-2)} * w.
std::pair<QRational, Word> eta(const Word& w);

/// Diagonal flip x_{i,j} -> x_{j,i}, order preserved (homomorphism).
Word gamma(const Word& w);

/// Double flip x_{i,j} -> x_{n+1-i,n+1-j} with the word reversed
/// (anti-homomorphism).
Word omega(const Word& w);

/// 2x2 quantum determinant of the matrix with row i and column j deleted
/// (n = 3): u11*u22 - q*u12*u21 over the remaining rows and columns in
/// ascending order.
NCPoly quantum_minor(int i, int j);

/// Linear combinations of monomials with coefficients built from integers
/// and powers of q, e.g. "aekceg", "-q*aefhak + q^2*aefhcg", "3*q^-2*ab".
NCPoly parse_combination(const std::string& text);

}  // namespace qhaar
