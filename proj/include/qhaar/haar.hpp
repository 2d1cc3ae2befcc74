#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qhaar/normalform.hpp"

namespace qhaar {

/// Haar state of an order-1 standard monomial: (-q)^{inversions} / [n]_{q^2}!.
/// `perm` lists the images of 1..n (a permutation of 1..n).
QRational haar_order1(const std::vector<int>& perm);

/// Computed Haar values of one order, defined on enumerate_basis(order).
struct HaarTable {
  int order = 0;
  std::map<StdExponents, QRational> values;
};

/// One linear relation between order-m Haar values:
///   sum_i coefficients[s_i] * h(s_i) = rhs_coeff * h(rhs_basis).
/// For comultiplication-derived relations rhs_basis is the equation basis
/// (same order) and rhs_coeff the comparing basis coefficient in D_q^m; for
/// quantum-determinant lifts rhs_basis has order m-1 and rhs_coeff is 1.
struct LinearRelation {
  Decomp coefficients;
  StdExponents rhs_basis;
  QRational rhs_coeff;
};

/// All standard monomials of equal Haar value reachable from e by the
/// segment-swap symmetries: (c4,c5) swap unconditionally; (c2,c3) swap when
/// c4 = c5 = c6 = 0; independent (c2,c3) and (c4,c5) swaps when c1 = 0.
std::set<StdExponents> symmetry_orbit(const StdExponents& e);

/// Haar-state computation context: owns the rewriting cache, the solved
/// tables per order and the on-disk table cache.
class HaarContext {
 public:
  struct Options {
    int max_order = 4;
    std::string cache_dir = ".qhaar";
    bool use_cache = true;
  };

  HaarContext() : HaarContext(Options{}) {}
  explicit HaarContext(Options opts) : opts_(std::move(opts)) {}

  const Options& options() const { return opts_; }
  Reducer& reducer() { return reducer_; }

  /// Decomposition of D_q^m over the order-m basis (the b-vector).
  const Decomp& dq_power_decomposition(int m);

  /// The linear relation derived from an equation basis and a comparing
  /// basis, both of the same order.
  LinearRelation derive_linear_relation(const StdExponents& equation_basis,
                                        const StdExponents& comparing_basis);

  /// h(D_q * lower) = h(lower) expanded over the order-(order(lower)+1)
  /// basis; the inhomogeneous anchor relations of the solver.
  LinearRelation dq_lift_relation(const StdExponents& lower);

  /// Exact linear-system solution of order m (the oracle). Cached per order,
  /// optionally persisted under options().cache_dir.
  const HaarTable& solve_order(int m);

  /// The staged algorithm: closed-form families, one-high-complexity
  /// families, then induction on high-complexity segment count and aek
  /// count. Equal entry-by-entry to solve_order.
  const HaarTable& full_algorithm(int m);

  /// The seven closed forms of the order-m source system. The bfgcdh entry
  /// exists for m >= 2 only.
  std::map<StdExponents, QRational> source_matrix_solution(int m);

  /// h((cdh)^i (ceg)^{m-i}) for 0 <= i <= m (equal to the (bfg)^i family).
  std::vector<QRational> rec_cdh_ceg(int m);

  /// h((cdh)^r (bfg)^s (ceg)^{m-r-s}) keyed by (r, s).
  std::map<std::pair<int, int>, QRational> rec_cdh_bfg_ceg(int m);

  /// Value of any order-m standard monomial from the staged tables; for
  /// monomials outside the basis (all of afh, bdk, ceg present) this runs
  /// the high-complexity rewrite through the afh*bdk*ceg identity.
  QRational standard_monomial_value(const StdExponents& e);

  /// Haar state of a word: zero when the counting matrix is not doubly
  /// stochastic, otherwise the table pairing of its basis decomposition.
  QRational haar(const Word& w);
  QRational haar(const NCPoly& p);

  /// Exact value at q = 1 of the Haar state of p.
  mpq_class weingarten_limit(const NCPoly& p);

 private:
  HaarTable solve_order_impl(int m);
  HaarTable full_algorithm_impl(int m);
  void check_normalization(const HaarTable& table);

  Options opts_;
  Reducer reducer_;
  std::map<int, Decomp> dq_decomp_;
  std::map<int, HaarTable> solver_tables_;
  std::map<int, HaarTable> full_tables_;
};

}  // namespace qhaar
