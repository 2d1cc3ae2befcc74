#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhaar/haar.hpp"

namespace qhaar::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Reference values for the published tables of orders 1..3, keyed by
/// exponents. Order 3 includes the one standard monomial outside the basis
/// (afh*bdk*ceg); two order-3 basis entries have no published closed form
/// and are absent here.
const std::vector<std::pair<StdExponents, QRational>>& golden_table(int m);

/// The published rewriting identities, grouped as the eight equations:
/// three segment-swap groups of three lines each, three single-line swap
/// groups, and the two triple identities.
struct SegmentIdentity {
  std::string name;
  std::vector<std::pair<std::string, Decomp>> lines;  // lhs word -> decomposition
};
const std::vector<SegmentIdentity>& segment_identities();

/// Deterministic sample of balanced words (shuffled standard monomials) of
/// order <= max_order.
std::vector<Word> random_balanced_words(int count, int max_order, unsigned seed);

Report verify_tables(HaarContext& cx, int max_order = 3);
Report verify_appendix_identities(HaarContext& cx);
Report verify_symmetry(HaarContext& cx, int random_words = 200, unsigned seed = 20240901);
Report verify_weingarten(HaarContext& cx);
Report verify_all(HaarContext& cx);

}  // namespace qhaar::verify
