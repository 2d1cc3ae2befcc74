#include "qhaar/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qhaar {

NCPoly NCPoly::monomial(const Word& w, QRational coeff) {
  NCPoly p(w.n());
  p.add_term(w, coeff);
  return p;
}

QRational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const QRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
  NCPoly r = *this;
  for (const auto& [w, c] : other.terms_) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const {
  NCPoly r = *this;
  for (const auto& [w, c] : other.terms_) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::operator*(const QRational& scalar) const {
  NCPoly r(n_);
  if (scalar.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.add_term(w, c * scalar);
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << w.to_string();
  }
  return out.str();
}

QRational TensorPoly::coeff(const Word& left, const Word& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? QRational(0) : it->second;
}

void TensorPoly::add_term(const Word& left, const Word& right, const QRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator*(const TensorPoly& other) const {
  TensorPoly r(n_);
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : other.terms_)
      r.add_term(pa.first + pb.first, pa.second + pb.second, ca * cb);
  return r;
}

bool satisfies_order_restriction(const Word& left, const Word& right) {
  if (left.size() != right.size()) return false;
  for (std::size_t l = 0; l < left.size(); ++l)
    if (left.letter(l).col != right.letter(l).row) return false;
  return true;
}

std::vector<std::pair<Word, QRational>> relation_swap(int n, Generator g1, Generator g2) {
  std::vector<std::pair<Word, QRational>> out;
  Word swapped(n, {g2, g1});
  if (g1 == g2) {
    out.emplace_back(swapped, QRational(1));
    return out;
  }
  if (g1.row == g2.row) {
    out.emplace_back(swapped, QRational::q_pow(g1.col < g2.col ? 1 : -1));
    return out;
  }
  if (g1.col == g2.col) {
    out.emplace_back(swapped, QRational::q_pow(g1.row < g2.row ? 1 : -1));
    return out;
  }
  if ((g1.row < g2.row) != (g1.col < g2.col)) {
    out.emplace_back(swapped, QRational(1));
    return out;
  }
  QRational qm = QRational::q() - QRational::q_pow(-1);
  out.emplace_back(swapped, QRational(1));
  if (g1.row < g2.row) {
    out.emplace_back(Word(n, {Generator{g1.row, g2.col}, Generator{g2.row, g1.col}}), qm);
  } else {
    out.emplace_back(Word(n, {Generator{g2.row, g1.col}, Generator{g1.row, g2.col}}), -qm);
  }
  return out;
}

NCPoly multiply(const NCPoly& p, const NCPoly& r) {
  if (p.n() != r.n()) throw std::domain_error("multiply: mismatched ambient size");
  NCPoly out(p.n());
  for (const auto& [wp, cp] : p.terms())
    for (const auto& [wr, cr] : r.terms()) out.add_term(wp + wr, cp * cr);
  return out;
}

NCPoly quantum_determinant(int n) {
  if (n < 1) throw std::domain_error("quantum_determinant: n must be positive");
  NCPoly out(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Word w(n);
    for (int i = 0; i < n; ++i)
      w.push_back(Generator{static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(perm[i])});
    QRational c = QRational::q_pow(inv);
    out.add_term(w, inv % 2 ? -c : c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void comultiply_visit(const Word& w, const PrunePredicate& prune,
                      const std::function<void(const Word&, const Word&)>& visit) {
  const int n = w.n();
  const std::size_t len = w.size();
  Word left(n), right(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      visit(left, right);
      return;
    }
    Generator g = w.letter(pos);
    for (int k = 1; k <= n; ++k) {
      left.push_back(Generator{g.row, static_cast<std::uint8_t>(k)});
      if (!prune || prune(left)) {
        right.push_back(Generator{static_cast<std::uint8_t>(k), g.col});
        rec(pos + 1);
        right.pop_back();
      }
      left.pop_back();
    }
  };
  rec(0);
}

TensorPoly comultiply(const Word& w, const PrunePredicate& prune) {
  TensorPoly out(w.n());
  comultiply_visit(w, prune,
                   [&out](const Word& l, const Word& r) { out.add_term(l, r, QRational(1)); });
  return out;
}

std::pair<QRational, Word> eta(const Word& w) {
  int n = w.n();
  long exponent = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Generator g = w.letter(i);
    exponent += 2 * g.row + 2 * g.col - 2 * n - 2;
  }
  return {QRational::q_pow(static_cast<int>(exponent)), w};
}

Word gamma(const Word& w) {
  Word r(w.n());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Generator g = w.letter(i);
    r.push_back(Generator{g.col, g.row});
  }
  return r;
}

Word omega(const Word& w) {
  const int n = w.n();
  Word r(n);
  for (std::size_t i = w.size(); i-- > 0;) {
    Generator g = w.letter(i);
    r.push_back(Generator{static_cast<std::uint8_t>(n + 1 - g.row),
                          static_cast<std::uint8_t>(n + 1 - g.col)});
  }
  return r;
}

NCPoly parse_combination(const std::string& text) {
  NCPoly acc(3);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("expected an integer at position " + std::to_string(i), i);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip_space();
  while (i < text.size()) {
    QRational coeff(1);
    skip_space();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') coeff = -coeff;
      ++i;
    }
    Word word(3);
    bool saw_factor = false;
    for (;;) {
      skip_space();
      if (i >= text.size()) break;
      char c = text[i];
      if (c == '*') {
        ++i;
        continue;
      }
      if (c == '+' || c == '-') break;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= QRational(parse_int());
        saw_factor = true;
      } else if (c == 'q') {
        ++i;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(parse_int());
        }
        coeff *= QRational::q_pow(e);
        saw_factor = true;
      } else if (c == 'x' || (c >= 'a' && c <= 'k' && c != 'i' && c != 'j')) {
        std::size_t start = i;
        if (c == 'x') {
          while (i < text.size() &&
                 (text[i] == 'x' || std::isdigit(static_cast<unsigned char>(text[i]))))
            ++i;
        } else {
          while (i < text.size() && text[i] >= 'a' && text[i] <= 'k') ++i;
        }
        word = word + Word::parse(text.substr(start, i - start));
        saw_factor = true;
      } else {
        throw parse_error(
            std::string("unexpected character '") + c + "' at position " + std::to_string(i), i);
      }
    }
    if (!saw_factor) throw parse_error("empty term at position " + std::to_string(i), i);
    acc.add_term(word, coeff);
    skip_space();
  }
  return acc;
}

NCPoly quantum_minor(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::domain_error("quantum_minor: indices must be in [1,3]");
  std::uint8_t rows[2], cols[2];
  int ri = 0, ci = 0;
  for (int r = 1; r <= 3; ++r)
    if (r != i) rows[ri++] = static_cast<std::uint8_t>(r);
  for (int c = 1; c <= 3; ++c)
    if (c != j) cols[ci++] = static_cast<std::uint8_t>(c);
  NCPoly out(3);
  out.add_term(Word(3, {Generator{rows[0], cols[0]}, Generator{rows[1], cols[1]}}), QRational(1));
  out.add_term(Word(3, {Generator{rows[0], cols[1]}, Generator{rows[1], cols[0]}}),
               -QRational::q());
  return out;
}

}  // namespace qhaar
