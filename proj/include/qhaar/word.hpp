#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhaar {

/// One generator x_{row,col} of O(SL_q(n)), indices 1-based.
struct Generator {
  std::uint8_t row = 1;
  std::uint8_t col = 1;

  friend bool operator==(Generator a, Generator b) { return a.row == b.row && a.col == b.col; }
  friend bool operator!=(Generator a, Generator b) { return !(a == b); }
};

/// A monomial: ordered sequence of generators sharing one ambient size n.
/// For n = 3 the display alphabet is a..h,k in row-major order (i and j are
/// skipped); every n accepts the index form "x{i}{j}".
class Word {
 public:
  explicit Word(int n = 3) : n_(n) {}
  Word(int n, std::vector<Generator> letters);

  int n() const { return n_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }

  Generator letter(std::size_t i) const {
    return Generator{static_cast<std::uint8_t>(codes_[i] / n_ + 1),
                     static_cast<std::uint8_t>(codes_[i] % n_ + 1)};
  }
  std::uint8_t code(std::size_t i) const { return codes_[i]; }
  const std::vector<std::uint8_t>& codes() const { return codes_; }

  void push_back(Generator g) { codes_.push_back(encode(g)); }
  void push_code(std::uint8_t c) { codes_.push_back(c); }
  void pop_back() { codes_.pop_back(); }
  void set_code(std::size_t i, std::uint8_t c) { codes_[i] = c; }

  Word operator+(const Word& other) const;  // concatenation

  std::uint8_t encode(Generator g) const {
    return static_cast<std::uint8_t>((g.row - 1) * n_ + (g.col - 1));
  }

  bool operator==(const Word& other) const { return n_ == other.n_ && codes_ == other.codes_; }
  bool operator!=(const Word& other) const { return !(*this == other); }
  bool operator<(const Word& other) const;

  std::string to_string() const;

  /// Parse a monomial as a compact letter string ("cegafh", n = 3 only, the
  /// letters i and j are rejected) or whitespace-separated index tokens
  /// ("x13 x21 x32"). Throws parse_error with the offending position.
  static Word parse(const std::string& text, int n = 3);

 private:
  int n_;
  std::vector<std::uint8_t> codes_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace qhaar
