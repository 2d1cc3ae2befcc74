#include "qhaar/word.hpp"

#include <cctype>
#include <sstream>

#include "qhaar/qfield.hpp"

namespace qhaar {

namespace {

constexpr char kAlphabet3[] = "abcdefghk";

int letter_index3(char c) {
  for (int i = 0; i < 9; ++i)
    if (kAlphabet3[i] == c) return i;
  return -1;
}

}  // namespace

Word::Word(int n, std::vector<Generator> letters) : n_(n) {
  codes_.reserve(letters.size());
  for (Generator g : letters) {
    if (g.row < 1 || g.row > n_ || g.col < 1 || g.col > n_)
      throw std::domain_error("Word: generator index out of range");
    codes_.push_back(encode(g));
  }
}

Word Word::operator+(const Word& other) const {
  if (n_ != other.n_) throw std::domain_error("Word: mismatched ambient size");
  Word r = *this;
  r.codes_.insert(r.codes_.end(), other.codes_.begin(), other.codes_.end());
  return r;
}

bool Word::operator<(const Word& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (codes_.size() != other.codes_.size()) return codes_.size() < other.codes_.size();
  return codes_ < other.codes_;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::ostringstream out;
  if (n_ == 3) {
    for (auto c : codes_) out << kAlphabet3[c];
  } else {
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      if (i) out << " ";
      Generator g = letter(i);
      out << "x" << int(g.row) << int(g.col);
    }
  }
  return out.str();
}

Word Word::parse(const std::string& text, int n) {
  Word w(n);
  std::size_t i = 0;
  // Skip leading whitespace to decide the syntax.
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool index_form = text.find('x') != std::string::npos;
  if (index_form) {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != 'x') throw parse_error("expected 'x' at position " + std::to_string(i), i);
      if (i + 2 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text[i + 2])))
        throw parse_error("expected two digits after 'x' at position " + std::to_string(i), i);
      int row = text[i + 1] - '0';
      int col = text[i + 2] - '0';
      if (row < 1 || row > n || col < 1 || col > n)
        throw parse_error("generator index out of range at position " + std::to_string(i), i);
      w.push_back(Generator{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)});
      i += 3;
    }
    return w;
  }
  if (n != 3) throw parse_error("letter syntax is defined for n = 3 only", 0);
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'i' || c == 'j')
      throw parse_error(std::string("letter '") + c + "' is not a generator (position " +
                            std::to_string(i) + ")",
                        i);
    int idx = letter_index3(c);
    if (idx < 0)
      throw parse_error(std::string("unknown letter '") + c + "' at position " + std::to_string(i),
                        i);
    w.push_code(static_cast<std::uint8_t>(idx));
  }
  return w;
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over the code bytes, seeded with n and length.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(w.n()));
  mix(w.size());
  for (auto c : w.codes()) mix(c);
  return h;
}

}  // namespace qhaar
