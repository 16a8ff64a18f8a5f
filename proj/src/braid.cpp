#include "weave/braid.hpp"

#include "weave/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace weave {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("braid needs at least one strand");
  for (int j : letters_) {
    if (j == 0 || std::abs(j) > strands_ - 1)
      throw DomainError("letter " + std::to_string(j) + " out of range for " +
                        std::to_string(strands_) + " strands");
  }
}

BraidWord weaving_word(int p, int n) {
  if (p < 2) throw DomainError("weaving knot W(p,n) needs p >= 2");
  if (n < 1) throw DomainError("weaving knot W(p,n) needs n >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * (p - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < p; ++i) letters.push_back(i % 2 == 1 ? i : -i);
  return BraidWord(p, std::move(letters));
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int j : b.letters()) w += j > 0 ? 1 : -1;
  return w;
}

std::vector<int> strand_permutation(const BraidWord& b) {
  // position[x] = strand currently at position x
  std::vector<int> position(b.strands());
  std::iota(position.begin(), position.end(), 0);
  for (int j : b.letters()) {
    int i = std::abs(j) - 1;
    std::swap(position[i], position[i + 1]);
  }
  std::vector<int> perm(b.strands());
  for (int x = 0; x < b.strands(); ++x) perm[position[x]] = x;
  return perm;
}

int component_count(const BraidWord& b) {
  auto perm = strand_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& j : letters) j = -j;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, int g) {
  if (g == 0 || std::abs(g) > b.strands() - 1)
    throw DomainError("conjugating letter " + std::to_string(g) + " out of range");
  std::vector<int> letters;
  letters.reserve(b.length() + 2);
  letters.push_back(g);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  letters.push_back(-g);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

namespace {

bool parse_int(std::string_view text, std::size_t& pos, int& out) {
  auto begin = text.data() + pos;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), out);
  if (ec != std::errc() || ptr == begin) return false;
  pos += static_cast<std::size_t>(ptr - begin);
  return true;
}

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  int strands = 0;
  if (!parse_int(text, pos, strands)) throw ParseError("expected strand count", pos);
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';'", pos);
  ++pos;

  std::vector<int> letters;
  while (true) {
    skip_ws(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == '+') ++pos;
    const std::size_t letter_pos = pos;
    int j = 0;
    if (!parse_int(text, pos, j)) throw ParseError("expected a signed letter", letter_pos);
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected character", pos);
    if (j == 0 || std::abs(j) > strands - 1)
      throw ParseError("letter " + std::to_string(j) + " out of range for " +
                           std::to_string(strands) + " strands",
                       letter_pos);
    letters.push_back(j);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands() << ';';
  for (int j : b.letters()) out << ' ' << j;
  return out.str();
}

}  // namespace weave
