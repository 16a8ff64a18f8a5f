#pragma once

// Braid words and the combinatorics of their closures.

#include <string>
#include <string_view>
#include <vector>

namespace weave {

// Letter j > 0 is sigma_j, j < 0 is sigma_|j|^-1; 1 <= |j| <= strands - 1.
class BraidWord {
public:
  // Throws DomainError if strands < 1 or any letter is out of range.
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<int> letters_;
};

// (s1 s2^-1 s3 s4^-1 ... s_{p-1}^{+-1})^n on p strands.
BraidWord weaving_word(int p, int n);

int writhe(const BraidWord& b);

// Strand permutation of the braid: perm[i] is where strand i ends up.
std::vector<int> strand_permutation(const BraidWord& b);
// Number of closure components (cycles of the strand permutation).
int component_count(const BraidWord& b);

// Every letter inverted; the closure is the mirror image.
BraidWord mirror(const BraidWord& b);

// Markov move M1: g b g^-1 for a single generator letter g.
BraidWord conjugate(const BraidWord& b, int g);
// Markov move M2: b sigma_k^{+-1} on k + 1 strands; sign must be +1 or -1.
BraidWord stabilize(const BraidWord& b, int sign);

// "k; j1 j2 ... jm". Throws ParseError or DomainError.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

}  // namespace weave
