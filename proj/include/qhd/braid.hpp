#pragma once

#include <string>
#include <vector>

#include "qhd/word.hpp"

namespace qhd::zvk {

using fpgroup::Word;

// A braid on n strands. Letter k>0 is the elementary crossing s_k of
// strands k and k+1, letter -k its inverse; 1 <= |k| <= strands-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

struct BadBraid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Same grammar as parse_word over the names s1..s(n-1). "1" or an empty
// string is the trivial braid.
BraidWord parse_braid(const std::string& text, int strands);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& b);

// Images of the free generators x1..xn under the Artin action:
//   s_i: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,
// extended to braid words by act(uv) = act(v) . act(u).
std::vector<Word> artin_images(const BraidWord& b);

// w rewritten through the Artin action of b, freely reduced.
Word artin_act(const BraidWord& b, const Word& w);

}  // namespace qhd::zvk
