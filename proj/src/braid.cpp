#include "qhd/braid.hpp"

#include <stdexcept>

namespace qhd::zvk {

namespace {

void check_strands(int strands) {
  if (strands < 1) throw BadBraid("braid needs at least one strand");
}

void check_letters(const BraidWord& b) {
  for (int l : b.letters) {
    int k = l > 0 ? l : -l;
    if (k < 1 || k >= b.strands) throw BadBraid("crossing index out of range");
  }
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  check_strands(strands);
  std::vector<std::string> names;
  for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
  BraidWord b;
  b.strands = strands;
  b.letters = fpgroup::parse_word(text, names);
  return b;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw BadBraid("strand counts differ");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord r;
  r.strands = b.strands;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

std::vector<Word> artin_images(const BraidWord& b) {
  check_strands(b.strands);
  check_letters(b);
  int n = b.strands;
  std::vector<Word> images(n);
  for (int i = 0; i < n; ++i) images[i] = Word{i + 1};
  // act(l1 ... lm) = act(lm) . ... . act(l1): push each crossing through the
  // accumulated images in order.
  for (int l : b.letters) {
    int k = l > 0 ? l : -l;
    std::vector<Word> step(n);
    for (int i = 0; i < n; ++i) step[i] = Word{i + 1};
    if (l > 0) {
      step[k - 1] = Word{k, k + 1, -k};
      step[k] = Word{k};
    } else {
      step[k - 1] = Word{k + 1};
      step[k] = Word{-(k + 1), k, k + 1};
    }
    for (int i = 0; i < n; ++i) images[i] = fpgroup::substitute(images[i], step);
  }
  return images;
}

Word artin_act(const BraidWord& b, const Word& w) {
  for (int l : w) {
    int k = l > 0 ? l : -l;
    if (k > b.strands) throw BadBraid("word letter beyond strand count");
  }
  return fpgroup::substitute(w, artin_images(b));
}

}  // namespace qhd::zvk
