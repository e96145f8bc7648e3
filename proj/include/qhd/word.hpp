#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhd::fpgroup {

// A word in a free group. Letter k>0 denotes generator k-1, letter -k its
// inverse. The empty vector is the identity.
using Word = std::vector<int>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word free_reduce(Word w);
Word cyclic_reduce(Word w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
// g^-1 * w * g, freely reduced
Word conjugate(const Word& w, const Word& g);
Word power(const Word& w, long k);

// Replace generator i by images[i-1]; result is freely reduced.
Word substitute(const Word& w, const std::vector<Word>& images);

// Lexicographically least cyclic rotation of the cyclic reduction, compared
// against the same for the inverse. Equal keys mean the relators are equal up
// to cyclic rotation and inversion.
Word cyclic_canonical(const Word& w);

// Grammar: product of factors separated by '*'. A factor is a generator name
// or a parenthesized word, optionally followed by '^' and either an integer
// (power) or another factor g (conjugation, meaning g^-1 * w * g). "1" or an
// empty string is the identity.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);
std::string print_word(const Word& w, const std::vector<std::string>& gens);

}  // namespace qhd::fpgroup
