#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhd/presentation.hpp"
#include "qhd/word.hpp"

namespace qhd::fpgroup {

// Right action of the group on cosets of a subgroup. Column 2*g holds the
// image under generator g+1, column 2*g+1 the image under its inverse.
struct CosetTable {
  size_t ngens = 0;
  std::vector<std::vector<size_t>> rows;
  bool complete = false;  // false = enumeration hit the coset bound
  size_t index = 0;       // meaningful only when complete

  static constexpr size_t undef = (size_t)-1;

  size_t apply(size_t coset, int letter) const;
  size_t apply_word(size_t coset, const Word& w) const;
  // the permutation induced by w on 0..index-1
  std::vector<size_t> permutation(const Word& w) const;
};

// HLT enumeration with lookahead on overflow. The returned table is
// complete iff the enumeration closed within max_cosets live cosets;
// an incomplete table is the bound-exceeded outcome, not an error.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgens,
                           size_t max_cosets);

// Order of the group when enumeration over the trivial subgroup closes;
// nullopt means unknown within the bound.
std::optional<size_t> group_order(const Presentation& p, size_t max_cosets = 100000);

// Recheck a complete table from scratch: total action, all relators fix
// every coset, subgroup generators fix coset 0, action transitive.
bool table_satisfies(const CosetTable& t, const Presentation& p,
                     const std::vector<Word>& subgens);

}  // namespace qhd::fpgroup
