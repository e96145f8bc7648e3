#pragma once

#include <string>
#include <vector>

#include "qhd/smith.hpp"
#include "qhd/word.hpp"

namespace qhd::fpgroup {

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;  // freely reduced, nonempty

  size_t ngens() const { return gens.size(); }
  int gen_index(const std::string& name) const;  // 1-based, 0 if absent
};

struct NotEliminable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

// Invariant factors of the abelianization: entries > 1 in divisibility
// order, then one 0 per infinite cyclic factor.
std::vector<Int> abelian_invariants(const Presentation& p);

// Appends the freely reduced, nonempty kill words as relators.
Presentation quotient_by_normal_closure(Presentation p, const std::vector<Word>& kill);

// The named relator must contain gen exactly once, with exponent +-1. The
// generator is removed, every other relator rewritten and freely reduced;
// empty rewrites are dropped and letters above gen shift down.
Presentation tietze_eliminate(const Presentation& p, const std::string& gen,
                              size_t defining_relator_index);

// First relator usable by tietze_eliminate for gen; NotEliminable if none.
size_t find_defining_relator(const Presentation& p, const std::string& gen);

// <a, l | a^(2(q-1)q), l^2 a^(-3(q-1)), l a l^-1 a^(2q-1)> with q = p+3.
Presentation b23_presentation(int p);

}  // namespace qhd::fpgroup
