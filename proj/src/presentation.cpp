#include "qhd/presentation.hpp"

#include <cstdlib>

namespace qhd::fpgroup {

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return (int)i + 1;
  return 0;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), std::vector<Int>(p.ngens(), 0));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) {
      size_t i = (x > 0 ? x : -x) - 1;
      m[r][i] += x > 0 ? 1 : -1;
    }
  return m;
}

std::vector<Int> abelian_invariants(const Presentation& p) {
  return cokernel_invariants(relation_matrix(p), p.ngens());
}

Presentation quotient_by_normal_closure(Presentation p, const std::vector<Word>& kill) {
  for (const Word& w : kill) {
    Word r = free_reduce(w);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

Presentation tietze_eliminate(const Presentation& p, const std::string& gen,
                              size_t defining_relator_index) {
  int gi = p.gen_index(gen);
  if (gi == 0) throw NotEliminable("no generator named \"" + gen + "\"");
  if (defining_relator_index >= p.relators.size())
    throw NotEliminable("relator index out of range");
  const Word& r = p.relators[defining_relator_index];

  size_t occurrences = 0, at = 0;
  for (size_t k = 0; k < r.size(); ++k)
    if (std::abs(r[k]) == gi) {
      ++occurrences;
      at = k;
    }
  if (occurrences != 1)
    throw NotEliminable("generator \"" + gen + "\" does not occur exactly once in the relator");

  Word u(r.begin(), r.begin() + at);
  Word v(r.begin() + at + 1, r.end());
  // u * g * v = 1  =>  g = u^-1 v^-1 ; u * g^-1 * v = 1  =>  g = v u
  Word replacement =
      r[at] > 0 ? concat(inverse(u), inverse(v)) : concat(v, u);

  std::vector<Word> images(p.ngens());
  for (size_t i = 0; i < p.ngens(); ++i) images[i] = {(int)i + 1};
  images[gi - 1] = replacement;

  Presentation out;
  for (size_t i = 0; i < p.ngens(); ++i)
    if ((int)i + 1 != gi) out.gens.push_back(p.gens[i]);
  for (size_t k = 0; k < p.relators.size(); ++k) {
    if (k == defining_relator_index) continue;
    Word w = substitute(p.relators[k], images);
    Word shifted;
    for (int x : w) {
      int a = std::abs(x);
      shifted.push_back(x > 0 ? a - (a > gi) : -(a - (a > gi)));
    }
    if (!shifted.empty()) out.relators.push_back(std::move(shifted));
  }
  return out;
}

size_t find_defining_relator(const Presentation& p, const std::string& gen) {
  int gi = p.gen_index(gen);
  if (gi == 0) throw NotEliminable("no generator named \"" + gen + "\"");
  for (size_t i = 0; i < p.relators.size(); ++i) {
    size_t occurrences = 0;
    for (int x : p.relators[i])
      if (std::abs(x) == gi) ++occurrences;
    if (occurrences == 1) return i;
  }
  throw NotEliminable("no relator uses \"" + gen + "\" exactly once");
}

Presentation b23_presentation(int p) {
  if (p < 0) throw std::invalid_argument("b23_presentation: p must be >= 0");
  long q = p + 3;
  Presentation out;
  out.gens = {"a", "l"};
  out.relators.push_back(power({1}, 2 * (q - 1) * q));
  out.relators.push_back(concat(power({2}, 2), power({1}, -3 * (q - 1))));
  out.relators.push_back(concat(Word{2, 1, -2}, power({1}, 2 * q - 1)));
  return out;
}

}  // namespace qhd::fpgroup
