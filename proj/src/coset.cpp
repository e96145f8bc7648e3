#include "qhd/coset.hpp"

#include <deque>
#include <stdexcept>

namespace qhd::fpgroup {

size_t CosetTable::apply(size_t coset, int letter) const {
  size_t col = 2 * ((letter > 0 ? letter : -letter) - 1) + (letter < 0);
  return rows[coset][col];
}

size_t CosetTable::apply_word(size_t coset, const Word& w) const {
  for (int x : w) coset = apply(coset, x);
  return coset;
}

std::vector<size_t> CosetTable::permutation(const Word& w) const {
  std::vector<size_t> out(index);
  for (size_t c = 0; c < index; ++c) out[c] = apply_word(c, w);
  return out;
}

namespace {

constexpr size_t undef = CosetTable::undef;

struct Enumerator {
  size_t ncols;
  size_t max_cosets;
  std::vector<std::vector<size_t>> table;
  std::vector<size_t> rep;  // union-find over coset names
  size_t live = 0;
  bool overflow = false;

  explicit Enumerator(size_t ngens, size_t max) : ncols(2 * ngens), max_cosets(max) {
    new_coset();
  }

  static size_t col(int letter) {
    return 2 * ((letter > 0 ? letter : -letter) - 1) + (letter < 0);
  }
  static size_t inv_col(int letter) { return col(-letter); }

  size_t find(size_t c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  bool alive(size_t c) { return rep[c] == c; }

  size_t new_coset() {
    table.emplace_back(ncols, undef);
    rep.push_back(rep.size());
    ++live;
    return rep.size() - 1;
  }

  size_t get(size_t c, size_t column) {
    size_t e = table[find(c)][column];
    return e == undef ? undef : find(e);
  }

  void set(size_t c, size_t column, size_t d) { table[find(c)][column] = find(d); }

  void coincide(size_t a, size_t b) {
    std::deque<std::pair<size_t, size_t>> q{{a, b}};
    while (!q.empty()) {
      auto [x, y] = q.front();
      q.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep[y] = x;
      --live;
      for (size_t column = 0; column < ncols; ++column) {
        size_t e = table[y][column];
        if (e == undef) continue;
        e = find(e);
        size_t inv = column ^ 1;
        size_t ex = table[x][column] == undef ? undef : find(table[x][column]);
        if (ex == undef) {
          table[x][column] = e;
          size_t back = table[e][inv];
          if (back == undef)
            table[e][inv] = x;
          else
            q.emplace_back(find(back), x);
        } else if (ex != e) {
          q.emplace_back(ex, e);
        }
      }
    }
  }

  // Trace relator/subgroup word w from coset c back to itself. With fill,
  // missing entries spawn new cosets; without, only deductions and
  // coincidences are recorded. Returns false when fill hits the bound.
  bool scan(size_t c, const Word& w, bool fill) {
    size_t f = find(c), b = f;
    size_t i = 0, j = w.size();
    while (true) {
      while (i < j && get(f, col(w[i])) != undef) {
        f = get(f, col(w[i]));
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return true;
      }
      while (j > i && get(b, inv_col(w[j - 1])) != undef) {
        b = get(b, inv_col(w[j - 1]));
        --j;
      }
      if (j == i) {
        if (f != b) coincide(f, b);
        return true;
      }
      if (j == i + 1) {
        set(f, col(w[i]), b);
        set(b, inv_col(w[i]), f);
        return true;
      }
      if (!fill) return true;
      if (live >= max_cosets) {
        overflow = true;
        return false;
      }
      size_t n = new_coset();
      set(f, col(w[i]), n);
      set(n, inv_col(w[i]), f);
    }
  }

  // Renumber live cosets contiguously, preserving order.
  void compress() {
    std::vector<size_t> remap(table.size(), undef);
    size_t next = 0;
    for (size_t c = 0; c < table.size(); ++c)
      if (alive(c)) remap[c] = next++;
    std::vector<std::vector<size_t>> fresh(next, std::vector<size_t>(ncols, undef));
    for (size_t c = 0; c < table.size(); ++c) {
      if (!alive(c)) continue;
      for (size_t column = 0; column < ncols; ++column)
        if (table[c][column] != undef) fresh[remap[c]][column] = remap[find(table[c][column])];
    }
    table = std::move(fresh);
    rep.resize(table.size());
    for (size_t c = 0; c < rep.size(); ++c) rep[c] = c;
  }
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgens,
                           size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("coset_enumerate: max_cosets must be > 0");
  std::vector<Word> relators;
  relators.reserve(p.relators.size());
  for (const Word& r : p.relators) relators.push_back(cyclic_reduce(r));

  Enumerator e(p.ngens(), max_cosets);
  for (const Word& w : subgens) e.scan(0, free_reduce(w), true);

  size_t cur = 0;
  while (cur < e.table.size()) {
    if (!e.alive(cur)) {
      ++cur;
      continue;
    }
    bool stalled = false;
    for (const Word& r : relators) {
      if (!e.alive(cur)) break;
      if (!e.scan(cur, r, true)) {
        stalled = true;
        break;
      }
    }
    if (!stalled && e.alive(cur)) {
      for (size_t column = 0; column < e.ncols && !stalled; ++column) {
        if (!e.alive(cur)) break;
        if (e.get(cur, column) != undef) continue;
        if (e.live >= max_cosets) {
          stalled = true;
          break;
        }
        size_t n = e.new_coset();
        e.set(cur, column, n);
        e.set(n, column ^ 1, cur);
      }
    }
    if (stalled) {
      // lookahead: deduction-only sweep, then reclaim dead rows
      size_t before = e.live;
      for (size_t c = 0; c < e.table.size(); ++c) {
        if (!e.alive(c)) continue;
        for (const Word& r : relators) {
          if (!e.alive(c)) break;
          e.scan(c, r, false);
        }
      }
      if (e.live == before) break;  // no progress: give up
      e.compress();
      cur = 0;  // rescan from the top; closed rows pass instantly
      e.overflow = false;
      continue;
    }
    ++cur;
  }

  CosetTable out;
  out.ngens = p.ngens();
  if (cur >= e.table.size() && !e.overflow) {
    e.compress();
    out.rows = std::move(e.table);
    out.index = out.rows.size();
    out.complete = true;
  } else {
    e.compress();
    out.rows = std::move(e.table);
    out.complete = false;
  }
  return out;
}

std::optional<size_t> group_order(const Presentation& p, size_t max_cosets) {
  CosetTable t = coset_enumerate(p, {}, max_cosets);
  if (!t.complete) return std::nullopt;
  return t.index;
}

bool table_satisfies(const CosetTable& t, const Presentation& p,
                     const std::vector<Word>& subgens) {
  if (!t.complete || t.rows.size() != t.index || t.ngens != p.ngens()) return false;
  for (size_t c = 0; c < t.index; ++c) {
    for (size_t col = 0; col < 2 * t.ngens; ++col) {
      size_t d = t.rows[c][col];
      if (d >= t.index) return false;
      if (t.rows[d][col ^ 1] != c) return false;
    }
    for (const Word& r : p.relators)
      if (t.apply_word(c, r) != c) return false;
  }
  for (const Word& w : subgens)
    if (t.apply_word(0, w) != 0) return false;
  // transitivity from coset 0
  std::vector<char> seen(t.index, 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    size_t c = stack.back();
    stack.pop_back();
    for (size_t col = 0; col < 2 * t.ngens; ++col) {
      size_t d = t.rows[c][col];
      if (!seen[d]) {
        seen[d] = 1;
        ++count;
        stack.push_back(d);
      }
    }
  }
  return count == t.index;
}

}  // namespace qhd::fpgroup
