#include "qhd/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qhd::fpgroup {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t i = 0, j = w.size();
  while (j >= i + 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(std::move(out));
}

Word conjugate(const Word& w, const Word& g) {
  return concat(concat(inverse(g), w), g);
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  unsigned long n = k < 0 ? -(unsigned long)k : (unsigned long)k;
  Word out;
  for (unsigned long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int x : w) {
    size_t i = (x > 0 ? x : -x) - 1;
    if (i >= images.size()) throw std::out_of_range("substitute: letter out of range");
    Word piece = x > 0 ? images[i] : inverse(images[i]);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(std::move(out));
}

static Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word rot = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Word cyclic_canonical(const Word& w) {
  Word c = cyclic_reduce(w);
  Word a = least_rotation(c);
  Word b = least_rotation(inverse(c));
  return a < b ? a : b;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::map<std::string, int>& index;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  bool at_name_char() {
    if (pos >= s.size()) return false;
    char c = s[pos];
    return std::isalnum((unsigned char)c) || c == '_';
  }

  std::string name() {
    skip_ws();
    size_t start = pos;
    while (at_name_char()) ++pos;
    if (pos == start) fail("expected generator name");
    return s.substr(start, pos - start);
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits) fail("expected integer exponent");
    return std::stol(s.substr(start, pos - start));
  }

  bool int_ahead() {
    size_t p = pos;
    while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    return p < s.size() && std::isdigit((unsigned char)s[p]);
  }

  Word atom() {
    skip_ws();
    if (eat('(')) {
      Word w = product();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    std::string n = name();
    if (n == "1") return {};
    auto it = index.find(n);
    if (it == index.end()) fail("unknown generator \"" + n + "\"");
    return {it->second};
  }

  Word factor() {
    Word w = atom();
    while (eat('^')) {
      if (int_ahead())
        w = power(w, integer());
      else
        w = conjugate(w, atom());
    }
    return w;
  }

  Word product() {
    Word w = factor();
    skip_ws();
    while (eat('*')) {
      w = concat(w, factor());
      skip_ws();
    }
    return w;
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < gens.size(); ++i) index[gens[i]] = (int)i + 1;
  Parser p{text, 0, index};
  p.skip_ws();
  if (p.pos == text.size()) return {};
  Word w = p.product();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return free_reduce(std::move(w));
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = (long)(j - i);
    size_t gi = (w[i] > 0 ? w[i] : -w[i]) - 1;
    if (gi >= gens.size()) throw std::out_of_range("print_word: letter out of range");
    if (!out.empty()) out += "*";
    out += gens[gi];
    long exp = w[i] > 0 ? run : -run;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace qhd::fpgroup
