#include "qhd/certificate.hpp"

#include <map>
#include <queue>

namespace qhd::fpgroup {

bool check_relator_certificate(const Presentation& p, const Word& target,
                               const RelatorCertificate& cert) {
  Word product;
  for (const auto& f : cert.factors) {
    if (f.relator >= p.relators.size()) return false;
    if (f.sign != 1 && f.sign != -1) return false;
    Word r = f.sign == 1 ? p.relators[f.relator] : inverse(p.relators[f.relator]);
    product = concat(product, conjugate(r, f.conjugator));
  }
  return product == free_reduce(target);
}

std::optional<RelatorCertificate> search_relator_certificate(
    const Presentation& p, const Word& target, const CertSearchOptions& opt) {
  Word start = free_reduce(target);
  if (start.empty()) return RelatorCertificate{};

  struct Node {
    Word word;
    size_t parent;
    RelatorCertificate::Factor factor;
  };
  std::vector<Node> nodes;
  std::map<Word, size_t> seen;
  // (length, node index), shortest first
  std::priority_queue<std::pair<size_t, size_t>, std::vector<std::pair<size_t, size_t>>,
                      std::greater<>>
      frontier;

  nodes.push_back({start, SIZE_MAX, {}});
  seen[start] = 0;
  frontier.push({start.size(), 0});

  size_t expanded = 0;
  while (!frontier.empty() && expanded < opt.max_states) {
    auto [len, idx] = frontier.top();
    frontier.pop();
    Word w = nodes[idx].word;  // copy: nodes may reallocate below
    if (w.empty()) {
      RelatorCertificate cert;
      for (size_t at = idx; nodes[at].parent != SIZE_MAX; at = nodes[at].parent)
        cert.factors.push_back(nodes[at].factor);
      std::reverse(cert.factors.begin(), cert.factors.end());
      return cert;
    }
    ++expanded;

    for (size_t sp = 0; sp <= w.size(); ++sp) {
      Word a(w.begin(), w.begin() + sp);
      Word b(w.begin() + sp, w.end());
      Word a_inv = inverse(a);
      for (size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        if (r.empty()) continue;
        for (size_t s = 0; s < r.size(); ++s) {
          Word rot(r.begin() + s, r.end());
          rot.insert(rot.end(), r.begin(), r.begin() + s);
          Word u(r.begin(), r.begin() + s);
          for (int eps : {1, -1}) {
            Word next = concat(concat(a, eps == 1 ? rot : inverse(rot)), b);
            if (next.size() > opt.max_len) continue;
            if (seen.count(next)) continue;
            RelatorCertificate::Factor f{ri, -eps, concat(u, a_inv)};
            seen[next] = nodes.size();
            frontier.push({next.size(), nodes.size()});
            nodes.push_back({std::move(next), idx, std::move(f)});
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace qhd::fpgroup
