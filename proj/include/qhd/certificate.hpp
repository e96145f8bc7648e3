#pragma once

#include <optional>

#include "qhd/presentation.hpp"
#include "qhd/word.hpp"

namespace qhd::fpgroup {

// A proof that a word equals the identity: a product of conjugated relators
// (or their inverses) that freely reduces to the target. Checking is sound
// regardless of where the certificate came from.
struct RelatorCertificate {
  struct Factor {
    size_t relator;   // index into Presentation::relators
    int sign;         // +1 or -1
    Word conjugator;  // c contributes c^-1 * r^sign * c
  };
  std::vector<Factor> factors;
};

bool check_relator_certificate(const Presentation& p, const Word& target,
                               const RelatorCertificate& cert);

struct CertSearchOptions {
  size_t max_len = 48;          // discard intermediate words longer than this
  size_t max_states = 100000;   // give up after expanding this many words
};

// Best-first search for a certificate that target = 1 in the group. Explores
// freely reduced words reachable by splicing a conjugated relator into the
// current word, shortest first. Returns nothing when the bounds run out;
// a returned certificate always passes check_relator_certificate.
std::optional<RelatorCertificate> search_relator_certificate(
    const Presentation& p, const Word& target, const CertSearchOptions& opt = {});

}  // namespace qhd::fpgroup
