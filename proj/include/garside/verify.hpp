#ifndef GARSIDE_VERIFY_HPP
#define GARSIDE_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace garside {

struct CheckLine {
  bool ok;
  std::string text;
};

struct VerifyReport {
  std::vector<CheckLine> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Compares the engine against the presentation oracle on n strands:
///   - brute-force simple enumeration vs the Catalan count (n <= 5),
///   - word equivalence vs normal-form equality for every positive atom
///     word of length <= max_len (whole word space, both directions),
///   - the partial-product criterion vs presentation rewriting over all
///     simple pairs.
/// `limit` bounds each breadth-first closure.
VerifyReport verify_against_oracle(int n, int max_len, size_t limit = 2000000);

}  // namespace garside

#endif
