#ifndef GARSIDE_ORACLE_HPP
#define GARSIDE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "garside/ncpartition.hpp"

namespace garside {
namespace oracle {

/// An atom a(i, j) with i < j, identified by its index pair.
using Atom = std::pair<int, int>;

/// A positive word over atoms.
using Word = std::vector<Atom>;

/// The defining band-generator relations on n strands, usable as two-way
/// rewrite rules between adjacent letters:
///   a(i,j) a(k,l) = a(k,l) a(i,j)      when {{i,j},{k,l}} is non-crossing,
///   a(i,j) a(j,k) = a(j,k) a(i,k) = a(i,k) a(i,j)   for i < j < k.
/// All rules preserve length, so equivalence at a fixed length is decidable
/// by exhaustive closure.
class RelationSet {
 public:
  explicit RelationSet(int n);

  int strands() const { return n_; }

  /// Words reachable from w by one rule application.
  std::vector<Word> neighbors(const Word& w) const;

  /// Exact decision: true iff w1 and w2 have equal length and the closure
  /// of w1 under the rules reaches w2.  Throws ResourceLimitError if more
  /// than `limit` words are expanded before the closure completes.
  bool equivalent(const Word& w1, const Word& w2, size_t limit = 2000000) const;

  /// The full equivalence class of w (bounded by `limit` expansions).
  std::set<Word> word_class(const Word& w, size_t limit = 2000000) const;

 private:
  int n_;
  // (letter, letter) -> replacements for that adjacent pair
  std::map<std::pair<Atom, Atom>, std::vector<std::pair<Atom, Atom>>> rules_;
};

/// The canonical positive word for the canonical factor of a partition:
/// per-part ascending chains a(z1,z2) a(z2,z3) ..., parts in ascending
/// order of minimum.
Word canonical_word(const NcPartition& p);

/// Equivalence classes of prefixes of words equal to the full twist word
/// a(0,1) a(1,2) ... a(n-2,n-1); these are exactly the simple elements, so
/// the count is the n-th Catalan number.  Each class is returned as its
/// lexicographically least member.  n <= 5; `limit` bounds each closure.
std::vector<Word> enumerate_simples_bf(int n, size_t limit = 2000000);

}  // namespace oracle
}  // namespace garside

#endif
