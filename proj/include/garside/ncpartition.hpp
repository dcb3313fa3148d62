#ifndef GARSIDE_NCPARTITION_HPP
#define GARSIDE_NCPARTITION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "garside/permutation.hpp"

namespace garside {

/// A non-crossing partition of n points in circular order.
///
/// Indices 0,...,n-1 label the points clockwise.  Two parts cross when some
/// a < b < c < d has a, c in one part and b, d in the other; since the
/// points sit on a circle this chord test is the whole non-crossing
/// condition.  Parts are stored ascending and ordered by smallest element,
/// so equal partitions compare equal structurally.
class NcPartition {
 public:
  /// Finest partition: n singletons.
  static NcPartition singletons(int n);

  /// Coarsest partition: one part {0,...,n-1}.
  static NcPartition full(int n);

  /// From explicit parts.  Missing indices become singleton parts (the
  /// customary shorthand).  Throws std::invalid_argument if parts overlap,
  /// contain out-of-range indices, or cross.
  static NcPartition make(int n, std::vector<std::vector<int>> parts);

  /// True iff the given set partition of {0,...,n-1} is non-crossing.
  /// Unlike make(), requires parts to cover every index; throws
  /// std::invalid_argument when they are not a partition at all.
  static bool is_noncrossing(int n, const std::vector<std::vector<int>>& parts);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  /// n minus the number of parts; the length of the canonical factor.
  int length() const { return n_ - num_parts(); }

  /// True iff every part of *this is contained in a part of coarser.
  bool refines(const NcPartition& coarser) const;

  /// The image permutation: on each part z_1 < ... < z_k, the cycle
  /// (z_1 z_2)(z_2 z_3)...(z_{k-1} z_k) composed left to right, which sends
  /// z_j to z_{j-1 (mod k)}.
  Permutation phi() const;

  /// Partial inverse of phi: the partition lambda with phi(lambda) == p, if
  /// one exists (the orbit partition must be non-crossing and induce p with
  /// the canonical cycle direction).
  static std::optional<NcPartition> from_perm(const Permutation& p);

  /// Every index shifted by k mod n.  Rotation preserves circular order, so
  /// the result is again non-crossing.
  NcPartition rotated(int k) const;

  /// Part of this partition containing index i.
  const std::vector<int>& part_of(int i) const;

  /// Index of the part containing i, in canonical part order.
  int part_index(int i) const { return owner_[i]; }

  std::string str() const;

  /// Parses "{0 1 3}{2}{4 5}"; singleton parts may be omitted.
  static NcPartition parse(const std::string& text, int n);

  bool operator==(const NcPartition& other) const = default;

  size_t hash() const;

 private:
  NcPartition(int n, std::vector<std::vector<int>> parts);

  int n_ = 0;
  std::vector<std::vector<int>> parts_;
  std::vector<int> owner_;  // index -> position of its part in parts_
};

/// Lattice meet: the common refinement (pairwise part intersections).
NcPartition meet(const NcPartition& a, const NcPartition& b);

/// Lattice join: the finest non-crossing partition coarser than both.
/// Computed as the common coarsening followed by merging crossing parts
/// until none remain.
NcPartition join(const NcPartition& a, const NcPartition& b);

/// "nu cut at nu_prime": rotate the traversal of nu so it starts inside
/// nu_prime, then break it before each element of nu_prime.  The result
/// does not depend on which element of nu_prime starts the traversal.
/// Throws std::invalid_argument unless nu_prime is a non-empty subset of nu.
std::vector<std::vector<int>> cut(const std::vector<int>& nu,
                                  const std::vector<int>& nu_prime);

/// As cut(), with the traversal explicitly started at `start` (an element
/// of nu_prime).  Exposed so the rotation independence can be tested.
std::vector<std::vector<int>> cut_from(const std::vector<int>& nu,
                                       const std::vector<int>& nu_prime,
                                       int start);

/// The unique non-crossing partition c with
///   compose(fine.phi(), c.phi()) == coarse.phi()
/// and length(fine) + length(c) == length(coarse), built by recursively
/// cutting each part of coarse at the parts of fine it contains.
/// Requires fine.refines(coarse).
NcPartition rel_complement(const NcPartition& fine, const NcPartition& coarse);

/// The Kreweras complement: rel_complement(lambda, full).
NcPartition kreweras(const NcPartition& lambda);

/// All non-crossing partitions of n points, deduplicated, sorted by
/// (length, parts).  Count equals the n-th Catalan number.  Throws
/// ResourceLimitError when n exceeds max_degree (default 12).
std::vector<NcPartition> enumerate_noncrossing(int n, int max_degree = 12);

struct NcPartitionHash {
  size_t operator()(const NcPartition& p) const { return p.hash(); }
};

}  // namespace garside

#endif
