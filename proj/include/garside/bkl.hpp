#ifndef GARSIDE_BKL_HPP
#define GARSIDE_BKL_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/engine.hpp"
#include "garside/ncpartition.hpp"

namespace garside {

/// The band-generator instance on n strands: simples are the non-crossing
/// partitions of the n circle points, atoms the two-element-part partitions
/// a(i,j), delta the one-part partition.  The partial product is detected
/// through the symmetric group: lambda.mu is defined when reflection
/// lengths add and the composed permutation is again the image of a
/// non-crossing partition.
class BklInstance : public Instance {
 public:
  /// Interns all Catalan(n) simples.  Throws ResourceLimitError when n
  /// exceeds max_degree (default 12).
  explicit BklInstance(int n, int max_degree = 12);

  int strands() const { return n_; }
  int num_simples() const { return static_cast<int>(simples_.size()); }

  SimpleId unit() const override { return unit_; }
  const std::vector<SimpleId>& atoms() const override { return atoms_; }
  std::optional<SimpleId> product(SimpleId a, SimpleId b) const override;
  int length(SimpleId a) const override;
  std::optional<SimpleId> delta() const override { return delta_; }
  std::optional<SimpleId> complement(SimpleId a) const override;
  std::optional<bool> left_divides_fast(SimpleId a, SimpleId b) const override;
  std::optional<bool> right_divides_fast(SimpleId a, SimpleId b) const override;
  std::string describe(SimpleId a) const override;
  std::string name() const override;

  const NcPartition& partition(SimpleId a) const { return simples_[a]; }
  const Permutation& perm(SimpleId a) const { return phis_[a]; }

  /// Id of an interned partition.
  SimpleId id_of(const NcPartition& p) const;

  /// Atom a(i, j), 0 <= i < j < n.
  SimpleId atom(int i, int j) const;

  /// The partial product on partitions (the partition-level view of
  /// product()).  Throws std::invalid_argument on size mismatch with this
  /// instance; an undefined product is nullopt, not an error.
  std::optional<NcPartition> try_product(const NcPartition& a,
                                         const NcPartition& b) const;

  /// The simple whose image permutation is p, if any.
  std::optional<SimpleId> simple_from_perm(const Permutation& p) const;

 private:
  int n_;
  std::vector<NcPartition> simples_;  // id -> partition
  std::vector<Permutation> phis_;     // id -> phi(partition)
  std::unordered_map<NcPartition, SimpleId, NcPartitionHash> index_;
  std::unordered_map<Permutation, SimpleId, PermutationHash> by_perm_;
  std::vector<SimpleId> atoms_;
  std::vector<SimpleId> kreweras_;      // id -> right complement
  std::vector<SimpleId> kreweras_inv_;  // inverse of the above
  SimpleId unit_ = 0;
  SimpleId delta_ = 0;
};

/// Conjugate by the k-th power of delta: x -> delta^{-k} x delta^{k}, which
/// rotates every factor's indices by -k.
NormalForm conj_by_delta(const NormalForm& nf, int k);

/// Atoms of the centralizer of delta^{n/d} (d a divisor of n): the fixed
/// atoms of the rotation action on the band generators.  Every returned
/// partition satisfies rotated(n/d) == itself.
std::vector<NcPartition> centralizer_atoms(const BklInstance& inst, int d);

/// A letter of a signed band-generator word: the atom a(i, j) raised to
/// exp (exp any nonzero integer).
struct SignedBandAtom {
  int i;
  int j;
  int exp;
};

/// A letter of a signed Artin-generator word: sigma_index (1-based) to the
/// power exp in {-1, +1} after expansion.
struct SignedArtinGen {
  int index;
  int exp;
};

/// Rewrite a band-generator word over the usual Artin generators:
/// a(i, j) -> s_{i+1} ... s_j s_{j-1}^{-1} ... s_{i+1}^{-1}, with
/// s_k = a(k-1, k).  Inverse letters reverse and negate the expansion.
std::vector<SignedArtinGen> to_artin(int n,
                                     const std::vector<SignedBandAtom>& word);

}  // namespace garside

#endif
