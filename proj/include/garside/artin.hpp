#ifndef GARSIDE_ARTIN_HPP
#define GARSIDE_ARTIN_HPP

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/engine.hpp"
#include "garside/permutation.hpp"

namespace garside {

/// The classical Artin-monoid instance: simples are the permutations of n
/// points (the reduced braids), atoms the adjacent transpositions, length
/// the inversion count, delta the order-reversing permutation.  The product
/// p.q is defined when inversion counts add.
///
/// Simples are interned lazily: n! grows fast and most runs touch a small
/// fraction of them.
class ArtinInstance : public Instance {
 public:
  explicit ArtinInstance(int n, int max_degree = 8);

  int strands() const { return n_; }

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

  Permutation perm(SimpleId a) const;

  /// Id of sigma_k = a(k-1, k), 1 <= k <= n-1.
  SimpleId sigma(int k) const;

  /// Interns p if needed and returns its id.
  SimpleId id_of(const Permutation& p) const;

  /// The partial product on permutations: defined iff Coxeter lengths add.
  std::optional<Permutation> try_product(const Permutation& p,
                                         const Permutation& q) const;

  /// Number of simples interned so far (grows on demand).
  int num_interned() const;

 private:
  int n_;
  mutable std::mutex mu_;
  mutable std::vector<Permutation> simples_;
  mutable std::unordered_map<Permutation, SimpleId, PermutationHash> index_;
  std::vector<SimpleId> atoms_;
  SimpleId unit_ = 0;
  SimpleId delta_ = 0;
};

}  // namespace garside

#endif
