#ifndef GARSIDE_PERMUTATION_HPP
#define GARSIDE_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace garside {

/// A permutation of {0, ..., n-1} in one-line form.  Immutable after
/// construction; all operations are pure.
///
/// Products are read left to right: compose(p, q) applies p first, then q.
/// Every cycle-direction convention downstream depends on this choice.
class Permutation {
 public:
  /// Identity on n points.
  explicit Permutation(int n);

  /// From one-line form: image[i] is where point i goes.  Throws
  /// std::invalid_argument unless image is a bijection of {0,...,n-1}.
  static Permutation from_one_line(std::vector<int> image);

  /// The transposition (a b) on n points.
  static Permutation transposition(int n, int a, int b);

  /// Parses either one-line notation "[2 0 1]" or cycle notation
  /// "(0 1)(2 3)"; cycle (a b c) sends a to b, b to c, c to a.
  static Permutation parse(const std::string& text, int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& one_line() const { return image_; }

  Permutation inverse() const;

  /// The orbit (cycle) partition, fixed points included as singletons.
  /// Parts are sorted ascending, parts ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;

  /// Minimal number of arbitrary transpositions multiplying to *this;
  /// equals degree() minus the number of orbits.
  int reflection_length() const;

  /// Number of inversions: pairs i < j with image[i] > image[j].
  int coxeter_length() const;

  /// One-line notation "[2 0 1]".
  std::string str() const;

  bool operator==(const Permutation& other) const = default;

  size_t hash() const;

 private:
  std::vector<int> image_;
};

/// Apply p first, then q.  Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace garside

#endif
