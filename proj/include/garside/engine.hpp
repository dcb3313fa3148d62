#ifndef GARSIDE_ENGINE_HPP
#define GARSIDE_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace garside {

/// Dense identifier of an interned simple element within one instance.
using SimpleId = int;

namespace detail {

/// Pure-function memo tables shared by the engine.  Guarded by a single
/// mutex; callers never observe the caching.
struct Memo {
  std::mutex mu;
  std::unordered_map<uint64_t, char> divides;       // (a,b) -> a left-divides b
  std::unordered_map<uint64_t, SimpleId> quotient;  // (a,b) -> d with a.d == b
  std::unordered_map<uint64_t, SimpleId> gcd;       // (a,b) -> left gcd
  std::unordered_map<uint64_t, uint64_t> alpha2;    // (a,b) -> (head, tail)
  std::unordered_map<SimpleId, SimpleId> complement;
};

}  // namespace detail

class ReversedInstance;

/// A set of simple elements with an atomic partial product: a unit, a
/// finite atom set, an additive length, and optionally a fundamental
/// element delta (the common right multiple of all simples) with a fast
/// right-complement map.
///
/// Simples are interned with dense integer ids; equality is id equality.
/// Instances are immutable once constructed (lazily interning instances
/// synchronize internally) and may be shared freely across threads.
class Instance {
 public:
  Instance();
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;
  virtual ~Instance();

  virtual SimpleId unit() const = 0;
  virtual const std::vector<SimpleId>& atoms() const = 0;

  /// The partial product: the simple equal to a.b when the product of the
  /// two simples is again simple, nullopt otherwise.
  virtual std::optional<SimpleId> product(SimpleId a, SimpleId b) const = 0;

  virtual int length(SimpleId a) const = 0;

  /// The fundamental element, when every simple has a common right
  /// multiple.
  virtual std::optional<SimpleId> delta() const = 0;

  /// Fast path for the right complement: the simple c with a.c == delta.
  /// Default: none; the engine derives it from delta.
  virtual std::optional<SimpleId> complement(SimpleId a) const;

  /// Fast paths for divisibility among simples ("does some simple d satisfy
  /// a.d == b", resp. "d.a == b").  Default: none; the engine falls back to
  /// a memoized atom-extension search.
  virtual std::optional<bool> left_divides_fast(SimpleId a, SimpleId b) const;
  virtual std::optional<bool> right_divides_fast(SimpleId a, SimpleId b) const;

  /// Human-readable form of a simple, for diagnostics and the CLI.
  virtual std::string describe(SimpleId a) const = 0;

  virtual std::string name() const = 0;

  /// The anti-isomorphic view with product(a, b) := product(b, a), sharing
  /// this instance's simple ids.  Built lazily, owned by this instance.
  const Instance& reversed() const;

  /// Non-null on reversed views; points back at the underlying instance.
  virtual const Instance* reverse_base() const { return nullptr; }

  detail::Memo& memo() const { return memo_; }

 private:
  mutable detail::Memo memo_;
  mutable std::unique_ptr<ReversedInstance> reversed_;
  mutable std::once_flag reversed_once_;
};

/// A positive monoid element as its left-greedy factorization: a sequence
/// of non-unit simples in which every adjacent pair (g, h) satisfies
/// alpha2(g, h).head == g.  Empty factor list = identity.
struct NormalForm {
  const Instance* inst = nullptr;
  std::vector<SimpleId> factors;

  bool is_identity() const { return factors.empty(); }
  int length() const;  // total graded length
  bool operator==(const NormalForm& other) const = default;
};

/// A group element as a reduced left fraction: num_inv^{-1} * den with
/// left_gcd(num_inv, den) == identity.  Construct via fraction_reduce or
/// fraction_from_word.
struct Fraction {
  NormalForm num_inv;
  NormalForm den;

  bool operator==(const Fraction& other) const = default;
};

struct Alpha2Result {
  SimpleId head;
  SimpleId tail;
};

// ---- simple-level operations -------------------------------------------

/// True iff some simple d has a.d == b (equivalently a left-divides b in
/// the generated monoid).
bool simple_divides(const Instance& inst, SimpleId a, SimpleId b);

/// The unique d with a.d == b, when a left-divides b.
std::optional<SimpleId> simple_left_quotient(const Instance& inst, SimpleId a,
                                             SimpleId b);

/// Maximal common left divisor of two simples.  Computed by greedy atom
/// saturation; the axioms make the maximum unique.
SimpleId simple_left_gcd(const Instance& inst, SimpleId a, SimpleId b);

/// Minimal common right multiple of two simples.  Requires delta.
SimpleId simple_right_lcm(const Instance& inst, SimpleId a, SimpleId b);

/// The right complement: the simple c with a.c == delta.  Requires delta.
SimpleId simple_complement(const Instance& inst, SimpleId a);

/// The head/tail splitting of a product of two simples: head = a.c with c
/// the maximal left divisor of b such that a.c is simple, tail the rest of
/// b.  With delta present, c == simple_left_gcd(complement(a), b);
/// otherwise computed by atom saturation.
Alpha2Result alpha2(const Instance& inst, SimpleId a, SimpleId b);

/// The automorphism induced by delta: the simple x' with x.delta ==
/// delta.x'.  Requires delta.
SimpleId bar_simple(const Instance& inst, SimpleId a);

/// Inverse of bar_simple.
SimpleId bar_inverse_simple(const Instance& inst, SimpleId a);

// ---- monoid-level operations -------------------------------------------

/// Left-greedy normal form of an arbitrary word over simples, by repeated
/// local alpha2 sweeps; unit factors are dropped.
NormalForm normal_form(const Instance& inst, std::span<const SimpleId> word);

NormalForm identity_nf(const Instance& inst);
NormalForm simple_nf(const Instance& inst, SimpleId a);

/// The monoid product.
NormalForm multiply(const NormalForm& u, const NormalForm& v);

NormalForm power(const NormalForm& u, int k);

/// delta^k as a normal form (k >= 0).  Requires delta.
NormalForm delta_power(const Instance& inst, int k);

/// u^{-1} * w when u left-divides w, nullopt otherwise.
std::optional<NormalForm> try_left_quotient(const NormalForm& u,
                                            const NormalForm& w);

/// w * u^{-1} when u right-divides w, nullopt otherwise.
std::optional<NormalForm> try_right_quotient(const NormalForm& u,
                                             const NormalForm& w);

bool left_divides(const NormalForm& u, const NormalForm& w);

/// Maximal common left divisor, by iterated extraction of the maximal
/// common simple prefix.
NormalForm left_gcd(const NormalForm& u, const NormalForm& v);

/// Maximal common right divisor (mirror of left_gcd, via the reversed
/// instance).
NormalForm right_gcd(const NormalForm& u, const NormalForm& v);

/// Minimal common right multiple.  Requires delta: both arguments divide
/// delta^k for k the larger factor count, and the lcm is recovered from the
/// right gcd of the complements to delta^k.
NormalForm right_lcm(const NormalForm& u, const NormalForm& v);
NormalForm right_lcm(const std::vector<NormalForm>& elems);

/// Minimal common left multiple (mirror of right_lcm).
NormalForm left_lcm(const NormalForm& u, const NormalForm& v);

/// bar applied factorwise; an automorphism, so normality is preserved.
/// Requires delta.
NormalForm bar(const NormalForm& u);
NormalForm bar_inverse(const NormalForm& u);

/// The atom set of the submonoid fixed by the cyclic automorphism group
/// generated by atom_image (which must permute the atoms): right lcms of
/// the orbits, deduplicated, minus every lcm expressible as a product of
/// the other lcms.  Requires delta.
std::vector<SimpleId> fixed_atoms(
    const Instance& inst, const std::function<SimpleId(SimpleId)>& atom_image);

// ---- group of fractions --------------------------------------------------

/// Cancel the common left divisor: the reduced pair representing x^{-1} y.
/// Requires delta.
Fraction fraction_reduce(const NormalForm& x, const NormalForm& y);

Fraction fraction_identity(const Instance& inst);
Fraction fraction_from_positive(const NormalForm& y);

/// Product in the group of fractions, via a left lcm and reduction.
Fraction fraction_multiply(const Fraction& f, const Fraction& g);

Fraction fraction_invert(const Fraction& f);

/// Sound by uniqueness of the reduced pair: componentwise comparison.
bool fraction_equal(const Fraction& f, const Fraction& g);

/// Fold a signed word (simple, exponent) into a fraction.
Fraction fraction_from_word(
    const Instance& inst, const std::vector<std::pair<SimpleId, int>>& word);

}  // namespace garside

#endif
