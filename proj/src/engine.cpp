#include "garside/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

namespace {

uint64_t pack(SimpleId a, SimpleId b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

void require_same(const Instance* a, const Instance* b) {
  if (a != b)
    throw std::invalid_argument("operands belong to different instances");
}

SimpleId require_delta(const Instance& inst) {
  auto d = inst.delta();
  if (!d)
    throw UnsupportedInstanceError("instance '" + inst.name() +
                                   "' has no fundamental element");
  return *d;
}

}  // namespace

Instance::Instance() = default;
Instance::~Instance() = default;

std::optional<SimpleId> Instance::complement(SimpleId) const {
  return std::nullopt;
}

std::optional<bool> Instance::left_divides_fast(SimpleId, SimpleId) const {
  return std::nullopt;
}

std::optional<bool> Instance::right_divides_fast(SimpleId, SimpleId) const {
  return std::nullopt;
}

/// Product-reversing view of an instance.  Simple ids, lengths, atoms and
/// delta are shared; only the product order flips.  Left divisibility here
/// is right divisibility in the base instance.
class ReversedInstance : public Instance {
 public:
  explicit ReversedInstance(const Instance& base) : base_(base) {}

  SimpleId unit() const override { return base_.unit(); }
  const std::vector<SimpleId>& atoms() const override { return base_.atoms(); }
  std::optional<SimpleId> product(SimpleId a, SimpleId b) const override {
    return base_.product(b, a);
  }
  int length(SimpleId a) const override { return base_.length(a); }
  std::optional<SimpleId> delta() const override { return base_.delta(); }
  std::optional<bool> left_divides_fast(SimpleId a, SimpleId b) const override {
    return base_.right_divides_fast(a, b);
  }
  std::optional<bool> right_divides_fast(SimpleId a, SimpleId b) const override {
    return base_.left_divides_fast(a, b);
  }
  std::string describe(SimpleId a) const override { return base_.describe(a); }
  std::string name() const override { return base_.name() + " (reversed)"; }
  const Instance* reverse_base() const override { return &base_; }

 private:
  const Instance& base_;
};

const Instance& Instance::reversed() const {
  if (const Instance* base = reverse_base()) return *base;
  std::call_once(reversed_once_,
                 [this] { reversed_ = std::make_unique<ReversedInstance>(*this); });
  return *reversed_;
}

int NormalForm::length() const {
  int total = 0;
  for (SimpleId f : factors) total += inst->length(f);
  return total;
}

// ---- simple-level operations -------------------------------------------

bool simple_divides(const Instance& inst, SimpleId a, SimpleId b) {
  if (a == b) return true;
  if (inst.length(a) >= inst.length(b)) return false;
  if (auto fast = inst.left_divides_fast(a, b)) return *fast;
  auto& memo = inst.memo();
  const uint64_t key = pack(a, b);
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.divides.find(key);
    if (it != memo.divides.end()) return it->second;
  }
  // a divides b iff some atom extension a.s (still simple) divides b.
  bool result = false;
  for (SimpleId s : inst.atoms()) {
    auto as = inst.product(a, s);
    if (as && simple_divides(inst, *as, b)) {
      result = true;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.divides.emplace(key, result);
  return result;
}

std::optional<SimpleId> simple_left_quotient(const Instance& inst, SimpleId a,
                                             SimpleId b) {
  if (a == b) return inst.unit();
  if (!simple_divides(inst, a, b)) return std::nullopt;
  auto& memo = inst.memo();
  const uint64_t key = pack(a, b);
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.quotient.find(key);
    if (it != memo.quotient.end()) return it->second;
  }
  std::optional<SimpleId> result;
  for (SimpleId s : inst.atoms()) {
    auto as = inst.product(a, s);
    if (!as || !simple_divides(inst, *as, b)) continue;
    auto rest = simple_left_quotient(inst, *as, b);
    if (!rest) continue;
    // s.(rest) is a subproduct of b, hence simple
    auto d = inst.product(s, *rest);
    if (!d) throw std::logic_error("quotient: subproduct not simple");
    result = *d;
    break;
  }
  if (!result) throw std::logic_error("quotient: no atom path to the divisor");
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.quotient.emplace(key, *result);
  return result;
}

SimpleId simple_left_gcd(const Instance& inst, SimpleId a, SimpleId b) {
  auto& memo = inst.memo();
  const uint64_t key = pack(std::min(a, b), std::max(a, b));
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.gcd.find(key);
    if (it != memo.gcd.end()) return it->second;
  }
  // Greedy saturation: the set of common divisors is closed under joins of
  // atom extensions, so any maximal chain reaches the unique maximum.
  SimpleId c = inst.unit();
  bool grew = true;
  while (grew) {
    grew = false;
    for (SimpleId s : inst.atoms()) {
      auto cs = inst.product(c, s);
      if (cs && simple_divides(inst, *cs, a) && simple_divides(inst, *cs, b)) {
        c = *cs;
        grew = true;
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.gcd.emplace(key, c);
  return c;
}

SimpleId simple_complement(const Instance& inst, SimpleId a) {
  const SimpleId d = require_delta(inst);
  if (auto fast = inst.complement(a)) return *fast;
  auto& memo = inst.memo();
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.complement.find(a);
    if (it != memo.complement.end()) return it->second;
  }
  auto q = simple_left_quotient(inst, a, d);
  if (!q) throw std::logic_error("simple does not divide delta");
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.complement.emplace(a, *q);
  return *q;
}

Alpha2Result alpha2(const Instance& inst, SimpleId a, SimpleId b) {
  auto& memo = inst.memo();
  const uint64_t key = pack(a, b);
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.alpha2.find(key);
    if (it != memo.alpha2.end())
      return {static_cast<SimpleId>(it->second >> 32),
              static_cast<SimpleId>(it->second & 0xffffffffu)};
  }
  SimpleId c;
  if (inst.delta()) {
    // a.c is simple iff c divides the complement of a, so the maximal
    // choice is gcd(a*, b).
    c = simple_left_gcd(inst, simple_complement(inst, a), b);
  } else {
    c = inst.unit();
    bool grew = true;
    while (grew) {
      grew = false;
      for (SimpleId s : inst.atoms()) {
        auto cs = inst.product(c, s);
        if (cs && simple_divides(inst, *cs, b) && inst.product(a, *cs)) {
          c = *cs;
          grew = true;
          break;
        }
      }
    }
  }
  auto head = inst.product(a, c);
  auto tail = simple_left_quotient(inst, c, b);
  if (!head || !tail) throw std::logic_error("alpha2: saturation left the poset");
  Alpha2Result result{*head, *tail};
  std::lock_guard<std::mutex> lock(memo.mu);
  memo.alpha2.emplace(key, pack(result.head, result.tail));
  return result;
}

SimpleId simple_right_lcm(const Instance& inst, SimpleId a, SimpleId b) {
  const SimpleId d = require_delta(inst);
  // a divides m iff the complement of m right-divides the complement of a;
  // so the minimal common multiple corresponds to the maximal common right
  // divisor of the complements.
  const SimpleId ca = simple_complement(inst, a);
  const SimpleId cb = simple_complement(inst, b);
  const Instance& rev = inst.reversed();
  const SimpleId g = simple_left_gcd(rev, ca, cb);
  auto m = simple_left_quotient(rev, g, d);  // m.g == delta in the base
  if (!m) throw std::logic_error("lcm: complement does not divide delta");
  return *m;
}

SimpleId bar_simple(const Instance& inst, SimpleId a) {
  return simple_complement(inst, simple_complement(inst, a));
}

SimpleId bar_inverse_simple(const Instance& inst, SimpleId a) {
  const SimpleId d = require_delta(inst);
  const Instance& rev = inst.reversed();
  auto inner = simple_left_quotient(rev, a, d);  // x with x.a == delta
  if (!inner) throw std::logic_error("bar: simple does not right-divide delta");
  auto outer = simple_left_quotient(rev, *inner, d);
  if (!outer) throw std::logic_error("bar: simple does not right-divide delta");
  return *outer;
}

// ---- monoid-level operations -------------------------------------------

NormalForm identity_nf(const Instance& inst) { return NormalForm{&inst, {}}; }

NormalForm simple_nf(const Instance& inst, SimpleId a) {
  if (a == inst.unit()) return identity_nf(inst);
  return NormalForm{&inst, {a}};
}

NormalForm normal_form(const Instance& inst, std::span<const SimpleId> word) {
  std::vector<SimpleId> w;
  w.reserve(word.size());
  for (SimpleId f : word)
    if (f != inst.unit()) w.push_back(f);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) {
      auto [head, tail] = alpha2(inst, w[i], w[i + 1]);
      if (head != w[i]) {
        w[i] = head;
        w[i + 1] = tail;
        changed = true;
      }
    }
    std::erase(w, inst.unit());
  }
  return NormalForm{&inst, std::move(w)};
}

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
  require_same(u.inst, v.inst);
  std::vector<SimpleId> w = u.factors;
  w.insert(w.end(), v.factors.begin(), v.factors.end());
  return normal_form(*u.inst, w);
}

NormalForm power(const NormalForm& u, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  NormalForm acc = identity_nf(*u.inst);
  for (int i = 0; i < k; ++i) acc = multiply(acc, u);
  return acc;
}

NormalForm delta_power(const Instance& inst, int k) {
  if (k < 0) throw std::invalid_argument("delta_power: negative exponent");
  const SimpleId d = require_delta(inst);
  std::vector<SimpleId> w(static_cast<size_t>(k), d);
  return normal_form(inst, w);
}

std::optional<NormalForm> try_left_quotient(const NormalForm& u,
                                            const NormalForm& w) {
  require_same(u.inst, w.inst);
  const Instance& inst = *u.inst;
  NormalForm rest = w;
  for (SimpleId f : u.factors) {
    if (rest.factors.empty()) return std::nullopt;
    const SimpleId head = rest.factors.front();
    auto r = simple_left_quotient(inst, f, head);
    if (!r) return std::nullopt;  // a simple divisor always divides the head
    std::vector<SimpleId> next;
    next.push_back(*r);
    next.insert(next.end(), rest.factors.begin() + 1, rest.factors.end());
    rest = normal_form(inst, next);
  }
  return rest;
}

namespace {

NormalForm to_reversed(const NormalForm& u) {
  const Instance& rev = u.inst->reversed();
  std::vector<SimpleId> w(u.factors.rbegin(), u.factors.rend());
  return normal_form(rev, w);
}

NormalForm from_reversed(const NormalForm& u, const Instance& base) {
  std::vector<SimpleId> w(u.factors.rbegin(), u.factors.rend());
  return normal_form(base, w);
}

}  // namespace

std::optional<NormalForm> try_right_quotient(const NormalForm& u,
                                             const NormalForm& w) {
  require_same(u.inst, w.inst);
  auto q = try_left_quotient(to_reversed(u), to_reversed(w));
  if (!q) return std::nullopt;
  return from_reversed(*q, *u.inst);
}

bool left_divides(const NormalForm& u, const NormalForm& w) {
  return try_left_quotient(u, w).has_value();
}

NormalForm left_gcd(const NormalForm& u, const NormalForm& v) {
  require_same(u.inst, v.inst);
  const Instance& inst = *u.inst;
  NormalForm x = u, y = v;
  std::vector<SimpleId> acc;
  for (;;) {
    if (x.factors.empty() || y.factors.empty()) break;
    // Any common simple divisor divides both heads, so the maximal common
    // simple prefix is the gcd of the heads.
    SimpleId c = simple_left_gcd(inst, x.factors.front(), y.factors.front());
    if (c == inst.unit()) break;
    acc.push_back(c);
    x = *try_left_quotient(simple_nf(inst, c), x);
    y = *try_left_quotient(simple_nf(inst, c), y);
  }
  return normal_form(inst, acc);
}

NormalForm right_gcd(const NormalForm& u, const NormalForm& v) {
  require_same(u.inst, v.inst);
  return from_reversed(left_gcd(to_reversed(u), to_reversed(v)), *u.inst);
}

NormalForm right_lcm(const NormalForm& u, const NormalForm& v) {
  require_same(u.inst, v.inst);
  const Instance& inst = *u.inst;
  require_delta(inst);
  const int k =
      static_cast<int>(std::max(u.factors.size(), v.factors.size()));
  if (k == 0) return identity_nf(inst);
  const NormalForm dk = delta_power(inst, k);
  // Both arguments divide delta^k; the lcm is delta^k shorn of the right
  // gcd of the two cofactors.
  auto cu = try_left_quotient(u, dk);
  auto cv = try_left_quotient(v, dk);
  if (!cu || !cv)
    throw std::logic_error("right_lcm: argument does not divide delta^k");
  NormalForm g = right_gcd(*cu, *cv);
  auto m = try_right_quotient(g, dk);
  if (!m) throw std::logic_error("right_lcm: cofactor does not divide delta^k");
  return *m;
}

NormalForm right_lcm(const std::vector<NormalForm>& elems) {
  if (elems.empty()) throw std::invalid_argument("right_lcm: empty family");
  NormalForm acc = elems.front();
  for (size_t i = 1; i < elems.size(); ++i) acc = right_lcm(acc, elems[i]);
  return acc;
}

NormalForm left_lcm(const NormalForm& u, const NormalForm& v) {
  require_same(u.inst, v.inst);
  return from_reversed(right_lcm(to_reversed(u), to_reversed(v)), *u.inst);
}

NormalForm bar(const NormalForm& u) {
  std::vector<SimpleId> w;
  w.reserve(u.factors.size());
  for (SimpleId f : u.factors) w.push_back(bar_simple(*u.inst, f));
  return NormalForm{u.inst, std::move(w)};  // automorphism: stays greedy
}

NormalForm bar_inverse(const NormalForm& u) {
  std::vector<SimpleId> w;
  w.reserve(u.factors.size());
  for (SimpleId f : u.factors) w.push_back(bar_inverse_simple(*u.inst, f));
  return NormalForm{u.inst, std::move(w)};
}

std::vector<SimpleId> fixed_atoms(
    const Instance& inst, const std::function<SimpleId(SimpleId)>& atom_image) {
  require_delta(inst);
  const auto& atoms = inst.atoms();
  std::set<SimpleId> atom_set(atoms.begin(), atoms.end());
  std::set<SimpleId> image_set;
  for (SimpleId s : atoms) {
    SimpleId t = atom_image(s);
    if (!atom_set.count(t))
      throw std::invalid_argument("fixed_atoms: map does not permute atoms");
    image_set.insert(t);
  }
  if (image_set.size() != atom_set.size())
    throw std::invalid_argument("fixed_atoms: map does not permute atoms");

  // Orbit lcms, deduplicated in first-seen order.
  std::vector<SimpleId> lcms;
  std::set<SimpleId> seen_atom, seen_lcm;
  for (SimpleId s : atoms) {
    if (seen_atom.count(s)) continue;
    std::vector<NormalForm> orbit;
    for (SimpleId t = s; !seen_atom.count(t); t = atom_image(t)) {
      seen_atom.insert(t);
      orbit.push_back(simple_nf(inst, t));
    }
    NormalForm l = right_lcm(orbit);
    if (l.factors.size() != 1)
      throw std::logic_error("fixed_atoms: an orbit lcm is not simple");
    if (seen_lcm.insert(l.factors.front()).second)
      lcms.push_back(l.factors.front());
  }

  // Drop every lcm that is a product of the others: breadth-first closure
  // of the submonoid they generate, cut off at the candidate's length.
  // Length additivity makes the cutoff exact.
  std::vector<SimpleId> result;
  for (SimpleId e : lcms) {
    std::vector<SimpleId> others;
    for (SimpleId f : lcms)
      if (f != e) others.push_back(f);
    const int budget = inst.length(e);
    std::set<SimpleId> reached;
    std::deque<SimpleId> queue;
    queue.push_back(inst.unit());
    reached.insert(inst.unit());
    bool redundant = false;
    while (!queue.empty() && !redundant) {
      SimpleId x = queue.front();
      queue.pop_front();
      for (SimpleId f : others) {
        auto xf = inst.product(x, f);
        if (!xf || inst.length(*xf) > budget || reached.count(*xf)) continue;
        if (*xf == e && x != inst.unit()) {
          redundant = true;
          break;
        }
        reached.insert(*xf);
        queue.push_back(*xf);
      }
    }
    if (!redundant) result.push_back(e);
  }
  return result;
}

// ---- group of fractions --------------------------------------------------

Fraction fraction_reduce(const NormalForm& x, const NormalForm& y) {
  require_same(x.inst, y.inst);
  require_delta(*x.inst);
  NormalForm g = left_gcd(x, y);
  return Fraction{*try_left_quotient(g, x), *try_left_quotient(g, y)};
}

Fraction fraction_identity(const Instance& inst) {
  return Fraction{identity_nf(inst), identity_nf(inst)};
}

Fraction fraction_from_positive(const NormalForm& y) {
  return Fraction{identity_nf(*y.inst), y};
}

Fraction fraction_multiply(const Fraction& f, const Fraction& g) {
  require_same(f.den.inst, g.num_inv.inst);
  // f = x1^{-1} y1, g = x2^{-1} y2; with m = a.y1 = b.x2 the left lcm,
  // y1 x2^{-1} = a^{-1} b, so f.g = (a x1)^{-1} (b y2).
  NormalForm m = left_lcm(f.den, g.num_inv);
  NormalForm a = *try_right_quotient(f.den, m);
  NormalForm b = *try_right_quotient(g.num_inv, m);
  return fraction_reduce(multiply(a, f.num_inv), multiply(b, g.den));
}

Fraction fraction_invert(const Fraction& f) {
  return Fraction{f.den, f.num_inv};
}

bool fraction_equal(const Fraction& f, const Fraction& g) {
  require_same(f.den.inst, g.den.inst);
  return f.num_inv == g.num_inv && f.den == g.den;
}

Fraction fraction_from_word(
    const Instance& inst, const std::vector<std::pair<SimpleId, int>>& word) {
  Fraction acc = fraction_identity(inst);
  for (auto [s, exp] : word) {
    if (exp == 0) continue;
    Fraction step = exp > 0 ? Fraction{identity_nf(inst), simple_nf(inst, s)}
                            : Fraction{simple_nf(inst, s), identity_nf(inst)};
    for (int i = 0; i < std::abs(exp); ++i) acc = fraction_multiply(acc, step);
  }
  return acc;
}

}  // namespace garside
