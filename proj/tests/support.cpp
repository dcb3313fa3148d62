#include "support.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace garside {
namespace testing {

namespace {

std::string id_str(const Instance& inst, SimpleId a) {
  return inst.describe(a);
}

}  // namespace

AxiomReport check_axioms(const Instance& inst,
                         const std::vector<SimpleId>& simples) {
  AxiomReport report;
  const SimpleId unit = inst.unit();

  // unit neutral and associativity
  for (SimpleId a : simples) {
    auto ua = inst.product(unit, a);
    auto au = inst.product(a, unit);
    if (!ua || !au || *ua != a || *au != a)
      report.fail("unit not neutral at " + id_str(inst, a));
  }
  for (SimpleId a : simples)
    for (SimpleId b : simples) {
      auto ab = inst.product(a, b);
      for (SimpleId c : simples) {
        auto bc = inst.product(b, c);
        std::optional<SimpleId> left =
            ab ? inst.product(*ab, c) : std::optional<SimpleId>{};
        std::optional<SimpleId> right =
            bc ? inst.product(a, *bc) : std::optional<SimpleId>{};
        if (left.has_value() != right.has_value())
          report.fail("associativity definedness differs at (" +
                      id_str(inst, a) + ", " + id_str(inst, b) + ", " +
                      id_str(inst, c) + ")");
        else if (left && *left != *right)
          report.fail("associativity values differ");
      }
    }

  // products of non-units are non-units; atoms are exactly the non-units
  // that are not such products
  std::set<SimpleId> products;
  for (SimpleId a : simples)
    for (SimpleId b : simples) {
      if (a == unit || b == unit) continue;
      auto ab = inst.product(a, b);
      if (!ab) continue;
      if (*ab == unit) report.fail("product of non-units is the unit");
      products.insert(*ab);
    }
  std::set<SimpleId> computed_atoms;
  for (SimpleId a : simples)
    if (a != unit && !products.count(a)) computed_atoms.insert(a);
  std::set<SimpleId> declared(inst.atoms().begin(), inst.atoms().end());
  if (computed_atoms != declared) report.fail("atom set mismatch");

  // length grading
  if (inst.length(unit) != 0) report.fail("length(unit) != 0");
  for (SimpleId a : simples) {
    if (a != unit && inst.length(a) <= 0)
      report.fail("non-unit with non-positive length");
    for (SimpleId b : simples) {
      auto ab = inst.product(a, b);
      if (ab && inst.length(*ab) != inst.length(a) + inst.length(b))
        report.fail("length not additive");
    }
  }

  // conditional lcms for atom pairs, on both sides
  auto check_lcm_side = [&](const Instance& side, const char* label) {
    for (SimpleId s : inst.atoms())
      for (SimpleId t : inst.atoms()) {
        std::vector<SimpleId> common;
        for (SimpleId c : simples)
          if (simple_divides(side, s, c) && simple_divides(side, t, c))
            common.push_back(c);
        if (common.empty()) continue;
        int minima = 0;
        for (SimpleId m : common) {
          bool divides_all = true;
          for (SimpleId c : common)
            if (!simple_divides(side, m, c)) divides_all = false;
          if (divides_all) ++minima;
        }
        if (minima != 1)
          report.fail(std::string(label) + ": no unique minimal common multiple at (" +
                      id_str(inst, s) + ", " + id_str(inst, t) + ")");
      }
  };
  check_lcm_side(inst, "right lcm");
  check_lcm_side(inst.reversed(), "left lcm");

  // delta must be a common right multiple of every simple
  if (auto d = inst.delta()) {
    for (SimpleId a : simples)
      if (!simple_divides(inst, a, *d))
        report.fail("delta is not a right multiple of " + id_str(inst, a));
  } else {
    report.fail("no delta providing a common right multiple");
  }

  // cancellation, over all simple pairs and bounded monoid elements
  std::vector<NormalForm> monoid_sample;
  monoid_sample.push_back(identity_nf(inst));
  for (SimpleId s : inst.atoms()) {
    monoid_sample.push_back(simple_nf(inst, s));
    for (SimpleId t : inst.atoms())
      monoid_sample.push_back(
          multiply(simple_nf(inst, s), simple_nf(inst, t)));
  }
  for (SimpleId a : simples)
    for (SimpleId b : simples) {
      if (a >= b) continue;
      NormalForm na = simple_nf(inst, a), nb = simple_nf(inst, b);
      for (const NormalForm& m : monoid_sample) {
        if (multiply(na, m) == multiply(nb, m))
          report.fail("right cancellation fails");
        if (multiply(m, na) == multiply(m, nb))
          report.fail("left cancellation fails");
      }
    }

  return report;
}

std::vector<SimpleId> all_artin_simples(const ArtinInstance& inst) {
  std::vector<int> image(inst.strands());
  for (int i = 0; i < inst.strands(); ++i) image[i] = i;
  std::vector<SimpleId> out;
  do {
    out.push_back(inst.id_of(Permutation::from_one_line(image)));
  } while (std::next_permutation(image.begin(), image.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimpleId> all_bkl_simples(const BklInstance& inst) {
  std::vector<SimpleId> out(inst.num_simples());
  for (int i = 0; i < inst.num_simples(); ++i) out[i] = i;
  return out;
}

std::vector<NcPartition> fixed_submonoid_atoms_bf(const BklInstance& inst,
                                                  int shift) {
  std::vector<SimpleId> fixed;
  for (SimpleId s = 0; s < inst.num_simples(); ++s)
    if (inst.partition(s).rotated(shift) == inst.partition(s) &&
        s != inst.unit())
      fixed.push_back(s);
  std::vector<NcPartition> atoms;
  for (SimpleId s : fixed) {
    bool is_product = false;
    for (SimpleId u : fixed)
      for (SimpleId v : fixed) {
        auto uv = inst.product(u, v);
        if (uv && *uv == s) is_product = true;
      }
    if (!is_product) atoms.push_back(inst.partition(s));
  }
  return atoms;
}

std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> assign(n, 0);
  auto emit = [&] {
    int blocks = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<std::vector<int>> parts(blocks);
    for (int i = 0; i < n; ++i) parts[assign[i]].push_back(i);
    out.push_back(std::move(parts));
  };
  // restricted growth strings
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      assign[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  assign[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::vector<SimpleId> random_positive_word(const Instance& inst, int max_len,
                                           std::mt19937& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<size_t> atom_dist(0, inst.atoms().size() - 1);
  std::vector<SimpleId> w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) w.push_back(inst.atoms()[atom_dist(rng)]);
  return w;
}

std::vector<std::pair<SimpleId, int>> random_signed_word(const Instance& inst,
                                                         int max_len,
                                                         std::mt19937& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<size_t> atom_dist(0, inst.atoms().size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<std::pair<SimpleId, int>> w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    w.emplace_back(inst.atoms()[atom_dist(rng)], sign_dist(rng) ? 1 : -1);
  return w;
}

}  // namespace testing
}  // namespace garside
