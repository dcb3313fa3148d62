#include "garside/bkl.hpp"

#include <algorithm>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

BklInstance::BklInstance(int n, int max_degree) : n_(n) {
  simples_ = enumerate_noncrossing(n, max_degree);
  phis_.reserve(simples_.size());
  kreweras_.reserve(simples_.size());
  for (SimpleId id = 0; id < num_simples(); ++id) {
    const NcPartition& p = simples_[id];
    index_.emplace(p, id);
    phis_.push_back(p.phi());
    by_perm_.emplace(phis_.back(), id);
    if (p.length() == 1) atoms_.push_back(id);
  }
  unit_ = index_.at(NcPartition::singletons(n));
  delta_ = index_.at(NcPartition::full(n));
  // The right complement of lambda is the simple whose image is
  // phi(lambda)^{-1} phi(delta); it exists (the Kreweras complement) and
  // phi is injective, so the lookup cannot miss.
  kreweras_inv_.resize(num_simples());
  for (SimpleId id = 0; id < num_simples(); ++id) {
    auto it = by_perm_.find(compose(phis_[id].inverse(), phis_[delta_]));
    kreweras_.push_back(it->second);
  }
  for (SimpleId id = 0; id < num_simples(); ++id)
    kreweras_inv_[kreweras_[id]] = id;
}

std::optional<SimpleId> BklInstance::product(SimpleId a, SimpleId b) const {
  const Permutation sigma = compose(phis_[a], phis_[b]);
  if (sigma.reflection_length() != length(a) + length(b)) return std::nullopt;
  auto it = by_perm_.find(sigma);
  if (it == by_perm_.end()) return std::nullopt;
  return it->second;
}

int BklInstance::length(SimpleId a) const { return simples_[a].length(); }

std::optional<SimpleId> BklInstance::complement(SimpleId a) const {
  return kreweras_[a];
}

std::optional<bool> BklInstance::left_divides_fast(SimpleId a,
                                                   SimpleId b) const {
  // left divisibility among canonical factors is partition refinement
  return simples_[a].refines(simples_[b]);
}

std::optional<bool> BklInstance::right_divides_fast(SimpleId a,
                                                    SimpleId b) const {
  // e.a == b iff the complement preimage of b divides the one of a:
  // from delta = x.dx applied twice, a divides b on the left exactly when
  // db right-divides da, and inverting the complement flips it back.
  return simples_[kreweras_inv_[b]].refines(simples_[kreweras_inv_[a]]);
}

std::string BklInstance::describe(SimpleId a) const {
  return simples_[a].str();
}

std::string BklInstance::name() const {
  return "bkl(" + std::to_string(n_) + ")";
}

SimpleId BklInstance::id_of(const NcPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("partition does not belong to this instance");
  return it->second;
}

SimpleId BklInstance::atom(int i, int j) const {
  if (i < 0 || j < 0 || i >= j || j >= n_)
    throw std::invalid_argument("atom indices must satisfy 0 <= i < j < n");
  return id_of(NcPartition::make(n_, {{i, j}}));
}

std::optional<NcPartition> BklInstance::try_product(
    const NcPartition& a, const NcPartition& b) const {
  if (a.size() != n_ || b.size() != n_)
    throw std::invalid_argument("try_product: size mismatch");
  auto r = product(id_of(a), id_of(b));
  if (!r) return std::nullopt;
  return simples_[*r];
}

std::optional<SimpleId> BklInstance::simple_from_perm(
    const Permutation& p) const {
  auto it = by_perm_.find(p);
  if (it == by_perm_.end()) return std::nullopt;
  return it->second;
}

NormalForm conj_by_delta(const NormalForm& nf, int k) {
  const auto* inst = dynamic_cast<const BklInstance*>(nf.inst);
  if (!inst)
    throw std::invalid_argument("conj_by_delta needs a band-generator instance");
  // delta^{-1} a(i,i+1) delta = a(i-1,i): conjugation by delta rotates the
  // circle one step down, so delta^{-k} x delta^{k} rotates by -k.
  std::vector<SimpleId> w;
  w.reserve(nf.factors.size());
  for (SimpleId f : nf.factors)
    w.push_back(inst->id_of(inst->partition(f).rotated(-k)));
  return NormalForm{nf.inst, std::move(w)};
}

std::vector<NcPartition> centralizer_atoms(const BklInstance& inst, int d) {
  const int n = inst.strands();
  if (d < 1 || n % d != 0)
    throw std::invalid_argument("centralizer_atoms: d must divide n");
  const int shift = n / d;
  auto image = [&](SimpleId s) {
    return inst.id_of(inst.partition(s).rotated(-shift));
  };
  std::vector<NcPartition> result;
  for (SimpleId s : fixed_atoms(inst, image))
    result.push_back(inst.partition(s));
  return result;
}

std::vector<SignedArtinGen> to_artin(int n,
                                     const std::vector<SignedBandAtom>& word) {
  std::vector<SignedArtinGen> out;
  for (const auto& letter : word) {
    if (letter.i < 0 || letter.i >= letter.j || letter.j >= n)
      throw std::invalid_argument("to_artin: atom indices out of range");
    if (letter.exp == 0) continue;
    std::vector<SignedArtinGen> expansion;
    for (int k = letter.i + 1; k <= letter.j; ++k)
      expansion.push_back({k, 1});
    for (int k = letter.j - 1; k >= letter.i + 1; --k)
      expansion.push_back({k, -1});
    if (letter.exp < 0) {
      std::reverse(expansion.begin(), expansion.end());
      for (auto& g : expansion) g.exp = -g.exp;
    }
    for (int rep = 0; rep < std::abs(letter.exp); ++rep)
      out.insert(out.end(), expansion.begin(), expansion.end());
  }
  return out;
}

}  // namespace garside
