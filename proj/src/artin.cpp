#include "garside/artin.hpp"

#include <algorithm>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

ArtinInstance::ArtinInstance(int n, int max_degree) : n_(n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  if (n > max_degree)
    throw ResourceLimitError("Artin degree " + std::to_string(n) +
                             " exceeds the configured bound " +
                             std::to_string(max_degree));
  unit_ = id_of(Permutation(n));
  for (int k = 1; k < n; ++k)
    atoms_.push_back(id_of(Permutation::transposition(n, k - 1, k)));
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
  delta_ = id_of(Permutation::from_one_line(std::move(rev)));
}

SimpleId ArtinInstance::id_of(const Permutation& p) const {
  if (p.degree() != n_)
    throw std::invalid_argument("permutation degree does not match instance");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  SimpleId id = static_cast<SimpleId>(simples_.size());
  simples_.push_back(p);
  index_.emplace(p, id);
  return id;
}

Permutation ArtinInstance::perm(SimpleId a) const {
  std::lock_guard<std::mutex> lock(mu_);
  return simples_[a];
}

SimpleId ArtinInstance::sigma(int k) const {
  if (k < 1 || k >= n_)
    throw std::invalid_argument("sigma index must satisfy 1 <= k <= n-1");
  return atoms_[k - 1];
}

std::optional<SimpleId> ArtinInstance::product(SimpleId a, SimpleId b) const {
  Permutation pa = perm(a), pb = perm(b);
  auto r = try_product(pa, pb);
  if (!r) return std::nullopt;
  return id_of(*r);
}

std::optional<Permutation> ArtinInstance::try_product(
    const Permutation& p, const Permutation& q) const {
  Permutation r = compose(p, q);
  if (r.coxeter_length() != p.coxeter_length() + q.coxeter_length())
    return std::nullopt;
  return r;
}

int ArtinInstance::length(SimpleId a) const {
  return perm(a).coxeter_length();
}

std::optional<SimpleId> ArtinInstance::complement(SimpleId a) const {
  // p . (p^{-1} w0) = w0, and inversion counts always add against w0.
  Permutation p = perm(a);
  Permutation w0 = perm(delta_);
  return id_of(compose(p.inverse(), w0));
}

std::optional<bool> ArtinInstance::left_divides_fast(SimpleId a,
                                                     SimpleId b) const {
  // the cofactor is forced in the group; a divides b iff lengths add
  Permutation pa = perm(a), pb = perm(b);
  Permutation d = compose(pa.inverse(), pb);
  return pa.coxeter_length() + d.coxeter_length() == pb.coxeter_length();
}

std::optional<bool> ArtinInstance::right_divides_fast(SimpleId a,
                                                      SimpleId b) const {
  Permutation pa = perm(a), pb = perm(b);
  Permutation e = compose(pb, pa.inverse());
  return e.coxeter_length() + pa.coxeter_length() == pb.coxeter_length();
}

std::string ArtinInstance::describe(SimpleId a) const { return perm(a).str(); }

std::string ArtinInstance::name() const {
  return "artin(" + std::to_string(n_) + ")";
}

int ArtinInstance::num_interned() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(simples_.size());
}

}  // namespace garside
