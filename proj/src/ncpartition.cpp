#include "garside/ncpartition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

namespace {

// Chords of two disjoint parts cross iff, walking the circle once, the
// merged labels form more than two maximal blocks.
bool parts_cross(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<char> labels;
  labels.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      labels.push_back(0);
      ++i;
    } else {
      labels.push_back(1);
      ++j;
    }
  }
  const size_t m = labels.size();
  int transitions = 0;
  for (size_t k = 0; k < m; ++k)
    if (labels[k] != labels[(k + 1) % m]) ++transitions;
  return transitions > 2;
}

void canonicalize(std::vector<std::vector<int>>& parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

NcPartition::NcPartition(int n, std::vector<std::vector<int>> parts)
    : n_(n), parts_(std::move(parts)), owner_(n, -1) {
  for (int p = 0; p < num_parts(); ++p)
    for (int v : parts_[p]) owner_[v] = p;
}

NcPartition NcPartition::singletons(int n) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  std::vector<std::vector<int>> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = {i};
  return NcPartition(n, std::move(parts));
}

NcPartition NcPartition::full(int n) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return NcPartition(n, {std::move(all)});
}

NcPartition NcPartition::make(int n, std::vector<std::vector<int>> parts) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  std::vector<char> seen(n, 0);
  for (auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (int v : part) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("index out of range in partition");
      if (seen[v]) throw std::invalid_argument("parts overlap");
      seen[v] = 1;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) parts.push_back({i});
  canonicalize(parts);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts_cross(parts[i], parts[j]))
        throw std::invalid_argument("partition is crossing");
  return NcPartition(n, std::move(parts));
}

bool NcPartition::is_noncrossing(int n,
                                 const std::vector<std::vector<int>>& parts) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (int v : part) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("index out of range in partition");
      if (seen[v]) throw std::invalid_argument("parts overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("parts do not cover all indices");
  auto sorted = parts;
  canonicalize(sorted);
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (parts_cross(sorted[i], sorted[j])) return false;
  return true;
}

bool NcPartition::refines(const NcPartition& coarser) const {
  if (n_ != coarser.n_)
    throw std::invalid_argument("refines: size mismatch");
  for (const auto& part : parts_) {
    int target = coarser.owner_[part.front()];
    for (int v : part)
      if (coarser.owner_[v] != target) return false;
  }
  return true;
}

Permutation NcPartition::phi() const {
  std::vector<int> image(n_);
  std::iota(image.begin(), image.end(), 0);
  for (const auto& part : parts_) {
    const int k = static_cast<int>(part.size());
    for (int j = 0; j < k; ++j) image[part[j]] = part[(j + k - 1) % k];
  }
  return Permutation::from_one_line(std::move(image));
}

std::optional<NcPartition> NcPartition::from_perm(const Permutation& p) {
  auto parts = p.orbits();
  canonicalize(parts);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts_cross(parts[i], parts[j])) return std::nullopt;
  NcPartition candidate(p.degree(), std::move(parts));
  if (candidate.phi() == p) return candidate;
  return std::nullopt;
}

NcPartition NcPartition::rotated(int k) const {
  k = ((k % n_) + n_) % n_;
  std::vector<std::vector<int>> parts = parts_;
  for (auto& part : parts)
    for (int& v : part) v = (v + k) % n_;
  canonicalize(parts);
  return NcPartition(n_, std::move(parts));
}

const std::vector<int>& NcPartition::part_of(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("index out of range");
  return parts_[owner_[i]];
}

std::string NcPartition::str() const {
  std::ostringstream os;
  for (const auto& part : parts_) {
    os << '{';
    for (size_t i = 0; i < part.size(); ++i) {
      if (i) os << ' ';
      os << part[i];
    }
    os << '}';
  }
  return os.str();
}

NcPartition NcPartition::parse(const std::string& text, int n) {
  size_t pos = 0;
  std::vector<std::vector<int>> parts;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{')
    throw ParseError("expected '{'", pos);
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') break;
    ++pos;
    std::vector<int> part;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("missing '}'", pos);
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      size_t at = pos;
      if (text[pos] < '0' || text[pos] > '9')
        throw ParseError("expected an index", pos);
      int v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        v = v * 10 + (text[pos++] - '0');
      if (v >= n) throw ParseError("index out of range", at);
      part.push_back(v);
    }
    if (part.empty()) throw ParseError("empty part", pos);
    parts.push_back(std::move(part));
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  try {
    return make(n, std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

size_t NcPartition::hash() const {
  size_t h = 0x517cc1b727220a95ull;
  for (const auto& part : parts_) {
    for (int v : part) h = h * 1099511628211ull + static_cast<size_t>(v + 1);
    h = h * 1099511628211ull + 0xff;
  }
  return h;
}

NcPartition meet(const NcPartition& a, const NcPartition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet: size mismatch");
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int i = 0; i < a.size(); ++i)
    groups[{a.part_index(i), b.part_index(i)}].push_back(i);
  std::vector<std::vector<int>> parts;
  parts.reserve(groups.size());
  for (auto& [key, part] : groups) parts.push_back(std::move(part));
  return NcPartition::make(a.size(), std::move(parts));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

NcPartition join(const NcPartition& a, const NcPartition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("join: size mismatch");
  const int n = a.size();
  UnionFind uf(n);
  for (const auto& part : a.parts())
    for (size_t i = 1; i < part.size(); ++i) uf.merge(part[0], part[i]);
  for (const auto& part : b.parts())
    for (size_t i = 1; i < part.size(); ++i) uf.merge(part[0], part[i]);
  // Merge crossing parts of the common coarsening until none cross.  Every
  // non-crossing partition coarser than a and b stays coarser than the
  // current state, so the fixed point is the lattice join.
  for (;;) {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> parts;
    for (auto& [root, part] : by_root) parts.push_back(std::move(part));
    bool merged = false;
    for (size_t i = 0; i < parts.size() && !merged; ++i)
      for (size_t j = i + 1; j < parts.size() && !merged; ++j)
        if (parts_cross(parts[i], parts[j])) {
          uf.merge(parts[i][0], parts[j][0]);
          merged = true;
        }
    if (!merged) return NcPartition::make(n, std::move(parts));
  }
}

std::vector<std::vector<int>> cut_from(const std::vector<int>& nu,
                                       const std::vector<int>& nu_prime,
                                       int start) {
  if (nu_prime.empty()) throw std::invalid_argument("cut: empty cut set");
  std::vector<int> sorted_nu = nu;
  std::sort(sorted_nu.begin(), sorted_nu.end());
  std::vector<int> sorted_np = nu_prime;
  std::sort(sorted_np.begin(), sorted_np.end());
  if (!std::includes(sorted_nu.begin(), sorted_nu.end(), sorted_np.begin(),
                     sorted_np.end()))
    throw std::invalid_argument("cut: cut set is not a subset");
  if (!std::binary_search(sorted_np.begin(), sorted_np.end(), start))
    throw std::invalid_argument("cut: start not in the cut set");

  auto it = std::find(sorted_nu.begin(), sorted_nu.end(), start);
  std::vector<int> traversal(it, sorted_nu.end());
  traversal.insert(traversal.end(), sorted_nu.begin(), it);

  std::vector<std::vector<int>> parts;
  for (int v : traversal) {
    if (std::binary_search(sorted_np.begin(), sorted_np.end(), v))
      parts.emplace_back();
    parts.back().push_back(v);
  }
  canonicalize(parts);
  return parts;
}

std::vector<std::vector<int>> cut(const std::vector<int>& nu,
                                  const std::vector<int>& nu_prime) {
  if (nu_prime.empty()) throw std::invalid_argument("cut: empty cut set");
  int start = *std::min_element(nu_prime.begin(), nu_prime.end());
  return cut_from(nu, nu_prime, start);
}

namespace {

// Complement of the (non-trivial) fine parts inside the single part nu:
// cut nu at the first fine part, then recurse into each piece.  Mirrors the
// induction proving existence of the relative complement.
void complement_into(const std::vector<int>& nu,
                     const std::vector<std::vector<int>>& inner,
                     std::vector<std::vector<int>>& out) {
  if (inner.empty()) {
    out.push_back(nu);
    return;
  }
  const auto& first = inner.front();
  auto pieces = cut_from(nu, first, first.front());
  for (const auto& piece : pieces) {
    std::vector<std::vector<int>> sub;
    for (size_t i = 1; i < inner.size(); ++i) {
      const auto& cand = inner[i];
      bool in_piece =
          std::binary_search(piece.begin(), piece.end(), cand.front());
      if (in_piece) {
        for (int v : cand)
          if (!std::binary_search(piece.begin(), piece.end(), v))
            throw std::logic_error("complement: part straddles a cut piece");
        sub.push_back(cand);
      }
    }
    complement_into(piece, sub, out);
  }
}

}  // namespace

NcPartition rel_complement(const NcPartition& fine, const NcPartition& coarse) {
  if (fine.size() != coarse.size())
    throw std::invalid_argument("rel_complement: size mismatch");
  if (!fine.refines(coarse))
    throw std::invalid_argument("rel_complement: first argument must refine the second");
  std::vector<std::vector<int>> out;
  for (int p = 0; p < coarse.num_parts(); ++p) {
    const auto& nu = coarse.parts()[p];
    std::vector<std::vector<int>> inner;
    for (const auto& part : fine.parts())
      if (part.size() >= 2 && coarse.part_index(part.front()) == p)
        inner.push_back(part);
    complement_into(nu, inner, out);
  }
  return NcPartition::make(fine.size(), std::move(out));
}

NcPartition kreweras(const NcPartition& lambda) {
  return rel_complement(lambda, NcPartition::full(lambda.size()));
}

namespace {

void enumerate_rec(int n, int next,
                   std::vector<std::vector<int>>& current,
                   std::vector<NcPartition>& out) {
  if (next == n) {
    out.push_back(NcPartition::make(n, current));
    return;
  }
  for (size_t p = 0; p < current.size(); ++p) {
    current[p].push_back(next);
    bool ok = true;
    for (size_t q = 0; q < current.size() && ok; ++q)
      if (q != p && parts_cross(current[p], current[q])) ok = false;
    if (ok) enumerate_rec(n, next + 1, current, out);
    current[p].pop_back();
  }
  current.push_back({next});
  enumerate_rec(n, next + 1, current, out);
  current.pop_back();
}

}  // namespace

std::vector<NcPartition> enumerate_noncrossing(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  if (n > max_degree)
    throw ResourceLimitError("enumeration degree " + std::to_string(n) +
                             " exceeds the configured bound " +
                             std::to_string(max_degree));
  std::vector<NcPartition> out;
  std::vector<std::vector<int>> current;
  enumerate_rec(n, 0, current, out);
  std::sort(out.begin(), out.end(),
            [](const NcPartition& x, const NcPartition& y) {
              if (x.length() != y.length()) return x.length() < y.length();
              return x.parts() < y.parts();
            });
  return out;
}

}  // namespace garside
