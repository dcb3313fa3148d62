#include "garside/verify.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "garside/bkl.hpp"
#include "garside/engine.hpp"
#include "garside/errors.hpp"
#include "garside/oracle.hpp"

namespace garside {

namespace {

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

VerifyReport verify_against_oracle(int n, int max_len, size_t limit) {
  if (n < 2 || n > 5)
    throw ResourceLimitError("oracle verification supports 2 <= n <= 5");
  if (max_len < 1) max_len = 1;
  VerifyReport report;
  auto check = [&](bool ok, const std::string& text) {
    report.checks.push_back({ok, text});
  };

  BklInstance inst(n);
  oracle::RelationSet rels(n);

  // 1. brute-force simple enumeration vs Catalan
  {
    auto classes = oracle::enumerate_simples_bf(n, limit);
    std::ostringstream os;
    os << "simples n=" << n << ": brute force " << classes.size()
       << ", engine " << inst.num_simples() << ", catalan " << catalan(n);
    check(static_cast<long>(classes.size()) == catalan(n) &&
              inst.num_simples() == static_cast<int>(classes.size()),
          os.str());
  }

  // 2. word-space agreement, one flood fill per length
  const auto& atoms = inst.atoms();
  const int num_atoms = static_cast<int>(atoms.size());
  std::vector<oracle::Atom> atom_pairs;
  for (SimpleId a : atoms)
    for (const auto& part : inst.partition(a).parts())
      if (part.size() == 2) atom_pairs.push_back({part[0], part[1]});

  for (int len = 1; len <= max_len; ++len) {
    double space = 1;
    for (int i = 0; i < len; ++i) space *= num_atoms;
    if (space > static_cast<double>(limit))
      throw ResourceLimitError("word space exceeds the step bound");
    const size_t total = static_cast<size_t>(space);

    auto decode = [&](size_t id) {
      oracle::Word w(len);
      for (int p = 0; p < len; ++p) {
        w[p] = atom_pairs[id % num_atoms];
        id /= num_atoms;
      }
      return w;
    };
    std::map<oracle::Atom, int> atom_index;
    for (int i = 0; i < num_atoms; ++i) atom_index[atom_pairs[i]] = i;
    auto encode = [&](const oracle::Word& w) {
      size_t id = 0;
      for (int p = len - 1; p >= 0; --p) id = id * num_atoms + atom_index[w[p]];
      return id;
    };

    UnionFind uf(total);
    for (size_t id = 0; id < total; ++id) {
      oracle::Word w = decode(id);
      for (const auto& next : rels.neighbors(w))
        uf.merge(static_cast<int>(id), static_cast<int>(encode(next)));
    }

    // engine normal form per word; components and keys must coincide
    std::map<int, std::vector<SimpleId>> key_of_root;
    std::map<std::vector<SimpleId>, int> root_of_key;
    size_t mismatches = 0;
    for (size_t id = 0; id < total; ++id) {
      oracle::Word w = decode(id);
      std::vector<SimpleId> word;
      for (const auto& [i, j] : w) word.push_back(inst.atom(i, j));
      NormalForm nf = normal_form(inst, word);
      int root = uf.find(static_cast<int>(id));
      auto [it, fresh] = key_of_root.try_emplace(root, nf.factors);
      if (!fresh && it->second != nf.factors) ++mismatches;
      auto [it2, fresh2] = root_of_key.try_emplace(nf.factors, root);
      if (!fresh2 && it2->second != root) ++mismatches;
    }
    std::ostringstream os;
    os << "words n=" << n << " len=" << len << ": " << total << " words, "
       << key_of_root.size() << " classes, " << mismatches << " mismatches";
    check(mismatches == 0, os.str());
  }

  // 3. partial product vs presentation rewriting, all simple pairs
  if (n > 4) {
    check(true, "products n=" + std::to_string(n) +
                    ": skipped (closure too large; exhaustive for n <= 4)");
  } else {
    size_t mismatches = 0, checked = 0;
    for (SimpleId a = 0; a < inst.num_simples(); ++a)
      for (SimpleId b = 0; b < inst.num_simples(); ++b) {
        oracle::Word concat = oracle::canonical_word(inst.partition(a));
        oracle::Word wb = oracle::canonical_word(inst.partition(b));
        concat.insert(concat.end(), wb.begin(), wb.end());
        auto cls = rels.word_class(concat, limit);
        auto expected = inst.product(a, b);
        bool found_any = false;
        for (SimpleId cand = 0; cand < inst.num_simples(); ++cand) {
          if (inst.length(cand) !=
              static_cast<int>(concat.size()))
            continue;
          bool is_equal = cls.count(oracle::canonical_word(inst.partition(cand))) > 0;
          if (is_equal) {
            found_any = true;
            if (!expected || *expected != cand) ++mismatches;
          }
        }
        if (expected && !found_any) ++mismatches;
        ++checked;
      }
    std::ostringstream os;
    os << "products n=" << n << ": " << checked << " simple pairs, "
       << mismatches << " mismatches";
    check(mismatches == 0, os.str());
  }

  return report;
}

}  // namespace garside
