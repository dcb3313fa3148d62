#include "garside/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {
namespace oracle {

RelationSet::RelationSet(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("relation set needs n >= 2");
  auto add = [&](Atom a, Atom b, Atom c, Atom d) {
    rules_[{a, b}].push_back({c, d});
    rules_[{c, d}].push_back({a, b});
  };
  // commuting pairs
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          std::vector<std::vector<int>> parts = {{i, j}, {k, l}};
          for (int v = 0; v < n; ++v)
            if (v != i && v != j && v != k && v != l) parts.push_back({v});
          if (NcPartition::is_noncrossing(n, parts))
            add({i, j}, {k, l}, {k, l}, {i, j});
        }
  // cyclic triples i < j < k:
  //   a(i,j) a(j,k) = a(j,k) a(i,k) = a(i,k) a(i,j)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        add({i, j}, {j, k}, {j, k}, {i, k});
        add({j, k}, {i, k}, {i, k}, {i, j});
        add({i, j}, {j, k}, {i, k}, {i, j});
      }
}

std::vector<Word> RelationSet::neighbors(const Word& w) const {
  std::vector<Word> out;
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    auto it = rules_.find({w[p], w[p + 1]});
    if (it == rules_.end()) continue;
    for (const auto& [c, d] : it->second) {
      Word next = w;
      next[p] = c;
      next[p + 1] = d;
      out.push_back(std::move(next));
    }
  }
  return out;
}

bool RelationSet::equivalent(const Word& w1, const Word& w2,
                             size_t limit) const {
  if (w1.size() != w2.size()) return false;
  if (w1 == w2) return true;
  std::set<Word> seen{w1};
  std::deque<Word> queue{w1};
  size_t expanded = 0;
  while (!queue.empty()) {
    if (++expanded > limit)
      throw ResourceLimitError("word closure exceeded the step bound");
    Word w = std::move(queue.front());
    queue.pop_front();
    for (Word& next : neighbors(w)) {
      if (next == w2) return true;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

std::set<Word> RelationSet::word_class(const Word& w, size_t limit) const {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  size_t expanded = 0;
  while (!queue.empty()) {
    if (++expanded > limit)
      throw ResourceLimitError("word closure exceeded the step bound");
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : neighbors(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return seen;
}

Word canonical_word(const NcPartition& p) {
  Word w;
  for (const auto& part : p.parts())
    for (size_t i = 0; i + 1 < part.size(); ++i)
      w.push_back({part[i], part[i + 1]});
  return w;
}

std::vector<Word> enumerate_simples_bf(int n, size_t limit) {
  if (n < 2 || n > 5)
    throw ResourceLimitError("brute-force simple enumeration supports 2 <= n <= 5");
  RelationSet rels(n);
  Word delta_word = canonical_word(NcPartition::full(n));
  std::set<Word> delta_class = rels.word_class(delta_word, limit);

  std::vector<Word> classes;
  std::set<Word> classified;
  // Prefix classes are closed under the rules, so classifying each fresh
  // prefix by its own closure is exhaustive.
  for (size_t len = 0; len <= delta_word.size(); ++len) {
    for (const Word& w : delta_class) {
      Word prefix(w.begin(), w.begin() + len);
      if (classified.count(prefix)) continue;
      std::set<Word> cls = rels.word_class(prefix, limit);
      classes.push_back(*cls.begin());
      classified.insert(cls.begin(), cls.end());
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace oracle
}  // namespace garside
