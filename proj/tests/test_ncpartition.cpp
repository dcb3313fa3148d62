#include <doctest.h>

#include <set>

#include "garside/errors.hpp"
#include "garside/ncpartition.hpp"
#include "support.hpp"

using namespace garside;

namespace {

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

NcPartition np(int n, std::vector<std::vector<int>> parts) {
  return NcPartition::make(n, std::move(parts));
}

}  // namespace

TEST_CASE("is_noncrossing detects crossing chords") {
  CHECK(NcPartition::is_noncrossing(4, {{0}, {1}, {2}, {3}}));
  CHECK_FALSE(NcPartition::is_noncrossing(4, {{0, 2}, {1, 3}}));
  CHECK(NcPartition::is_noncrossing(4, {{0, 1}, {2, 3}}));
  CHECK(NcPartition::is_noncrossing(4, {{0, 3}, {1, 2}}));
  CHECK(NcPartition::is_noncrossing(4, {{0, 1, 2, 3}}));

  CHECK_THROWS_AS(NcPartition::is_noncrossing(4, {{0, 1}, {1, 2}, {3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NcPartition::is_noncrossing(4, {{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NcPartition::is_noncrossing(3, {{0, 1, 4}}),
                  std::invalid_argument);
}

TEST_CASE("make fills singletons and rejects crossings") {
  CHECK(np(3, {{0, 1}}) == np(3, {{0, 1}, {2}}));
  CHECK_THROWS_AS(np(4, {{0, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("refines") {
  auto single3 = NcPartition::singletons(3);
  for (const auto& p : enumerate_noncrossing(3)) CHECK(single3.refines(p));
  CHECK(np(3, {{0, 1}}).refines(np(3, {{0, 1, 2}})));
  CHECK_FALSE(np(3, {{0, 1}}).refines(np(3, {{1, 2}})));
  CHECK_THROWS_AS(np(3, {{0, 1}}).refines(np(4, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("join handles the two atom configurations") {
  CHECK(join(np(4, {{0, 1}}), np(4, {{2, 3}})) == np(4, {{0, 1}, {2, 3}}));
  CHECK(join(np(4, {{0, 2}}), np(4, {{1, 3}})) == NcPartition::full(4));
  auto lambda = np(4, {{0, 3}, {1, 2}});
  CHECK(join(lambda, NcPartition::singletons(4)) == lambda);
}

TEST_CASE("meet is the common refinement") {
  auto lambda = np(4, {{0, 1, 2}});
  CHECK(meet(lambda, lambda) == lambda);
  CHECK(meet(np(4, {{0, 1, 2}}), np(4, {{1, 2, 3}})) == np(4, {{1, 2}}));
  CHECK(meet(np(3, {{0, 1}}), np(3, {{1, 2}})) == NcPartition::singletons(3));
}

TEST_CASE("length is size minus part count") {
  CHECK(NcPartition::singletons(5).length() == 0);
  CHECK(NcPartition::full(4).length() == 3);
  CHECK(np(4, {{0, 1}, {2, 3}}).length() == 2);
}

TEST_CASE("phi composes the per-part transposition chains") {
  CHECK(NcPartition::singletons(3).phi() == Permutation(3));
  CHECK(np(3, {{0, 1, 2}}).phi() == Permutation::from_one_line({2, 0, 1}));
  CHECK(np(4, {{0, 1}, {2, 3}}).phi() ==
        compose(Permutation::transposition(4, 0, 1),
                Permutation::transposition(4, 2, 3)));

  // against the definition, for every partition: the left-to-right product
  // of (z1 z2)(z2 z3)... per part
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_noncrossing(n)) {
      Permutation expected(n);
      for (const auto& part : p.parts())
        for (size_t i = 0; i + 1 < part.size(); ++i)
          expected = compose(expected,
                             Permutation::transposition(n, part[i], part[i + 1]));
      CHECK(p.phi() == expected);
    }
}

TEST_CASE("phi is injective with reflection length equal to partition length") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& p : enumerate_noncrossing(n)) {
      images.insert(p.phi().one_line());
      CHECK(p.phi().reflection_length() == p.length());
      auto back = NcPartition::from_perm(p.phi());
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
    CHECK(images.size() == static_cast<size_t>(catalan(n)));
  }
}

TEST_CASE("from_perm rejects wrong cycle direction") {
  CHECK(NcPartition::from_perm(Permutation(4)) == NcPartition::singletons(4));
  CHECK(NcPartition::from_perm(Permutation::from_one_line({2, 0, 1})) ==
        np(3, {{0, 1, 2}}));
  CHECK_FALSE(NcPartition::from_perm(Permutation::from_one_line({1, 2, 0})));
  // crossing orbits
  CHECK_FALSE(NcPartition::from_perm(
      compose(Permutation::transposition(4, 0, 2),
              Permutation::transposition(4, 1, 3))));
}

TEST_CASE("rotate shifts indices mod n") {
  auto lambda = np(3, {{0, 1}});
  CHECK(lambda.rotated(0) == lambda);
  CHECK(lambda.rotated(1) == np(3, {{1, 2}}));
  CHECK(np(6, {{0, 2, 4}}).rotated(2) == np(6, {{0, 2, 4}}));
  CHECK(lambda.rotated(-1) == np(3, {{0, 2}}));
}

TEST_CASE("rotate by one is a lattice automorphism of order n") {
  for (int n : {4, 5, 6}) {
    auto all = enumerate_noncrossing(n);
    for (const auto& p : all) {
      NcPartition q = p.rotated(1);
      for (int k = 1; k < n; ++k) q = q.rotated(1);
      CHECK(q == p);  // order divides n
    }
    // order is exactly n on some element
    bool moved = false;
    for (int k = 1; k < n; ++k)
      if (np(n, {{0, 1}}).rotated(k) != np(n, {{0, 1}})) moved = true;
    CHECK(moved);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(join(a, b).rotated(1) == join(a.rotated(1), b.rotated(1)));
        CHECK(meet(a, b).rotated(1) == meet(a.rotated(1), b.rotated(1)));
      }
  }
}

TEST_CASE("cut follows the circular traversal") {
  CHECK(cut({0, 1, 2}, {0, 1, 2}) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(cut({0, 1, 2, 3, 4, 5}, {0, 2, 5}) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}, {5}});
  CHECK(cut({0, 1, 2}, {0}) == std::vector<std::vector<int>>{{0, 1, 2}});

  CHECK_THROWS_AS(cut({0, 1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cut({0, 1, 2}, {3}), std::invalid_argument);
}

TEST_CASE("cut does not depend on the starting rotation and stays non-crossing") {
  // all subsets nu of {0..n-1}, all non-empty subsets nu' of nu, all starts
  for (int n = 3; n <= 6; ++n) {
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> nu;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) nu.push_back(i);
      if (nu.size() < 2) continue;
      for (int sub = 1; sub < (1 << nu.size()); ++sub) {
        std::vector<int> np_;
        for (size_t i = 0; i < nu.size(); ++i)
          if (sub & (1 << i)) np_.push_back(nu[i]);
        auto reference = cut_from(nu, np_, np_.front());
        for (int start : np_)
          CHECK(cut_from(nu, np_, start) == reference);
        // non-crossing as a partition of nu: relabel by rank within nu
        std::vector<std::vector<int>> ranked;
        for (const auto& piece : reference) {
          std::vector<int> part;
          for (int v : piece)
            part.push_back(static_cast<int>(
                std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()));
          ranked.push_back(part);
        }
        CHECK(NcPartition::is_noncrossing(static_cast<int>(nu.size()), ranked));
      }
    }
  }
}

TEST_CASE("relative complement satisfies the factorization identity") {
  auto single3 = NcPartition::singletons(3);
  CHECK(rel_complement(single3, np(3, {{0, 1, 2}})) == np(3, {{0, 1, 2}}));
  CHECK(rel_complement(np(3, {{0, 1}}), np(3, {{0, 1, 2}})) == np(3, {{1, 2}}));
  CHECK(rel_complement(np(4, {{1, 2}}), NcPartition::full(4)) ==
        np(4, {{0, 2, 3}}));
  CHECK_THROWS_AS(rel_complement(np(3, {{0, 1}}), np(3, {{1, 2}})),
                  std::invalid_argument);

  for (int n = 2; n <= 6; ++n) {
    auto all = enumerate_noncrossing(n);
    for (const auto& fine : all)
      for (const auto& coarse : all) {
        if (!fine.refines(coarse)) continue;
        NcPartition c = rel_complement(fine, coarse);
        CHECK(compose(fine.phi(), c.phi()) == coarse.phi());
        CHECK(fine.length() + c.length() == coarse.length());
      }
  }
}

TEST_CASE("kreweras complement is a bijection with complementary length") {
  for (int n = 2; n <= 6; ++n) {
    auto all = enumerate_noncrossing(n);
    std::set<std::vector<std::vector<int>>> images;
    for (const auto& p : all) {
      NcPartition k = kreweras(p);
      CHECK(p.length() + k.length() == n - 1);
      images.insert(k.parts());
    }
    CHECK(images.size() == all.size());
  }
}

TEST_CASE("enumeration matches the brute-force filter and Catalan counts") {
  CHECK(enumerate_noncrossing(1).size() == 1);
  CHECK(enumerate_noncrossing(3).size() == 5);
  CHECK(enumerate_noncrossing(4).size() == 14);

  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto& parts : testing::all_set_partitions(n))
      if (NcPartition::is_noncrossing(n, parts))
        expected.insert(NcPartition::make(n, parts).parts());
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& p : enumerate_noncrossing(n)) got.insert(p.parts());
    CHECK(got == expected);
    CHECK(got.size() == static_cast<size_t>(catalan(n)));
  }

  CHECK_THROWS_AS(enumerate_noncrossing(13), ResourceLimitError);
}

TEST_CASE("lattice laws and order compatibility") {
  for (int n = 2; n <= 4; ++n) {
    auto all = enumerate_noncrossing(n);
    for (const auto& a : all) {
      CHECK(join(a, a) == a);
      CHECK(meet(a, a) == a);
      for (const auto& b : all) {
        CHECK(join(a, b) == join(b, a));
        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(a, meet(a, b)) == a);  // absorption
        CHECK(meet(a, join(a, b)) == a);
        CHECK(a.refines(b) == (meet(a, b) == a));
        CHECK(a.refines(b) == (join(a, b) == b));
        if (a.refines(b) && !(a == b)) CHECK(a.length() < b.length());
        for (const auto& c : all) {
          CHECK(join(join(a, b), c) == join(a, join(b, c)));
          CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        }
      }
    }
  }
}

TEST_CASE("meet and join agree with the definitional extrema") {
  for (int n = 2; n <= 6; ++n) {
    auto all = enumerate_noncrossing(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        NcPartition m = meet(a, b);
        NcPartition j = join(a, b);
        for (const auto& c : all) {
          if (c.refines(a) && c.refines(b)) CHECK(c.refines(m));
          if (a.refines(c) && b.refines(c)) CHECK(j.refines(c));
        }
        CHECK((m.refines(a) && m.refines(b)));
        CHECK((a.refines(j) && b.refines(j)));
      }
  }
}

TEST_CASE("text form round trips") {
  auto p = np(6, {{0, 1, 3}, {4, 5}});
  CHECK(p.str() == "{0 1 3}{2}{4 5}");
  CHECK(NcPartition::parse(p.str(), 6) == p);
  CHECK(NcPartition::parse("{0 1 3}{4 5}", 6) == p);  // singletons implied
  for (int n = 2; n <= 5; ++n)
    for (const auto& q : enumerate_noncrossing(n))
      CHECK(NcPartition::parse(q.str(), n) == q);
  CHECK_THROWS_AS(NcPartition::parse("{0 2}{1 3}", 4), ParseError);
  CHECK_THROWS_AS(NcPartition::parse("{0 9}", 4), ParseError);
  CHECK_THROWS_AS(NcPartition::parse("{0 1", 4), ParseError);
}
