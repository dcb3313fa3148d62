#ifndef GARSIDE_TESTS_SUPPORT_HPP
#define GARSIDE_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/engine.hpp"
#include "garside/ncpartition.hpp"

namespace garside {
namespace testing {

/// Outcome of the exhaustive axiom checks for one instance.
struct AxiomReport {
  int failures = 0;
  std::vector<std::string> details;

  void fail(const std::string& what) {
    ++failures;
    if (details.size() < 20) details.push_back(what);
  }
};

/// Exhaustive checks of the atomic-partial-product and pre-Garside axioms
/// over an explicit simple list: unit/associativity, atom characterization,
/// length grading, conditional lcms on both sides, the delta discharge of
/// the common-multiple axiom, and bounded cancellation.
AxiomReport check_axioms(const Instance& inst,
                         const std::vector<SimpleId>& simples);

/// All simples of an Artin instance (interns every permutation).
std::vector<SimpleId> all_artin_simples(const ArtinInstance& inst);

/// All simples of a BKL instance.
std::vector<SimpleId> all_bkl_simples(const BklInstance& inst);

/// Atoms of the submonoid of rotation-fixed simples, computed from the
/// definition alone: fixed non-unit simples that are not products of two
/// fixed non-unit simples.  Independent of the orbit-lcm procedure.
std::vector<NcPartition> fixed_submonoid_atoms_bf(const BklInstance& inst,
                                                  int shift);

/// All set partitions of {0,...,n-1} (restricted growth enumeration);
/// the independent oracle behind the non-crossing enumeration tests.
std::vector<std::vector<std::vector<int>>> all_set_partitions(int n);

/// Deterministic random positive word over the atoms.
std::vector<SimpleId> random_positive_word(const Instance& inst, int max_len,
                                           std::mt19937& rng);

/// Deterministic random signed band-atom word.
std::vector<std::pair<SimpleId, int>> random_signed_word(const Instance& inst,
                                                         int max_len,
                                                         std::mt19937& rng);

}  // namespace testing
}  // namespace garside

#endif
