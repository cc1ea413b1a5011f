#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hx/classify.hpp"
#include "hx/construct.hpp"

namespace hx {

/// Caps for the corpus sweep. Enumeration is exhaustive within these
/// limits; exceeding one marks the affected report partial instead of
/// silently truncating.
struct SweepBudget {
  std::uint32_t max_mulset_size = 4;       // multiplicative sets in sweeps
  std::uint32_t localize_mulset_size = 3;  // corpus localization fan-out
  std::uint32_t carrier_cap = 16;          // elements per swept structure
  std::uint32_t lattice_cap = 64;          // hyperideals per structure
  // Direct-product properties multiply two map sweeps and two
  // multiplicative-set sweeps, so they run over trimmed lists.
  std::uint32_t product_map_count = 3;     // leading reductions per factor
  std::uint32_t product_delta_count = 2;   // leading expansions per factor
  std::uint32_t product_mulset_size = 2;   // multiplicative sets per factor
  std::uint32_t max_violations = 100;      // stored per report
  bool include_products = true;
  bool include_localizations = true;
};

struct CorpusEntry {
  std::string id;
  std::string kind;  // "base" | "product" | "localization"
  FiniteHyperring h;
  // Indices of the factor entries when kind == "product", else -1.
  int factor1 = -1;
  int factor2 = -1;
};

/// The bundled three-element (2,2)-structure: carrier {0, 1, u} with
/// 1 + 1 = K, u + u = {0, u}, 1 + u = {1} and u * u = 0.
FiniteHyperring three_element_demo();

/// Bundled corpus: the three-element structure ("k3"), Z_k-derived
/// structures for k in {2,3,4,6,8}, pairwise direct products of the
/// members with at most four elements, and localizations of every base
/// member at each multiplicative set of bounded size containing 1.
std::vector<CorpusEntry> build_corpus(const SweepBudget& budget = {});

struct InstanceWitness {
  std::string structure;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  std::string title;
  std::uint64_t total = 0;           // instances enumerated
  std::uint64_t hypothesis_met = 0;  // instances passing the filter
  std::uint64_t filtered = 0;        // set aside for reasons listed in notes
  std::vector<InstanceWitness> violations;
  std::vector<std::string> notes;
  double wall_time_ms = 0;
  bool partial = false;
  bool confirmed() const { return violations.empty(); }
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

TheoremReport run_theorem(const std::string& id,
                          const std::vector<CorpusEntry>& corpus,
                          const SweepBudget& budget = {});
std::vector<TheoremReport> run_all(const std::vector<CorpusEntry>& corpus,
                                   const SweepBudget& budget = {});

/// Replay notes for the big modular structures whose carriers are far
/// beyond the 64-element tabulation cap; they run in witness mode only.
std::vector<std::string> witness_mode_notes();

}  // namespace hx
