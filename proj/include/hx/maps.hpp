#pragma once

#include <functional>
#include <map>
#include <string>

#include "hx/ideals.hpp"

namespace hx {

/// A named hyperideal-to-hyperideal map. Reductions shrink (phi(P) subset of
/// P), expansions grow (P subset of delta(P)); both are checked by
/// verify_contract rather than assumed.
struct IdealMap {
  std::string id;
  bool expansion = false;  // false: reduction
  std::function<Hyperideal(const FiniteHyperring&, const Hyperideal&)> eval;

  Hyperideal operator()(const FiniteHyperring& h, const Hyperideal& P) const {
    return eval(h, P);
  }
};

using ReductionFn = IdealMap;
using ExpansionFn = IdealMap;

/// Builtins: phi0 (constant {0}), phi1 (identity), phiN (generated image of
/// g over n copies), phiW (stabilized descending power chain), pow:k
/// (generalized k-th power, k = x(n-1)+1).
ReductionFn builtin_phi(const std::string& id);

/// Builtins: delta0 (identity), delta1 (radical), deltaK (constant K),
/// deltaM (intersection of maximal hyperideals above P; K when none).
ExpansionFn builtin_delta(const std::string& id);

bool is_builtin_phi_id(const std::string& id);
bool is_builtin_delta_id(const std::string& id);

/// User-supplied finite table keyed by hyperideal bit pattern. Every
/// hyperideal of the structure the map will be used with must be covered;
/// missing entries surface as input_error at evaluation time.
IdealMap table_map(const std::string& id, bool expansion,
                   std::map<std::uint64_t, std::uint64_t> table);

struct ContractViolation {
  std::string kind;  // "containment" | "monotonicity" | "not-ideal"
  Hyperideal P;
  Hyperideal Q;  // second argument for monotonicity, else == P
  std::string detail;
};

struct ContractReport {
  std::vector<ContractViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks containment (direction chosen by fn.expansion) and monotonicity
/// over every hyperideal pair of h, and that images are hyperideals.
ContractReport verify_contract(const IdealMap& fn, const FiniteHyperring& h);

/// Whether fn(fn(P)) == fn(P) for every hyperideal P of h.
bool is_idempotent_on(const IdealMap& fn, const FiniteHyperring& h);

}  // namespace hx
