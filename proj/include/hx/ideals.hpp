#pragma once

#include <optional>
#include <vector>

#include "hx/core.hpp"

namespace hx {

/// A hyperideal of a fixed parent structure: contains 0, is an m-ary
/// subhypergroup, and absorbs multiplication in every slot. The parent is
/// implied by usage; members.width() must equal the parent carrier size.
struct Hyperideal {
  Subset members;
  bool operator==(const Hyperideal&) const = default;
  bool operator<(const Hyperideal& o) const { return members < o.members; }
};

struct MultiplicativeSet {
  Subset members;  // nonempty, closed under g
};

/// Closure results carry the raw elementwise image alongside the generated
/// hyperideal, so callers can tell whether generation was needed.
struct IdealClosureResult {
  Subset raw;
  Hyperideal ideal;
  bool raw_was_ideal;
};

/// Three-clause hyperideal test; on failure *why names the broken clause
/// with a witness.
bool is_hyperideal(const FiniteHyperring& h, const Subset& x,
                   AxiomViolation* why = nullptr);

/// Least hyperideal containing the seed.
Hyperideal generated_hyperideal(const FiniteHyperring& h, const Subset& seed);

/// The principal hyperideal g(K, u, 1^(n-2)).
Hyperideal principal(const FiniteHyperring& h, Elem u);

/// All hyperideals, sorted by (cardinality, bit pattern). Throws
/// budget_error when the carrier exceeds carrier_cap.
std::vector<Hyperideal> enumerate_hyperideals(const FiniteHyperring& h,
                                              std::uint32_t carrier_cap = 12);

/// (P : u) = {a : g(a, u, 1^(n-2)) in P}.
Hyperideal colon(const FiniteHyperring& h, const Hyperideal& P, Elem u);
/// (P : Q) = {a : g(a, Q, 1^(n-2)) subset of P}.
Hyperideal colon_ideal(const FiniteHyperring& h, const Hyperideal& P,
                       const Hyperideal& Q);

/// Sum of m hyperideals: hyperideal generated by f(P_1, ..., P_m).
IdealClosureResult ideal_sum(const FiniteHyperring& h,
                             std::span<const Hyperideal> parts);
/// Product of n hyperideals: hyperideal generated by the elementwise image.
IdealClosureResult ideal_product(const FiniteHyperring& h,
                                 std::span<const Hyperideal> parts);
/// k-th generalized power, k = x(n-1)+1.
IdealClosureResult ideal_power(const FiniteHyperring& h, const Hyperideal& P,
                               std::uint32_t k);

/// Raw elementwise image of g over n hyperideals (no generation).
Subset ideal_product_raw(const FiniteHyperring& h,
                         std::span<const Hyperideal> parts);

/// Prime test; checks the elementwise form and the hyperideal-tuple form
/// and insists they agree. P must be proper.
bool is_prime(const FiniteHyperring& h, const Hyperideal& P);
bool is_primary(const FiniteHyperring& h, const Hyperideal& P);
bool is_maximal(const FiniteHyperring& h, const Hyperideal& P);
bool is_invertible(const FiniteHyperring& h, Elem u);
bool is_hyperintegral_domain(const FiniteHyperring& h);

/// Radical as the intersection of the primes containing P (K when none).
Hyperideal radical_by_primes(const FiniteHyperring& h, const Hyperideal& P);
/// Radical as the set of elements with some generalized power in P.
Hyperideal radical_by_powers(const FiniteHyperring& h, const Hyperideal& P);

bool is_multiplicative(const FiniteHyperring& h, const Subset& s);
/// All nonempty g-closed subsets up to size_cap, canonical order.
std::vector<Subset> enumerate_multiplicative_sets(const FiniteHyperring& h,
                                                  std::uint32_t size_cap);

}  // namespace hx
