#pragma once

#include "hx/maps.hpp"

namespace hx {

// ---------------------------------------------------------------------------
// Direct product of two structures with the same arities.
// ---------------------------------------------------------------------------

struct ProductStructure {
  FiniteHyperring structure;
  std::uint32_t size1 = 0, size2 = 0;

  Elem pair(Elem a, Elem b) const { return a * size2 + b; }
  Elem first(Elem e) const { return e / size2; }
  Elem second(Elem e) const { return e % size2; }
};

/// Componentwise product; carrier indexed by (a,b) -> a*|K2|+b. Validated.
ProductStructure direct_product(const FiniteHyperring& h1,
                                const FiniteHyperring& h2);

/// Whether X = P1 x P2 for some subsets; on success returns the factors.
bool factorize_product_subset(const ProductStructure& pr, const Subset& x,
                              Subset* p1, Subset* p2);

Subset product_subset(const ProductStructure& pr, const Subset& p1,
                      const Subset& p2);

/// Factorwise map on product hyperideals: applies fn1/fn2 to the factors
/// and rebuilds the product. Throws construction_error on a hyperideal
/// that does not factor.
IdealMap product_map(const ProductStructure& pr, const FiniteHyperring& h1,
                     const FiniteHyperring& h2, const IdealMap& fn1,
                     const IdealMap& fn2);

// ---------------------------------------------------------------------------
// Localization (structure of fractions).
// ---------------------------------------------------------------------------

struct FractionStructure {
  FiniteHyperring structure;  // carrier = equivalence classes of (a,s)
  MultiplicativeSet S;        // in the base structure
  std::vector<Elem> class_of;        // flat index a*|S elements| -> class
  std::vector<Elem> s_values;        // elements of S, canonical order
  std::vector<std::pair<Elem, Elem>> rep;  // class -> representative (a,s)

  Elem cls(Elem a, Elem s_index) const {
    return class_of[a * s_values.size() + s_index];
  }
  /// Canonical map a -> a/s0 scaled so that it is a/1 when 1 in S.
  Elem canonical(Elem a) const { return canonical_[a]; }
  std::vector<Elem> canonical_;
};

/// Quotient of K x S by the witnessed relation: (a,s) ~ (b,t) iff some
/// u in S has 0 in g(u, f(g(a,t,1^(n-2)), -g(b,s,1^(n-2)), 0^(m-2)),
/// 1^(n-2)). Transitivity and well-definedness of the induced operations
/// are checked, not assumed. The result is re-validated.
FractionStructure localize(const FiniteHyperring& h, const MultiplicativeSet& S);

/// S^-1 P: classes of (a,s) with a in P.
Hyperideal extend_ideal(const FiniteHyperring& h, const FractionStructure& fr,
                        const Hyperideal& P);
/// S^-1 P intersected with K via the canonical map's preimage.
Hyperideal contract_ideal(const FiniteHyperring& h, const FractionStructure& fr,
                          const Hyperideal& Q);
/// phi_S / delta_S: contract, apply, extend. Hyperideals of the fraction
/// structure that are not extensions are handled by contracting anyway
/// (c(e(P)) pattern); contract-then-extend is checked by the caller where
/// a theorem requires it.
IdealMap localized_map(const FiniteHyperring& h, const FractionStructure& fr,
                       const IdealMap& fn);

// ---------------------------------------------------------------------------
// Homomorphisms.
// ---------------------------------------------------------------------------

struct Homomorphism {
  const FiniteHyperring* source = nullptr;
  const FiniteHyperring* target = nullptr;
  std::vector<Elem> map;  // total on the source carrier

  Elem operator()(Elem a) const { return map[a]; }
};

struct HomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Preserves f elementwise into hypervalue images, preserves g, 0 -> 0,
/// 1 -> 1.
HomReport check_homomorphism(const Homomorphism& k);
bool is_epimorphism(const Homomorphism& k);

Hyperideal preimage(const Homomorphism& k, const Hyperideal& P2);

/// For each hyperideal Q of the target: phi(k^{-1}(Q)) == k^{-1}(psi(Q))
/// and delta(k^{-1}(Q)) == k^{-1}(gamma(Q)).
HomReport check_map_compatibility(const Homomorphism& k, const IdealMap& phi,
                                  const IdealMap& psi, const IdealMap& delta,
                                  const IdealMap& gamma);

}  // namespace hx
