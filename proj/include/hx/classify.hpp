#pragma once

#include <optional>
#include <string>

#include "hx/maps.hpp"

namespace hx {

enum class Verdict { holds, holds_on_sample, vacuous, fails };

std::string to_string(Verdict v);

/// A concrete counterexample: a tuple whose product lands in the tested
/// region while every per-slot consequent fails for the recorded s.
struct Refutation {
  std::vector<Elem> tuple;                // elementwise refuter (empty if ideal form)
  std::vector<Hyperideal> ideal_tuple;    // hyperideal-tuple refuter (strongly)
  Elem s = 0;
  std::string detail;
};

struct Classification {
  Verdict verdict = Verdict::fails;
  std::optional<Elem> witness_s;
  std::optional<Refutation> refutation;
  bool ok() const { return verdict != Verdict::fails; }
};

/// Mode: a disengaged optional means search every s of S in canonical
/// order; an engaged one fixes s (which must lie in S).

/// Antecedent g(u_1^n) in P \ phi(P); consequent for some slot i:
/// g(u_i, s, 1^(n-2)) in P or g(u_1^{i-1}, s, u_{i+1}^n) in delta(P).
Classification is_phi_delta_S_primary(const FiniteHyperring& h,
                                      const Hyperideal& P,
                                      const ReductionFn& phi,
                                      const ExpansionFn& delta,
                                      const MultiplicativeSet& S,
                                      std::optional<Elem> fixed_s = {});

/// Same shape quantified over n-tuples of hyperideals. Antecedent is read
/// as: raw image inside P and not inside phi(P) (the literal set
/// difference is unsatisfiable because every image contains 0).
Classification is_strongly_phi_delta_S_primary(const FiniteHyperring& h,
                                               const Hyperideal& P,
                                               const ReductionFn& phi,
                                               const ExpansionFn& delta,
                                               const MultiplicativeSet& S,
                                               std::optional<Elem> fixed_s = {});

/// Specializations named in the literature. Each forwards to the same
/// kernel with the appropriate excluded region, second consequent and
/// multiplier.
Classification is_delta_primary(const FiniteHyperring& h, const Hyperideal& P,
                                const ExpansionFn& delta);
Classification is_delta_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                                  const ExpansionFn& delta,
                                  const MultiplicativeSet& S,
                                  std::optional<Elem> fixed_s = {});
Classification is_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                            const MultiplicativeSet& S,
                            std::optional<Elem> fixed_s = {});
Classification is_weakly_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                                   const MultiplicativeSet& S,
                                   std::optional<Elem> fixed_s = {});
Classification is_phi_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                                const ReductionFn& phi,
                                const MultiplicativeSet& S,
                                std::optional<Elem> fixed_s = {});
Classification is_phi_delta_primary(const FiniteHyperring& h,
                                    const Hyperideal& P, const ReductionFn& phi,
                                    const ExpansionFn& delta);

/// Re-checks a claimed elementwise refutation against the definition; true
/// when replaying it reproduces "fails" for its recorded s.
bool replay_refutation(const FiniteHyperring& h, const Hyperideal& P,
                       const Subset& exclude, const Subset& consequent2,
                       const Refutation& r);

}  // namespace hx
