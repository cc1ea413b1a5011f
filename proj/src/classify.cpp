#include "hx/classify.hpp"

namespace hx {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_on_sample: return "holds_on_sample";
    case Verdict::vacuous: return "vacuous";
    case Verdict::fails: return "fails";
  }
  return "?";
}

namespace {

void require_admissible(const FiniteHyperring& h, const Hyperideal& P,
                        const MultiplicativeSet& S,
                        std::optional<Elem> fixed_s) {
  h.require_validated();
  if (P.members == h.full())
    throw precondition_error("classification needs a proper hyperideal");
  if (!is_hyperideal(h, P.members))
    throw precondition_error("classification input is not a hyperideal");
  if (!is_multiplicative(h, S.members))
    throw input_error("S is not a multiplicative set");
  if (P.members.intersects(S.members))
    throw precondition_error("P and S must be disjoint");
  if (fixed_s && !S.members.contains(*fixed_s))
    throw input_error("fixed s must belong to S");
}

// True when slot-wise consequents hold for the tuple under multiplier s.
bool consequent_ok(const FiniteHyperring& h, const Hyperideal& P,
                   const Subset& cons2, std::span<const Elem> t, Elem s) {
  for (std::uint32_t i = 0; i < h.n(); ++i) {
    if (P.members.contains(h.mul(t[i], s))) return true;
    std::vector<Elem> swapped(t.begin(), t.end());
    swapped[i] = s;
    if (cons2.contains(h.g(swapped))) return true;
  }
  return false;
}

// Shared elementwise kernel: antecedent g(t) in P minus `exclude`;
// consequent as in consequent_ok with second region `cons2`.
Classification classify_elementwise(const FiniteHyperring& h,
                                    const Hyperideal& P, const Subset& exclude,
                                    const Subset& cons2,
                                    const MultiplicativeSet& S,
                                    std::optional<Elem> fixed_s) {
  std::vector<std::vector<Elem>> antecedents;
  for_each_tuple(h.size(), h.n(), [&](std::span<const Elem> t) {
    Elem v = h.g(t);
    if (P.members.contains(v) && !exclude.contains(v))
      antecedents.emplace_back(t.begin(), t.end());
  });
  if (antecedents.empty()) return {Verdict::vacuous, {}, {}};

  std::vector<Elem> candidates =
      fixed_s ? std::vector<Elem>{*fixed_s} : S.members.elements();
  std::optional<Refutation> first_refutation;
  for (Elem s : candidates) {
    bool all_ok = true;
    for (const auto& t : antecedents) {
      if (!consequent_ok(h, P, cons2, t, s)) {
        all_ok = false;
        if (!first_refutation)
          first_refutation = Refutation{t, {}, s,
                                        "both consequents fail in every slot"};
        break;
      }
    }
    if (all_ok) return {Verdict::holds, s, {}};
  }
  return {Verdict::fails, {}, first_refutation};
}

bool subset_consequent_ok(const FiniteHyperring& h, const Hyperideal& P,
                          const Subset& cons2,
                          std::span<const Hyperideal> parts, Elem s) {
  Subset ssing = Subset::singleton(h.size(), s);
  for (std::uint32_t i = 0; i < h.n(); ++i) {
    std::vector<Subset> first(h.n(), Subset::singleton(h.size(), h.one()));
    first[0] = parts[i].members;
    first[1] = ssing;
    if (h.g_subsets(first).subset_of(P.members)) return true;
    std::vector<Subset> second;
    for (std::uint32_t j = 0; j < h.n(); ++j)
      second.push_back(j == i ? ssing : parts[j].members);
    if (h.g_subsets(second).subset_of(cons2)) return true;
  }
  return false;
}

}  // namespace

Classification is_phi_delta_S_primary(const FiniteHyperring& h,
                                      const Hyperideal& P,
                                      const ReductionFn& phi,
                                      const ExpansionFn& delta,
                                      const MultiplicativeSet& S,
                                      std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  return classify_elementwise(h, P, phi(h, P).members, delta(h, P).members, S,
                              fixed_s);
}

Classification is_strongly_phi_delta_S_primary(const FiniteHyperring& h,
                                               const Hyperideal& P,
                                               const ReductionFn& phi,
                                               const ExpansionFn& delta,
                                               const MultiplicativeSet& S,
                                               std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  Subset ph = phi(h, P).members;
  Subset de = delta(h, P).members;
  auto lattice = enumerate_hyperideals(h, h.size());

  std::vector<std::vector<Hyperideal>> antecedents;
  std::vector<std::size_t> idx(h.n(), 0);
  while (true) {
    std::vector<Hyperideal> parts;
    for (std::size_t i : idx) parts.push_back(lattice[i]);
    Subset img = ideal_product_raw(h, parts);
    if (img.subset_of(P.members) && !img.subset_of(ph))
      antecedents.push_back(parts);
    std::uint32_t i = 0;
    for (; i < h.n(); ++i) {
      if (++idx[i] < lattice.size()) break;
      idx[i] = 0;
    }
    if (i == h.n()) break;
  }
  if (antecedents.empty()) return {Verdict::vacuous, {}, {}};

  std::vector<Elem> candidates =
      fixed_s ? std::vector<Elem>{*fixed_s} : S.members.elements();
  std::optional<Refutation> first_refutation;
  for (Elem s : candidates) {
    bool all_ok = true;
    for (const auto& parts : antecedents) {
      if (!subset_consequent_ok(h, P, de, parts, s)) {
        all_ok = false;
        if (!first_refutation)
          first_refutation =
              Refutation{{}, parts, s, "both consequents fail in every slot"};
        break;
      }
    }
    if (all_ok) return {Verdict::holds, s, {}};
  }
  return {Verdict::fails, {}, first_refutation};
}

Classification is_delta_primary(const FiniteHyperring& h, const Hyperideal& P,
                                const ExpansionFn& delta) {
  MultiplicativeSet one{Subset::singleton(h.size(), h.one())};
  require_admissible(h, P, one, {});
  return classify_elementwise(h, P, Subset::empty_set(h.size()),
                              delta(h, P).members, one, h.one());
}

Classification is_delta_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                                  const ExpansionFn& delta,
                                  const MultiplicativeSet& S,
                                  std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  return classify_elementwise(h, P, Subset::empty_set(h.size()),
                              delta(h, P).members, S, fixed_s);
}

Classification is_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                            const MultiplicativeSet& S,
                            std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  return classify_elementwise(h, P, Subset::empty_set(h.size()),
                              radical_by_primes(h, P).members, S, fixed_s);
}

Classification is_weakly_S_primary(const FiniteHyperring& h,
                                   const Hyperideal& P,
                                   const MultiplicativeSet& S,
                                   std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  return classify_elementwise(h, P, Subset::singleton(h.size(), h.zero()),
                              radical_by_primes(h, P).members, S, fixed_s);
}

Classification is_phi_S_primary(const FiniteHyperring& h, const Hyperideal& P,
                                const ReductionFn& phi,
                                const MultiplicativeSet& S,
                                std::optional<Elem> fixed_s) {
  require_admissible(h, P, S, fixed_s);
  return classify_elementwise(h, P, phi(h, P).members,
                              radical_by_primes(h, P).members, S, fixed_s);
}

Classification is_phi_delta_primary(const FiniteHyperring& h,
                                    const Hyperideal& P, const ReductionFn& phi,
                                    const ExpansionFn& delta) {
  MultiplicativeSet one{Subset::singleton(h.size(), h.one())};
  require_admissible(h, P, one, {});
  return classify_elementwise(h, P, phi(h, P).members, delta(h, P).members,
                              one, h.one());
}

bool replay_refutation(const FiniteHyperring& h, const Hyperideal& P,
                       const Subset& exclude, const Subset& consequent2,
                       const Refutation& r) {
  if (r.tuple.size() != h.n()) return false;
  Elem v = h.g(r.tuple);
  if (!P.members.contains(v) || exclude.contains(v)) return false;
  return !consequent_ok(h, P, consequent2, r.tuple, r.s);
}

}  // namespace hx
