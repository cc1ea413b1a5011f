#include "hx/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hx {

namespace {

// Absorption image: all g(u_1^(n-1), p) for p in X and u tuples over K.
// Commutativity lets us fix the slot.
Subset absorb_image(const FiniteHyperring& h, const Subset& x) {
  Subset out = Subset::empty_set(h.size());
  std::vector<Subset> args(h.n(), h.full());
  x.for_each([&](Elem p) {
    args[h.n() - 1] = Subset::singleton(h.size(), p);
    out |= h.g_subsets(args);
  });
  return out;
}

Subset f_closure_step(const FiniteHyperring& h, const Subset& x) {
  if (x.is_empty()) return x;
  std::vector<Subset> args(h.m(), x);
  return h.f_subsets(args);
}

Subset neg_image(const FiniteHyperring& h, const Subset& x) {
  Subset out = Subset::empty_set(h.size());
  x.for_each([&](Elem e) { out.add(h.neg(e)); });
  return out;
}

}  // namespace

bool is_hyperideal(const FiniteHyperring& h, const Subset& x, AxiomViolation* why) {
  h.require_validated();
  if (!x.contains(h.zero())) {
    if (why) *why = {"contains-zero", {}, "0 missing"};
    return false;
  }
  Subset negs = neg_image(h, x);
  if (!negs.subset_of(x)) {
    Elem w = negs.minus(x).elements().front();
    if (why) *why = {"negation-closed", {w}, "negation escapes the subset"};
    return false;
  }
  Subset fstep = f_closure_step(h, x);
  if (!fstep.subset_of(x)) {
    Elem w = fstep.minus(x).elements().front();
    if (why) *why = {"f-closed", {w}, "hypersum escapes the subset"};
    return false;
  }
  Subset absorbed = absorb_image(h, x);
  if (!absorbed.subset_of(x)) {
    Elem w = absorbed.minus(x).elements().front();
    if (why) *why = {"absorbing", {w}, "product with the carrier escapes"};
    return false;
  }
  return true;
}

Hyperideal generated_hyperideal(const FiniteHyperring& h, const Subset& seed) {
  h.require_validated();
  Subset cur = seed;
  cur.add(h.zero());
  while (true) {
    Subset next = cur;
    next |= neg_image(h, cur);
    next |= f_closure_step(h, cur);
    next |= absorb_image(h, cur);
    if (next == cur) break;
    cur = next;
  }
  return Hyperideal{cur};
}

Hyperideal principal(const FiniteHyperring& h, Elem u) {
  h.require_validated();
  Subset out = Subset::empty_set(h.size());
  for (Elem a = 0; a < h.size(); ++a) out.add(h.mul(a, u));
  return Hyperideal{out};
}

std::vector<Hyperideal> enumerate_hyperideals(const FiniteHyperring& h,
                                              std::uint32_t carrier_cap) {
  h.require_validated();
  if (h.size() > carrier_cap)
    throw budget_error("carrier size " + std::to_string(h.size()) +
                       " exceeds enumeration cap " + std::to_string(carrier_cap));
  // Lattice generation: grow each known hyperideal by one element and close.
  std::set<std::uint64_t> seen;
  std::vector<Hyperideal> out;
  std::vector<Hyperideal> frontier{generated_hyperideal(h, Subset::empty_set(h.size()))};
  seen.insert(frontier[0].members.bits());
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Hyperideal> next;
    for (const Hyperideal& I : frontier) {
      for (Elem e = 0; e < h.size(); ++e) {
        if (I.members.contains(e)) continue;
        Subset seed = I.members;
        seed.add(e);
        Hyperideal J = generated_hyperideal(h, seed);
        if (seen.insert(J.members.bits()).second) {
          out.push_back(J);
          next.push_back(J);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Hyperideal colon(const FiniteHyperring& h, const Hyperideal& P, Elem u) {
  h.require_validated();
  Subset out = Subset::empty_set(h.size());
  for (Elem a = 0; a < h.size(); ++a)
    if (P.members.contains(h.mul(a, u))) out.add(a);
  return Hyperideal{out};
}

Hyperideal colon_ideal(const FiniteHyperring& h, const Hyperideal& P,
                       const Hyperideal& Q) {
  h.require_validated();
  Subset out = Subset::empty_set(h.size());
  for (Elem a = 0; a < h.size(); ++a) {
    bool all_in = true;
    Q.members.for_each([&](Elem q) {
      if (!P.members.contains(h.mul(a, q))) all_in = false;
    });
    if (all_in) out.add(a);
  }
  return Hyperideal{out};
}

namespace {

IdealClosureResult close_image(const FiniteHyperring& h, Subset raw) {
  bool raw_ok = is_hyperideal(h, raw);
  Hyperideal gen = raw_ok ? Hyperideal{raw} : generated_hyperideal(h, raw);
  return IdealClosureResult{raw, gen, raw_ok};
}

}  // namespace

IdealClosureResult ideal_sum(const FiniteHyperring& h,
                             std::span<const Hyperideal> parts) {
  h.require_validated();
  if (parts.size() != h.m()) throw input_error("ideal_sum expects m hyperideals");
  std::vector<Subset> args;
  for (const auto& p : parts) args.push_back(p.members);
  return close_image(h, h.f_subsets(args));
}

Subset ideal_product_raw(const FiniteHyperring& h,
                         std::span<const Hyperideal> parts) {
  if (parts.size() != h.n()) throw input_error("ideal_product expects n hyperideals");
  std::vector<Subset> args;
  for (const auto& p : parts) args.push_back(p.members);
  return h.g_subsets(args);
}

IdealClosureResult ideal_product(const FiniteHyperring& h,
                                 std::span<const Hyperideal> parts) {
  h.require_validated();
  return close_image(h, ideal_product_raw(h, parts));
}

IdealClosureResult ideal_power(const FiniteHyperring& h, const Hyperideal& P,
                               std::uint32_t k) {
  h.require_validated();
  if (k == 0 || (k - 1) % (h.n() - 1) != 0)
    throw input_error("power exponent must be x(n-1)+1");
  std::uint32_t x = (k - 1) / (h.n() - 1);
  if (x == 0) return IdealClosureResult{P.members, P, true};
  std::vector<Subset> args(k, P.members);
  return close_image(h, h.g_iterated_subsets(x, args));
}

bool is_prime(const FiniteHyperring& h, const Hyperideal& P) {
  h.require_validated();
  if (P.members == h.full()) throw precondition_error("prime test needs a proper hyperideal");
  bool elementwise = true;
  for_each_tuple(h.size(), h.n(), [&](std::span<const Elem> t) {
    if (!elementwise) return;
    if (!P.members.contains(h.g(t))) return;
    for (Elem u : t)
      if (P.members.contains(u)) return;
    elementwise = false;
  });
  // Hyperideal-tuple form must agree (the two are provably equivalent; a
  // disagreement means a bug somewhere).
  bool tuple_form = true;
  auto lattice = enumerate_hyperideals(h, h.size());
  std::vector<std::size_t> idx(h.n(), 0);
  while (tuple_form) {
    std::vector<Hyperideal> parts;
    for (std::size_t i : idx) parts.push_back(lattice[i]);
    if (ideal_product_raw(h, parts).subset_of(P.members)) {
      bool some_inside = false;
      for (const auto& part : parts)
        if (part.members.subset_of(P.members)) some_inside = true;
      if (!some_inside) tuple_form = false;
    }
    std::uint32_t i = 0;
    for (; i < h.n(); ++i) {
      if (++idx[i] < lattice.size()) break;
      idx[i] = 0;
    }
    if (i == h.n()) break;
  }
  if (elementwise != tuple_form)
    throw construction_error("prime forms disagree; internal inconsistency");
  return elementwise;
}

bool is_primary(const FiniteHyperring& h, const Hyperideal& P) {
  h.require_validated();
  if (P.members == h.full()) throw precondition_error("primary test needs a proper hyperideal");
  Hyperideal rad = radical_by_primes(h, P);
  bool ok = true;
  for_each_tuple(h.size(), h.n(), [&](std::span<const Elem> t) {
    if (!ok) return;
    if (!P.members.contains(h.g(t))) return;
    for (std::uint32_t i = 0; i < h.n(); ++i) {
      if (P.members.contains(t[i])) return;
      std::vector<Elem> rest;
      for (std::uint32_t j = 0; j < h.n(); ++j) rest.push_back(j == i ? h.one() : t[j]);
      if (rad.members.contains(h.g(rest))) return;
    }
    ok = false;
  });
  return ok;
}

bool is_maximal(const FiniteHyperring& h, const Hyperideal& P) {
  h.require_validated();
  if (P.members == h.full()) return false;
  for (const Hyperideal& Q : enumerate_hyperideals(h, h.size())) {
    if (Q.members == h.full()) continue;
    if (P.members.proper_subset_of(Q.members)) return false;
  }
  return true;
}

bool is_invertible(const FiniteHyperring& h, Elem u) {
  h.require_validated();
  for (Elem v = 0; v < h.size(); ++v)
    if (h.mul(u, v) == h.one()) return true;
  return false;
}

bool is_hyperintegral_domain(const FiniteHyperring& h) {
  h.require_validated();
  bool ok = true;
  for_each_tuple(h.size(), h.n(), [&](std::span<const Elem> t) {
    if (!ok) return;
    if (h.g(t) != h.zero()) return;
    for (Elem u : t)
      if (u == h.zero()) return;
    ok = false;
  });
  return ok;
}

Hyperideal radical_by_primes(const FiniteHyperring& h, const Hyperideal& P) {
  h.require_validated();
  Subset out = h.full();
  bool any = false;
  for (const Hyperideal& Q : enumerate_hyperideals(h, h.size())) {
    if (Q.members == h.full()) continue;
    if (!P.members.subset_of(Q.members)) continue;
    if (!is_prime(h, Q)) continue;
    out &= Q.members;
    any = true;
  }
  return any ? Hyperideal{out} : Hyperideal{h.full()};
}

Hyperideal radical_by_powers(const FiniteHyperring& h, const Hyperideal& P) {
  h.require_validated();
  Subset out = Subset::empty_set(h.size());
  const std::uint32_t n = h.n();
  for (Elem u = 0; u < h.size(); ++u) {
    bool member = false;
    // r <= n: g(u^(r), 1^(n-r)).
    for (std::uint32_t r = 1; r <= n && !member; ++r) {
      std::vector<Elem> t(n, h.one());
      for (std::uint32_t i = 0; i < r; ++i) t[i] = u;
      if (P.members.contains(h.g(t))) member = true;
    }
    // r = x(n-1)+1: iterate the chain q_{x+1} = g(q_x, u^(n-1)) until a
    // value repeats; the carrier is finite, so this stabilizes.
    if (!member) {
      std::vector<Elem> first(n, u);
      Elem q = h.g(first);
      Subset visited = Subset::empty_set(h.size());
      while (!visited.contains(q)) {
        visited.add(q);
        if (P.members.contains(q)) {
          member = true;
          break;
        }
        std::vector<Elem> t(n, u);
        t[0] = q;
        q = h.g(t);
      }
    }
    if (member) out.add(u);
  }
  return Hyperideal{out};
}

bool is_multiplicative(const FiniteHyperring& h, const Subset& s) {
  h.require_validated();
  if (s.is_empty()) return false;
  bool ok = true;
  auto elems = s.elements();
  std::vector<std::size_t> idx(h.n(), 0);
  while (ok) {
    std::vector<Elem> t;
    for (std::size_t i : idx) t.push_back(elems[i]);
    if (!s.contains(h.g(t))) ok = false;
    std::uint32_t i = 0;
    for (; i < h.n(); ++i) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
    if (i == h.n()) break;
  }
  return ok;
}

std::vector<Subset> enumerate_multiplicative_sets(const FiniteHyperring& h,
                                                  std::uint32_t size_cap) {
  h.require_validated();
  std::vector<Subset> out;
  // Subsets in increasing cardinality via direct enumeration; carriers are
  // small enough that scanning all 2^N masks is fine below ~24 elements.
  if (h.size() <= 24) {
    for (std::uint64_t mask = 1; mask < (1ULL << h.size()); ++mask) {
      Subset s(h.size(), mask);
      if (static_cast<std::uint32_t>(s.count()) > size_cap) continue;
      if (is_multiplicative(h, s)) out.push_back(s);
    }
  } else {
    throw budget_error("multiplicative-set enumeration capped at 24 elements");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hx
