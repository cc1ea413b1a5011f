#include "hx/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "hx/analytic.hpp"
#include "hx/ideals.hpp"

namespace hx {

namespace {

std::string set_text(const FiniteHyperring& h, const Subset& x) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](Elem e) {
    if (!first) out += ",";
    out += h.label(e);
    first = false;
  });
  return out + "}";
}

// -------------------------------------------------------------------------
// Per-structure sweep context: lattice, multiplicative sets, map values and
// memoized classifications. Everything downstream reads through this cache.
// -------------------------------------------------------------------------

struct Ctx {
  const CorpusEntry* e = nullptr;
  const FiniteHyperring* h = nullptr;
  bool usable = true;
  std::string skip_reason;

  std::vector<Hyperideal> lattice;
  std::vector<MultiplicativeSet> mulsets;
  std::vector<IdealMap> phis, deltas;
  std::vector<std::vector<Hyperideal>> phi_of, delta_of;  // [map][lattice idx]
  std::vector<bool> phi_const;  // phi(I) identical across the lattice
  std::vector<bool> phi_idem;   // phi(phi(I)) == phi(I) across the lattice
  std::map<std::uint64_t, std::size_t> index_of;
  std::map<std::uint64_t, Hyperideal> rad_memo;
  std::map<std::string, std::optional<Classification>> cls_memo;
  std::map<std::uint64_t, std::optional<FractionStructure>> frac_memo;
  std::optional<ProductStructure> prod;  // set for product entries

  std::size_t idx(const Hyperideal& P) const {
    return index_of.at(P.members.bits());
  }
  const Hyperideal& phi(std::size_t pi, const Hyperideal& P) const {
    return phi_of[pi][idx(P)];
  }
  const Hyperideal& delta(std::size_t di, const Hyperideal& P) const {
    return delta_of[di][idx(P)];
  }
};

const Hyperideal& rad(Ctx& c, const Hyperideal& P) {
  auto it = c.rad_memo.find(P.members.bits());
  if (it == c.rad_memo.end())
    it = c.rad_memo.emplace(P.members.bits(), radical_by_primes(*c.h, P)).first;
  return it->second;
}

template <typename Fn>
std::optional<Classification> attempt(Fn&& fn) {
  try {
    return fn();
  } catch (const precondition_error&) {
    return std::nullopt;
  } catch (const input_error&) {
    return std::nullopt;
  }
}

const std::optional<Classification>& cls_custom(
    Ctx& c, const std::string& key,
    const std::function<Classification()>& make) {
  auto it = c.cls_memo.find(key);
  if (it == c.cls_memo.end())
    it = c.cls_memo.emplace(key, attempt(make)).first;
  return it->second;
}

std::string skey(const char* tag, const Hyperideal& P, std::size_t pi,
                 std::size_t di, std::uint64_t sbits, std::optional<Elem> s) {
  std::string k = tag;
  k += ':' + std::to_string(P.members.bits()) + ':' + std::to_string(pi) +
       ':' + std::to_string(di) + ':' + std::to_string(sbits) + ':' +
       (s ? std::to_string(*s) : std::string("*"));
  return k;
}

const std::optional<Classification>& cls_pds(Ctx& c, std::size_t pi,
                                             std::size_t di,
                                             const Hyperideal& P,
                                             const MultiplicativeSet& S,
                                             std::optional<Elem> s) {
  return cls_custom(c, skey("pds", P, pi, di, S.members.bits(), s), [&] {
    return is_phi_delta_S_primary(*c.h, P, c.phis[pi], c.deltas[di], S, s);
  });
}

const std::optional<Classification>& cls_strong(Ctx& c, std::size_t pi,
                                                std::size_t di,
                                                const Hyperideal& P,
                                                const MultiplicativeSet& S,
                                                std::optional<Elem> s) {
  return cls_custom(c, skey("str", P, pi, di, S.members.bits(), s), [&] {
    return is_strongly_phi_delta_S_primary(*c.h, P, c.phis[pi], c.deltas[di],
                                           S, s);
  });
}

const std::optional<Classification>& cls_ds(Ctx& c, std::size_t di,
                                            const Hyperideal& P,
                                            const MultiplicativeSet& S,
                                            std::optional<Elem> s) {
  return cls_custom(c, skey("ds", P, 0, di, S.members.bits(), s), [&] {
    return is_delta_S_primary(*c.h, P, c.deltas[di], S, s);
  });
}

const std::optional<Classification>& cls_ps(Ctx& c, std::size_t pi,
                                            const Hyperideal& P,
                                            const MultiplicativeSet& S,
                                            std::optional<Elem> s) {
  return cls_custom(c, skey("ps", P, pi, 0, S.members.bits(), s), [&] {
    return is_phi_S_primary(*c.h, P, c.phis[pi], S, s);
  });
}

const std::optional<Classification>& cls_d(Ctx& c, std::size_t di,
                                           const Hyperideal& P) {
  return cls_custom(c, skey("d", P, 0, di, 0, {}), [&] {
    return is_delta_primary(*c.h, P, c.deltas[di]);
  });
}

bool holds(const std::optional<Classification>& cl) {
  return cl.has_value() && cl->ok();
}

std::string why(const std::optional<Classification>& cl) {
  if (!cl) return "not admissible";
  if (cl->refutation) return cl->refutation->detail;
  return to_string(cl->verdict);
}

const std::optional<FractionStructure>& fraction(Ctx& c,
                                                 const MultiplicativeSet& S) {
  auto it = c.frac_memo.find(S.members.bits());
  if (it == c.frac_memo.end()) {
    std::optional<FractionStructure> fr;
    try {
      fr = localize(*c.h, S);
    } catch (const std::runtime_error&) {
      fr = std::nullopt;
    }
    it = c.frac_memo.emplace(S.members.bits(), std::move(fr)).first;
  }
  return it->second;
}

Subset raw_power(const FiniteHyperring& h, const Hyperideal& P,
                 std::uint32_t k) {
  std::vector<Hyperideal> parts(k, P);
  return ideal_product_raw(h, parts);
}

// Fold-product of a subset list; equals the g-image padded with 1_K.
Subset sub_prod(const FiniteHyperring& h, std::vector<Subset> parts) {
  return h.prod_subsets(parts);
}

Elem power_n(const FiniteHyperring& h, Elem s) {
  std::vector<Elem> args(h.n(), s);
  return h.g(args);
}

struct Pool {
  const SweepBudget* b = nullptr;
  std::vector<Ctx> ctxs;
};

Ctx make_ctx(const CorpusEntry& e, const Pool& pool, const SweepBudget& b) {
  Ctx c;
  c.e = &e;
  c.h = &e.h;
  if (e.h.size() > b.carrier_cap) {
    c.usable = false;
    c.skip_reason = e.id + ": carrier exceeds sweep cap, skipped";
    return c;
  }
  if (!e.h.validate().ok()) {
    c.usable = false;
    c.skip_reason = e.id + ": failed validation, skipped";
    return c;
  }
  try {
    c.lattice = enumerate_hyperideals(e.h, b.carrier_cap);
  } catch (const budget_error&) {
    c.usable = false;
    c.skip_reason = e.id + ": hyperideal enumeration over budget, skipped";
    return c;
  }
  if (c.lattice.size() > b.lattice_cap) {
    c.usable = false;
    c.skip_reason = e.id + ": lattice exceeds sweep cap, skipped";
    return c;
  }
  for (std::size_t i = 0; i < c.lattice.size(); ++i)
    c.index_of[c.lattice[i].members.bits()] = i;
  for (const Subset& s : enumerate_multiplicative_sets(e.h, b.max_mulset_size))
    c.mulsets.push_back(MultiplicativeSet{s});

  std::vector<std::string> phi_ids = {"phi0", "phi1", "phiN", "phiW"};
  phi_ids.push_back("pow:" + std::to_string(2 * (e.h.n() - 1) + 1));
  for (const auto& id : phi_ids) c.phis.push_back(builtin_phi(id));
  for (const char* id : {"delta0", "delta1", "deltaK", "deltaM"})
    c.deltas.push_back(builtin_delta(id));

  c.phi_of.resize(c.phis.size());
  for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
    for (const auto& P : c.lattice)
      c.phi_of[pi].push_back(c.phis[pi](e.h, P));
  c.delta_of.resize(c.deltas.size());
  for (std::size_t di = 0; di < c.deltas.size(); ++di)
    for (const auto& P : c.lattice)
      c.delta_of[di].push_back(c.deltas[di](e.h, P));

  for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
    bool cst = true, idem = true;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      if (c.phi_of[pi][li] != c.phi_of[pi][0]) cst = false;
      if (c.phi(pi, c.phi_of[pi][li]) != c.phi_of[pi][li]) idem = false;
    }
    c.phi_const.push_back(cst);
    c.phi_idem.push_back(idem);
  }

  if (e.kind == "product" && e.factor1 >= 0 && e.factor2 >= 0) {
    std::uint32_t s1 = pool.ctxs[e.factor1].h->size();
    std::uint32_t s2 = pool.ctxs[e.factor2].h->size();
    c.prod = ProductStructure{e.h, s1, s2};
  }
  return c;
}

Pool build_pool(const std::vector<CorpusEntry>& corpus,
                const SweepBudget& b) {
  Pool pool;
  pool.b = &b;
  pool.ctxs.reserve(corpus.size());
  for (const auto& e : corpus) pool.ctxs.push_back(make_ctx(e, pool, b));
  return pool;
}

void note_once(TheoremReport& r, const std::string& note) {
  if (std::find(r.notes.begin(), r.notes.end(), note) == r.notes.end())
    r.notes.push_back(note);
}

void record(TheoremReport& r, const SweepBudget& b, const std::string& sid,
            std::string detail) {
  if (r.violations.size() < b.max_violations) {
    r.violations.push_back({sid, std::move(detail)});
  } else {
    r.partial = true;
    note_once(r, "violation list truncated at budget cap");
  }
}

template <typename Fn>
void for_each_ctx(Pool& pool, TheoremReport& r, Fn&& fn) {
  for (auto& c : pool.ctxs) {
    if (!c.usable) {
      r.partial = true;
      note_once(r, c.skip_reason);
      continue;
    }
    fn(c);
  }
}

std::string inst_text(Ctx& c, const Hyperideal& P, std::size_t pi,
                      std::size_t di, const MultiplicativeSet& S,
                      std::optional<Elem> s) {
  std::string out = "P=" + set_text(*c.h, P.members) + " phi=" +
                    c.phis[pi].id + " delta=" + c.deltas[di].id +
                    " S=" + set_text(*c.h, S.members);
  if (s) out += " s=" + c.h->label(*s);
  return out;
}

// -------------------------------------------------------------------------
// T01/T02: the radical of a (reduced-expanded) S-primary hyperideal stays
// primary of the same kind, provided the radical commutes upward with both
// maps: rad(phi(P)) inside phi(rad(P)) and rad(delta(P)) inside
// delta(rad(P)).
// -------------------------------------------------------------------------

void t01(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      const Hyperideal rP = rad(c, P);
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di) {
          bool side =
              rad(c, c.phi_of[pi][li]).members.subset_of(
                  c.phi(pi, rP).members) &&
              rad(c, c.delta_of[di][li]).members.subset_of(
                  c.delta(di, rP).members);
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              const auto& base = cls_pds(c, pi, di, P, S, s);
              if (!side || !holds(base)) continue;
              ++r.hypothesis_met;
              const auto& concl = cls_pds(c, pi, di, rP, S, s);
              if (!holds(concl))
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) + " rad(P)=" +
                           set_text(*c.h, rP.members) + " : " + why(concl));
            }
        }
    }
  });
}

void t02(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      const Hyperideal rP = rad(c, P);
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
        bool side = rad(c, c.phi_of[pi][li])
                        .members.subset_of(c.phi(pi, rP).members);
        for (const auto& S : c.mulsets)
          for (Elem s : S.members.elements()) {
            ++r.total;
            if (!side || !holds(cls_ps(c, pi, P, S, s))) continue;
            ++r.hypothesis_met;
            const auto& concl = cls_ps(c, pi, rP, S, s);
            if (!holds(concl))
              record(r, *pool.b, c.e->id,
                     inst_text(c, P, pi, 1, S, s) + " rad(P)=" +
                         set_text(*c.h, rP.members) + " : " + why(concl));
          }
      }
    }
  });
}

// -------------------------------------------------------------------------
// T03: colon ideals of the radical avoid S outside (rad(P) : s), given a
// colon-domination condition on phi(rad(P)).
// -------------------------------------------------------------------------

void t03(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      const Hyperideal rP = rad(c, P);
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
        bool side = rad(c, c.phi_of[pi][li])
                        .members.subset_of(c.phi(pi, rP).members);
        const Hyperideal phirP = c.phi(pi, rP);
        for (const auto& S : c.mulsets)
          for (Elem s : S.members.elements()) {
            ++r.total;
            if (!side || !holds(cls_ps(c, pi, P, S, s))) continue;
            bool dom = true;
            const Hyperideal cs = colon(h, phirP, s);
            for (Elem t : S.members.elements())
              if (!colon(h, phirP, t).members.subset_of(cs.members))
                dom = false;
            if (!dom) continue;
            ++r.hypothesis_met;
            const Hyperideal rs = colon(h, rP, s);
            for (Elem u = 0; u < h.size(); ++u) {
              if (rs.members.contains(u)) continue;
              if (colon(h, rP, u).members.intersects(S.members)) {
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, 1, S, s) + " u=" + h.label(u) +
                           " : (rad(P):u) meets S");
                break;
              }
            }
          }
      }
    }
  });
}

// -------------------------------------------------------------------------
// T04: when (delta(P):s) agrees with (rad(P):s), colon at s is stable under
// replacing s by g(s^n), and colon ideals of delta(P) avoid S off (delta(P):s).
// -------------------------------------------------------------------------

void t04(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      const Hyperideal rP = rad(c, P);
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
        const Hyperideal phirP = c.phi(pi, rP);
        for (std::size_t di = 0; di < c.deltas.size(); ++di) {
          const Hyperideal& dP = c.delta_of[di][li];
          if (!dP.members.subset_of(rP.members)) {
            r.total += [&] {
              std::uint64_t n = 0;
              for (const auto& S : c.mulsets) n += S.members.count();
              return n;
            }();
            continue;
          }
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!holds(cls_pds(c, pi, di, P, S, s))) continue;
              if (colon(h, dP, s) != colon(h, rP, s)) continue;
              bool dom = true;
              const Hyperideal cs = colon(h, phirP, s);
              for (Elem t : S.members.elements())
                if (!colon(h, phirP, t).members.subset_of(cs.members))
                  dom = false;
              if (!dom) continue;
              ++r.hypothesis_met;
              const Hyperideal ds = colon(h, dP, s);
              if (ds != colon(h, dP, power_n(h, s))) {
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) +
                           " : (delta(P):s) != (delta(P):g(s^n))");
                continue;
              }
              for (Elem u = 0; u < h.size(); ++u) {
                if (ds.members.contains(u)) continue;
                if (colon(h, dP, u).members.intersects(S.members)) {
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) + " u=" + h.label(u) +
                             " : (delta(P):u) meets S");
                  break;
                }
              }
            }
        }
      }
    }
  });
}

// -------------------------------------------------------------------------
// T05/T06: colon dichotomy. Off (delta(P) : g(s^n)) (resp. (rad(P) : s)),
// the colon at g(s,u,1^(n-2)) collapses to the phi-side colon or to (P : s).
// -------------------------------------------------------------------------

void colon_dichotomy(Pool& pool, TheoremReport& r, bool use_delta) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
        const Hyperideal& phiP = c.phi_of[pi][li];
        std::size_t dmax = use_delta ? c.deltas.size() : 1;
        for (std::size_t di = 0; di < dmax; ++di) {
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              bool base = use_delta ? holds(cls_pds(c, pi, di, P, S, s))
                                    : holds(cls_ps(c, pi, P, S, s));
              if (!base) continue;
              ++r.hypothesis_met;
              const Hyperideal guard =
                  use_delta ? colon(h, c.delta_of[di][li], power_n(h, s))
                            : colon(h, rad(c, P), s);
              const Hyperideal ps = colon(h, P, s);
              for (Elem u = 0; u < h.size(); ++u) {
                if (guard.members.contains(u)) continue;
                Elem su = h.mul(s, u);
                const Hyperideal a = colon(h, P, su);
                if (a == colon(h, phiP, su) || a == ps) continue;
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, use_delta ? di : 1, S, s) +
                           " u=" + h.label(u) + " : colon dichotomy fails");
                break;
              }
            }
        }
      }
    }
  });
}

void t05(Pool& pool, TheoremReport& r) { colon_dichotomy(pool, r, true); }
void t06(Pool& pool, TheoremReport& r) { colon_dichotomy(pool, r, false); }

// -------------------------------------------------------------------------
// T07: (P : u) inherits the classification when the phi-side colon is
// dominated by phi of the colon. Improper or S-meeting colons are counted
// as filtered rather than judged.
// -------------------------------------------------------------------------

void t07(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi) {
        const Hyperideal& phiP = c.phi_of[pi][li];
        bool dom = true;
        for (Elem u = 0; u < h.size() && dom; ++u) {
          if (P.members.contains(u)) continue;
          if (!colon(h, phiP, u)
                   .members.subset_of(c.phi(pi, colon(h, P, u)).members))
            dom = false;
        }
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!dom || !holds(cls_pds(c, pi, di, P, S, s))) continue;
              ++r.hypothesis_met;
              for (Elem u = 0; u < h.size(); ++u) {
                const Hyperideal Pu = colon(h, P, u);
                if (Pu.members == h.full() ||
                    Pu.members.intersects(S.members)) {
                  ++r.filtered;
                  continue;
                }
                const auto& concl = cls_pds(c, pi, di, Pu, S, s);
                if (!holds(concl)) {
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) + " u=" + h.label(u) +
                             " (P:u)=" + set_text(h, Pu.members) + " : " +
                             why(concl));
                  break;
                }
              }
            }
        }
    }
  });
  note_once(r, "colons that are improper or meet S are counted as filtered");
}

// -------------------------------------------------------------------------
// T08/T09: intersection with an S-meeting hyperideal, and products with
// S-meeting hyperideals, stay primary when phi is constant and delta
// distributes as intersection.
// -------------------------------------------------------------------------

void t08(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements())
              for (const auto& Q : c.lattice) {
                ++r.total;
                if (!c.phi_const[pi]) continue;
                if (!Q.members.intersects(S.members)) continue;
                if (!holds(cls_pds(c, pi, di, P, S, s))) continue;
                const Hyperideal PQ{P.members & Q.members};
                if (c.delta(di, PQ).members !=
                    (c.delta_of[di][li].members & c.delta(di, Q).members))
                  continue;
                ++r.hypothesis_met;
                const auto& concl = cls_pds(c, pi, di, PQ, S, {});
                if (!holds(concl))
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) + " Q=" +
                             set_text(*c.h, Q.members) + " : " + why(concl));
              }
    }
  });
}

void t09(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements())
              for_each_tuple(
                  static_cast<std::uint32_t>(c.lattice.size()), h.n() - 1,
                  [&](std::span<const Elem> pick) {
                    ++r.total;
                    if (!c.phi_const[pi]) return;
                    if (!holds(cls_pds(c, pi, di, P, S, s))) return;
                    std::vector<Hyperideal> parts;
                    Subset inter = c.delta_of[di][li].members;
                    bool all_meet = true;
                    for (Elem j : pick) {
                      parts.push_back(c.lattice[j]);
                      if (!c.lattice[j].members.intersects(S.members))
                        all_meet = false;
                      inter &= c.delta(di, c.lattice[j]).members;
                    }
                    if (!all_meet) return;
                    parts.push_back(P);
                    const Hyperideal prod = ideal_product(h, parts).ideal;
                    if (c.delta(di, prod).members != inter) return;
                    ++r.hypothesis_met;
                    const auto& concl = cls_pds(c, pi, di, prod, S, {});
                    if (!holds(concl))
                      record(r, *pool.b, c.e->id,
                             inst_text(c, P, pi, di, S, s) + " product=" +
                                 set_text(h, prod.members) + " : " +
                                 why(concl));
                  });
    }
  });
}

// -------------------------------------------------------------------------
// T10: for an idempotent reduction, "every reduced-expanded S-primary
// hyperideal is expanded-primary" is equivalent to "every image phi(P) is
// expanded-primary and every expanded S-primary hyperideal is
// expanded-primary". T11 is the same statement at phi0/delta1.
// -------------------------------------------------------------------------

struct CollapseSides {
  bool lhs = true, rhs_img = true, rhs_s = true;
  std::string lhs_w, img_w, s_w;
};

CollapseSides collapse_sides(Ctx& c, std::size_t pi, std::size_t di,
                             const MultiplicativeSet& S) {
  CollapseSides out;
  const auto& h = *c.h;
  for (std::size_t li = 0; li < c.lattice.size(); ++li) {
    const Hyperideal& P = c.lattice[li];
    const auto& cp = cls_pds(c, pi, di, P, S, {});
    if (cp && cp->ok() && !holds(cls_d(c, di, P))) {
      out.lhs = false;
      out.lhs_w = set_text(h, P.members);
    }
    const Hyperideal& fp = c.phi_of[pi][li];
    if (fp.members != h.full() && !fp.members.intersects(S.members) &&
        !holds(cls_d(c, di, fp))) {
      out.rhs_img = false;
      out.img_w = set_text(h, fp.members);
    }
    const auto& cd = cls_ds(c, di, P, S, {});
    if (cd && cd->ok() && !holds(cls_d(c, di, P))) {
      out.rhs_s = false;
      out.s_w = set_text(h, P.members);
    }
  }
  return out;
}

void t10(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
      for (std::size_t di = 0; di < c.deltas.size(); ++di)
        for (const auto& S : c.mulsets) {
          ++r.total;
          if (!c.phi_idem[pi]) continue;
          ++r.hypothesis_met;
          CollapseSides cs = collapse_sides(c, pi, di, S);
          if (cs.lhs != (cs.rhs_img && cs.rhs_s))
            record(r, *pool.b, c.e->id,
                   "phi=" + c.phis[pi].id + " delta=" + c.deltas[di].id +
                       " S=" + set_text(*c.h, S.members) +
                       " : equivalence fails (lhs=" +
                       (cs.lhs ? "true" : "false " + cs.lhs_w) +
                       ", image side=" +
                       (cs.rhs_img ? "true" : "false " + cs.img_w) +
                       ", S side=" + (cs.rhs_s ? "true" : "false " + cs.s_w) +
                       ")");
        }
  });
  note_once(r, "image clause scoped to proper images disjoint from S");
}

void t11(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const std::size_t pi = 0;  // phi0
    const std::size_t di = 1;  // delta1 (radical expansion)
    for (const auto& S : c.mulsets) {
      ++r.total;
      ++r.hypothesis_met;
      CollapseSides cs = collapse_sides(c, pi, di, S);
      if (cs.lhs != (cs.rhs_img && cs.rhs_s))
        record(r, *pool.b, c.e->id,
               "S=" + set_text(*c.h, S.members) +
                   " : equivalence fails (weakly side=" +
                   (cs.lhs ? "true" : "false " + cs.lhs_w) +
                   ", zero-image side=" +
                   (cs.rhs_img ? "true" : "false " + cs.img_w) +
                   ", S-primary side=" +
                   (cs.rhs_s ? "true" : "false " + cs.s_w) + ")");
      if (cs.rhs_img != is_hyperintegral_domain(*c.h))
        note_once(r, c.e->id +
                          ": zero-image primariness differs from the "
                          "hyperintegral-domain phrasing; the instantiated "
                          "equivalence is what is checked");
    }
  });
}

// -------------------------------------------------------------------------
// T12: shrinking the multiplicative set preserves the classification when
// every element of the larger set divides back into the smaller one.
// -------------------------------------------------------------------------

void t12(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (const auto& S : c.mulsets)
      for (const auto& T : c.mulsets) {
        if (!S.members.subset_of(T.members)) continue;
        bool divides = true;
        for (Elem s : T.members.elements()) {
          std::vector<Elem> args(h.n() - 1, s);
          Elem sp = h.prod(args);
          bool found = false;
          for (Elem t : T.members.elements())
            if (S.members.contains(h.mul(sp, t))) found = true;
          if (!found) divides = false;
        }
        for (std::size_t li = 0; li < c.lattice.size(); ++li)
          for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
            for (std::size_t di = 0; di < c.deltas.size(); ++di) {
              ++r.total;
              if (!divides) continue;
              const Hyperideal& P = c.lattice[li];
              if (!holds(cls_pds(c, pi, di, P, T, {}))) continue;
              ++r.hypothesis_met;
              const auto& concl = cls_pds(c, pi, di, P, S, {});
              if (!holds(concl))
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, {}) + " T=" +
                           set_text(h, T.members) + " : " + why(concl));
            }
      }
  });
}

// -------------------------------------------------------------------------
// T13: replacing S by the set of elements with invertible image in the
// fraction structure does not change the classification.
// -------------------------------------------------------------------------

void t13(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (const auto& S : c.mulsets) {
      if (!S.members.contains(h.one())) continue;
      const auto& fro = fraction(c, S);
      if (!fro) {
        note_once(r, c.e->id + ": localization unavailable at " +
                          set_text(h, S.members) + ", instances filtered");
        continue;
      }
      const FractionStructure& fr = *fro;
      std::size_t one_si = 0;
      for (std::size_t i = 0; i < fr.s_values.size(); ++i)
        if (fr.s_values[i] == h.one()) one_si = i;
      Subset sp = Subset::empty_set(h.size());
      for (Elem a = 0; a < h.size(); ++a)
        if (is_invertible(fr.structure,
                          fr.cls(a, static_cast<Elem>(one_si))))
          sp.add(a);
      const MultiplicativeSet Sp{sp};
      for (std::size_t li = 0; li < c.lattice.size(); ++li)
        for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
          for (std::size_t di = 0; di < c.deltas.size(); ++di) {
            ++r.total;
            const Hyperideal& P = c.lattice[li];
            const auto& a = cls_pds(c, pi, di, P, S, {});
            const auto& b = cls_pds(c, pi, di, P, Sp, {});
            if (!a.has_value() && !b.has_value()) continue;
            if (a.has_value() != b.has_value()) {
              ++r.filtered;
              continue;
            }
            ++r.hypothesis_met;
            if (a->ok() != b->ok())
              record(r, *pool.b, c.e->id,
                     inst_text(c, P, pi, di, S, {}) + " S'=" +
                         set_text(h, sp) + " : classifications disagree (" +
                         to_string(a->verdict) + " vs " +
                         to_string(b->verdict) + ")");
          }
    }
  });
  note_once(r,
            "instances admissible for exactly one of S, S' are filtered");
}

// -------------------------------------------------------------------------
// T14: under the strong classification, a product that lands in phi(P) with
// every consequent failing pushes all its partial products with copies of P
// into phi(P). Hatted arguments are deleted and replaced by copies of P.
// -------------------------------------------------------------------------

void t14(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    const std::uint32_t n = h.n();
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di) {
          const Subset phiP = c.phi_of[pi][li].members;
          const Subset dP = c.delta_of[di][li].members;
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!holds(cls_strong(c, pi, di, P, S, s))) continue;
              ++r.hypothesis_met;
              bool bad = false;
              for_each_tuple(h.size(), n, [&](std::span<const Elem> u) {
                if (bad || !phiP.contains(h.g(u))) return;
                for (std::size_t i = 0; i < n; ++i) {
                  if (P.members.contains(h.mul(s, u[i]))) return;
                  std::vector<Elem> t(u.begin(), u.end());
                  t[i] = s;
                  if (dP.contains(h.g(t))) return;
                }
                for (std::uint32_t mask = 1;
                     mask + 1 < (1u << n) && !bad; ++mask) {
                  std::vector<Subset> args;
                  for (std::uint32_t i = 0; i < n; ++i)
                    args.push_back((mask >> i) & 1
                                       ? P.members
                                       : Subset::singleton(h.size(), u[i]));
                  if (!h.g_subsets(args).subset_of(phiP)) bad = true;
                }
                if (bad)
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) +
                             " : partial product escapes phi(P)");
              });
            }
        }
    }
  });
}

// -------------------------------------------------------------------------
// T15/T16/T17: consequences of the strong classification when it does not
// collapse to the plain expanded S-primary one.
// -------------------------------------------------------------------------

void strong_non_primary(Pool& pool, TheoremReport& r,
                        const std::function<bool(Ctx&, std::size_t,
                                                 std::size_t, std::size_t)>&
                            conclusion,
                        const char* what) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets) {
            ++r.total;
            if (!holds(cls_strong(c, pi, di, P, S, {}))) continue;
            if (holds(cls_ds(c, di, P, S, {}))) continue;
            ++r.hypothesis_met;
            if (!conclusion(c, li, pi, di))
              record(r, *pool.b, c.e->id,
                     inst_text(c, P, pi, di, S, {}) + " : " + what);
          }
    }
  });
}

void t15(Pool& pool, TheoremReport& r) {
  strong_non_primary(
      pool, r,
      [](Ctx& c, std::size_t li, std::size_t pi, std::size_t) {
        return raw_power(*c.h, c.lattice[li], c.h->n())
            .subset_of(c.phi_of[pi][li].members);
      },
      "g(P^(n)) escapes phi(P)");
}

void t16(Pool& pool, TheoremReport& r) {
  strong_non_primary(
      pool, r,
      [](Ctx& c, std::size_t li, std::size_t pi, std::size_t) {
        return rad(c, c.lattice[li]) == rad(c, c.phi_of[pi][li]);
      },
      "rad(P) differs from rad(phi(P))");
}

void t17(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets) {
            if (!S.members.contains(h.one())) continue;
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!holds(cls_strong(c, pi, di, P, S, s))) continue;
              ++r.hypothesis_met;
              const Subset radphi = rad(c, c.phi_of[pi][li]).members;
              if (P.members.subset_of(radphi)) continue;
              Subset img =
                  sub_prod(h, {Subset::singleton(h.size(), s), radphi});
              if (!img.subset_of(c.delta_of[di][li].members))
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) +
                           " : g(s, rad(phi(P))) escapes delta(P)");
            }
          }
    }
  });
}

// -------------------------------------------------------------------------
// T18/T19: the strong classification is equivalent to a colon criterion.
// -------------------------------------------------------------------------

void strong_colon_iff(Pool& pool, TheoremReport& r, bool guard_by_delta) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements()) {
              ++r.total;
              const auto& st = cls_strong(c, pi, di, P, S, s);
              if (!st) {
                ++r.filtered;
                continue;
              }
              ++r.hypothesis_met;
              const Hyperideal& phiP = c.phi_of[pi][li];
              const Hyperideal& dP = c.delta_of[di][li];
              const Hyperideal guard = guard_by_delta ? colon(h, dP, s)
                                                      : colon(h, P, s);
              const Hyperideal bound = guard_by_delta ? colon(h, P, s)
                                                      : colon(h, dP, s);
              bool rhs = true;
              for (Elem u = 0; u < h.size() && rhs; ++u) {
                if (guard.members.contains(u)) continue;
                const Hyperideal a = colon(h, P, u);
                if (a == colon(h, phiP, u) ||
                    a.members.subset_of(bound.members))
                  continue;
                rhs = false;
              }
              if (st->ok() != rhs)
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) +
                           " : strong classification " +
                           to_string(st->verdict) +
                           " but colon criterion says " +
                           (rhs ? "true" : "false"));
            }
    }
  });
}

void t18(Pool& pool, TheoremReport& r) { strong_colon_iff(pool, r, true); }
void t19(Pool& pool, TheoremReport& r) { strong_colon_iff(pool, r, false); }

// -------------------------------------------------------------------------
// T20: colon by a non-contained hyperideal inherits the classification when
// both maps dominate their colons.
// -------------------------------------------------------------------------

void t20(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets)
            for (Elem s : S.members.elements())
              for (const auto& Q : c.lattice) {
                ++r.total;
                if (Q.members.subset_of(P.members)) continue;
                if (!holds(cls_strong(c, pi, di, P, S, s))) continue;
                const Hyperideal PQ = colon_ideal(h, P, Q);
                if (!colon_ideal(h, c.delta_of[di][li], Q)
                         .members.subset_of(c.delta(di, PQ).members))
                  continue;
                if (!colon_ideal(h, c.phi_of[pi][li], Q)
                         .members.subset_of(c.phi(pi, PQ).members))
                  continue;
                ++r.hypothesis_met;
                const auto& concl = cls_pds(c, pi, di, PQ, S, s);
                if (!concl) {
                  ++r.filtered;
                  continue;
                }
                if (!concl->ok())
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) + " Q=" +
                             set_text(h, Q.members) + " (P:Q)=" +
                             set_text(h, PQ.members) + " : " + why(concl));
              }
    }
  });
}

// -------------------------------------------------------------------------
// T21/T22: product collapses into phi(P) for strong-but-not-primary ideals
// whose colon at s matches the expanded colon.
// -------------------------------------------------------------------------

bool strong_not_primary_fixed(Ctx& c, std::size_t pi, std::size_t di,
                              const Hyperideal& P, const MultiplicativeSet& S,
                              Elem s) {
  return holds(cls_strong(c, pi, di, P, S, s)) &&
         !holds(cls_ds(c, di, P, S, {}));
}

void t21(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di)
          for (const auto& S : c.mulsets) {
            if (!S.members.contains(h.one())) continue;
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!strong_not_primary_fixed(c, pi, di, P, S, s)) continue;
              if (colon(h, P, s) != colon(h, c.delta_of[di][li], s)) continue;
              ++r.hypothesis_met;
              const Subset radphi = rad(c, c.phi_of[pi][li]).members;
              std::vector<Subset> inner = {Subset::singleton(h.size(), s),
                                           radphi};
              std::vector<Subset> outer = {sub_prod(h, inner)};
              for (std::uint32_t i = 0; i + 1 < h.n(); ++i)
                outer.push_back(P.members);
              if (!sub_prod(h, outer).subset_of(c.phi_of[pi][li].members))
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) +
                           " : g(g(s,rad(phi(P))),P^(n-1)) escapes phi(P)");
            }
          }
    }
  });
}

void t22(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (std::size_t li = 0; li < c.lattice.size(); ++li) {
      const Hyperideal& P = c.lattice[li];
      for (const auto& Q : c.lattice)
        for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
          for (std::size_t di = 0; di < c.deltas.size(); ++di)
            for (const auto& S : c.mulsets) {
              if (!S.members.contains(h.one())) continue;
              for (Elem s : S.members.elements()) {
                ++r.total;
                if (!strong_not_primary_fixed(c, pi, di, P, S, s)) continue;
                if (!strong_not_primary_fixed(c, pi, di, Q, S, s)) continue;
                if (colon(h, P, s) != colon(h, c.delta_of[di][li], s))
                  continue;
                if (colon(h, Q, s) != colon(h, c.delta(di, Q), s)) continue;
                if (!c.phi(pi, Q).members.subset_of(
                        c.phi_of[pi][li].members))
                  continue;
                ++r.hypothesis_met;
                std::vector<Subset> inner = {Subset::singleton(h.size(), s),
                                             Q.members};
                std::vector<Subset> outer = {sub_prod(h, inner)};
                for (std::uint32_t i = 0; i + 1 < h.n(); ++i)
                  outer.push_back(P.members);
                if (!sub_prod(h, outer).subset_of(c.phi_of[pi][li].members))
                  record(r, *pool.b, c.e->id,
                         inst_text(c, P, pi, di, S, s) + " Q=" +
                             set_text(h, Q.members) +
                             " : g(g(s,Q),P^(n-1)) escapes phi(P)");
              }
            }
    }
  });
}

// -------------------------------------------------------------------------
// T23: four-way equivalence between the classification of P, of (P : s), and
// of the extended ideal in the fraction structure, under the compatibility
// gates between the maps and localization.
// -------------------------------------------------------------------------

void t23(Pool& pool, TheoremReport& r) {
  for_each_ctx(pool, r, [&](Ctx& c) {
    const auto& h = *c.h;
    for (const auto& S : c.mulsets) {
      if (!S.members.contains(h.one())) continue;
      const auto& fro = fraction(c, S);
      if (!fro) {
        note_once(r, c.e->id + ": localization unavailable at " +
                          set_text(h, S.members) + ", instances filtered");
        continue;
      }
      const FractionStructure& fr = *fro;
      auto ext = [&](const Hyperideal& I) { return extend_ideal(h, fr, I); };
      auto ctr = [&](const Hyperideal& J) {
        return contract_ideal(h, fr, J);
      };
      const Hyperideal extK = ext(Hyperideal{h.full()});
      for (std::size_t pi = 0; pi < c.phis.size(); ++pi)
        for (std::size_t di = 0; di < c.deltas.size(); ++di) {
          IdealMap phiS = localized_map(h, fr, c.phis[pi]);
          IdealMap deltaS = localized_map(h, fr, c.deltas[di]);
          bool gate_maps = true;
          for (std::size_t li = 0; li < c.lattice.size(); ++li) {
            const Hyperideal eI = ext(c.lattice[li]);
            if (ext(c.phi_of[pi][li]) != phiS(fr.structure, eI) ||
                ext(c.delta_of[di][li]) != deltaS(fr.structure, eI))
              gate_maps = false;
          }
          for (std::size_t li = 0; li < c.lattice.size(); ++li) {
            const Hyperideal& P = c.lattice[li];
            const Hyperideal& phiP = c.phi_of[pi][li];
            const Hyperideal& dP = c.delta_of[di][li];
            bool gate_colon = true;
            for (Elem u = 0; u < h.size() && gate_colon; ++u) {
              const Hyperideal Pu = colon(h, P, u);
              if (c.phi(pi, Pu) != colon(h, phiP, u) ||
                  c.delta(di, Pu) != colon(h, dP, u))
                gate_colon = false;
            }
            const Hyperideal extP = ext(P);
            bool gate_frac =
                (extP == extK ||
                 deltaS(fr.structure, extP) != extK) &&
                c.delta(di, ctr(extP)) == ctr(ext(dP));
            for (Elem s : S.members.elements()) {
              ++r.total;
              if (!gate_maps || !gate_colon || !gate_frac) continue;
              if (P.members.intersects(S.members)) continue;
              if (phiP != colon(h, phiP, s)) continue;
              bool dom = true;
              const Hyperideal cps = colon(h, phiP, s);
              for (Elem t : S.members.elements())
                if (!colon(h, phiP, t).members.subset_of(cps.members))
                  dom = false;
              if (!dom) continue;
              ++r.hypothesis_met;
              bool a1 = holds(cls_pds(c, pi, di, P, S, s));
              const Hyperideal Ps = colon(h, P, s);
              bool a2 = holds(attempt([&] {
                return is_phi_delta_primary(h, Ps, c.phis[pi], c.deltas[di]);
              }));
              bool frac_primary = holds(attempt([&] {
                return is_phi_delta_primary(fr.structure, extP, phiS, deltaS);
              }));
              bool colon_dom = true;
              for (Elem t : S.members.elements())
                if (!colon(h, P, t).members.subset_of(Ps.members))
                  colon_dom = false;
              bool a3 = frac_primary && colon_dom;
              bool a4 = frac_primary && ctr(extP) == Ps;
              if (!(a1 == a2 && a2 == a3 && a3 == a4))
                record(r, *pool.b, c.e->id,
                       inst_text(c, P, pi, di, S, s) + " : assertions (" +
                           std::to_string(a1) + "," + std::to_string(a2) +
                           "," + std::to_string(a3) + "," +
                           std::to_string(a4) + ") disagree");
            }
          }
        }
    }
  });
}

// -------------------------------------------------------------------------
// T24: a compatible epimorphism pulls the classification back along
// preimages.
// -------------------------------------------------------------------------

struct HomCase {
  std::size_t src = 0, dst = 0;
  Homomorphism k;
  std::string name;
};

std::vector<HomCase> build_homs(Pool& pool) {
  std::vector<HomCase> out;
  for (std::size_t i = 0; i < pool.ctxs.size(); ++i) {
    Ctx& c = pool.ctxs[i];
    if (!c.usable) continue;
    const CorpusEntry& e = *c.e;
    if (e.kind == "base") {
      HomCase idc{i, i, {}, e.id + "->" + e.id + " (identity)"};
      idc.k.source = c.h;
      idc.k.target = c.h;
      for (Elem a = 0; a < c.h->size(); ++a) idc.k.map.push_back(a);
      out.push_back(std::move(idc));
      if (e.id.size() > 1 && e.id[0] == 'z') {
        for (std::size_t j = 0; j < pool.ctxs.size(); ++j) {
          Ctx& d = pool.ctxs[j];
          if (!d.usable || d.e->kind != "base" || d.e->id[0] != 'z') continue;
          std::uint32_t ksz = c.h->size(), dsz = d.h->size();
          if (dsz >= ksz || ksz % dsz != 0) continue;
          HomCase q{i, j, {}, e.id + "->" + d.e->id + " (mod)"};
          q.k.source = c.h;
          q.k.target = d.h;
          for (Elem a = 0; a < ksz; ++a) q.k.map.push_back(a % dsz);
          out.push_back(std::move(q));
        }
      }
    } else if (e.kind == "product" && c.prod) {
      for (int side = 0; side < 2; ++side) {
        std::size_t j = static_cast<std::size_t>(side == 0 ? e.factor1
                                                           : e.factor2);
        if (!pool.ctxs[j].usable) continue;
        HomCase p{i, j, {}, e.id + "->" + pool.ctxs[j].e->id +
                                (side == 0 ? " (proj1)" : " (proj2)")};
        p.k.source = c.h;
        p.k.target = pool.ctxs[j].h;
        for (Elem a = 0; a < c.h->size(); ++a)
          p.k.map.push_back(side == 0 ? c.prod->first(a) : c.prod->second(a));
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

void t24(Pool& pool, TheoremReport& r) {
  for (const HomCase& hc : build_homs(pool)) {
    Ctx& cs = pool.ctxs[hc.src];
    Ctx& cd = pool.ctxs[hc.dst];
    const FiniteHyperring& hsrc = *cs.h;
    if (!check_homomorphism(hc.k).ok() || !is_epimorphism(hc.k)) {
      note_once(r, hc.name + ": not an epimorphism, skipped");
      continue;
    }
    std::map<std::uint64_t, bool> compat;
    for (std::size_t pi = 0; pi < cs.phis.size(); ++pi)
      for (std::size_t qi = 0; qi < cd.phis.size(); ++qi)
        for (std::size_t di = 0; di < cs.deltas.size(); ++di)
          for (std::size_t gi = 0; gi < cd.deltas.size(); ++gi) {
            auto key = [&] {
              return ((pi * 8 + qi) * 8 + di) * 8 + gi;
            }();
            for (const auto& S : cs.mulsets) {
              if (!S.members.contains(hsrc.one())) continue;
              Subset imgS = Subset::empty_set(cd.h->size());
              S.members.for_each([&](Elem a) { imgS.add(hc.k(a)); });
              if (!is_multiplicative(*cd.h, imgS)) continue;
              const MultiplicativeSet Sk{imgS};
              for (Elem s : S.members.elements())
                for (const auto& P2 : cd.lattice) {
                  ++r.total;
                  auto it = compat.find(key);
                  if (it == compat.end())
                    it = compat
                             .emplace(key, check_map_compatibility(
                                               hc.k, cs.phis[pi],
                                               cd.phis[qi], cs.deltas[di],
                                               cd.deltas[gi])
                                               .ok())
                             .first;
                  if (!it->second) continue;
                  if (!holds(cls_pds(cd, qi, gi, P2, Sk, hc.k(s)))) continue;
                  ++r.hypothesis_met;
                  const Hyperideal P1 = preimage(hc.k, P2);
                  const auto& concl = cls_pds(cs, pi, di, P1, S, s);
                  if (!holds(concl))
                    record(r, *pool.b, cs.e->id,
                           hc.name + " " +
                               inst_text(cs, P1, pi, di, S, s) + " P2=" +
                               set_text(*cd.h, P2.members) + " : " +
                               why(concl));
                }
            }
          }
  }
}

// -------------------------------------------------------------------------
// T25/T26/T27: direct-product criteria. The hatted maps act componentwise;
// both sweeps run over trimmed map and multiplicative-set lists.
// -------------------------------------------------------------------------

template <typename Fn>
void for_each_product(Pool& pool, TheoremReport& r, Fn&& fn) {
  for (auto& c : pool.ctxs) {
    if (c.e->kind != "product") continue;
    if (!c.usable) {
      r.partial = true;
      note_once(r, c.skip_reason);
      continue;
    }
    Ctx& c1 = pool.ctxs[c.e->factor1];
    Ctx& c2 = pool.ctxs[c.e->factor2];
    if (!c1.usable || !c2.usable) continue;
    fn(c, c1, c2);
  }
}

struct ProductScope {
  std::size_t nphi, ndelta;
  std::vector<const MultiplicativeSet*> ms1, ms2;
};

ProductScope product_scope(Pool& pool, Ctx& c1, Ctx& c2) {
  ProductScope sc;
  sc.nphi = std::min<std::size_t>(pool.b->product_map_count,
                                  std::min(c1.phis.size(), c2.phis.size()));
  sc.ndelta =
      std::min<std::size_t>(pool.b->product_delta_count,
                            std::min(c1.deltas.size(), c2.deltas.size()));
  for (const auto& S : c1.mulsets)
    if (S.members.count() <=
        static_cast<int>(pool.b->product_mulset_size))
      sc.ms1.push_back(&S);
  for (const auto& S : c2.mulsets)
    if (S.members.count() <=
        static_cast<int>(pool.b->product_mulset_size))
      sc.ms2.push_back(&S);
  return sc;
}

std::string prod_key(const char* tag, const Hyperideal& P, std::size_t pa,
                     std::size_t pb, std::size_t da, std::size_t db,
                     std::uint64_t sbits, std::optional<Elem> s) {
  std::string k = tag;
  k += ':' + std::to_string(P.members.bits()) + ':' + std::to_string(pa) +
       ':' + std::to_string(pb) + ':' + std::to_string(da) + ':' +
       std::to_string(db) + ':' + std::to_string(sbits) + ':' +
       (s ? std::to_string(*s) : std::string("*"));
  return k;
}

void product_criteria(Pool& pool, TheoremReport& r, int which) {
  for_each_product(pool, r, [&](Ctx& c, Ctx& c1, Ctx& c2) {
    const auto& h = *c.h;
    const ProductStructure& pr = *c.prod;
    const FiniteHyperring& h1 = *c1.h;
    const FiniteHyperring& h2 = *c2.h;
    const ProductScope sc = product_scope(pool, c1, c2);
    const Hyperideal K1{h1.full()}, K2{h2.full()};
    for (std::size_t pa = 0; pa < sc.nphi; ++pa)
      for (std::size_t pb = 0; pb < sc.nphi; ++pb) {
        IdealMap phiHat = product_map(pr, h1, h2, c1.phis[pa], c2.phis[pb]);
        const bool phi2_full = c2.phi(pb, K2) == K2;
        for (std::size_t da = 0; da < sc.ndelta; ++da)
          for (std::size_t db = 0; db < sc.ndelta; ++db) {
            IdealMap deltaHat =
                product_map(pr, h1, h2, c1.deltas[da], c2.deltas[db]);
            for (const auto* S1 : sc.ms1)
              for (const auto* S2 : sc.ms2) {
                const MultiplicativeSet Sh{
                    product_subset(pr, S1->members, S2->members)};
                for (Elem s1 : S1->members.elements())
                  for (Elem s2 : S2->members.elements()) {
                    const Elem sh = pr.pair(s1, s2);
                    auto hat_pds = [&](const Hyperideal& P,
                                       std::optional<Elem> s) -> const
                        std::optional<Classification>& {
                      return cls_custom(
                          c,
                          prod_key("hpds", P, pa, pb, da, db,
                                   Sh.members.bits(), s),
                          [&] {
                            return is_phi_delta_S_primary(h, P, phiHat,
                                                          deltaHat, Sh, s);
                          });
                    };
                    auto hat_ds = [&](const Hyperideal& P,
                                      std::optional<Elem> s) -> const
                        std::optional<Classification>& {
                      return cls_custom(
                          c,
                          prod_key("hds", P, 0, 0, da, db, Sh.members.bits(),
                                   s),
                          [&] {
                            return is_delta_S_primary(h, P, deltaHat, Sh, s);
                          });
                    };
                    auto describe = [&](const Hyperideal& P) {
                      return "P=" + set_text(h, P.members) + " phi=(" +
                             c1.phis[pa].id + "," + c2.phis[pb].id +
                             ") delta=(" + c1.deltas[da].id + "," +
                             c2.deltas[db].id + ") S=(" +
                             set_text(h1, S1->members) + "," +
                             set_text(h2, S2->members) + ") s=(" +
                             h1.label(s1) + "," + h2.label(s2) + ")";
                    };
                    if (which == 25 || which == 26) {
                      for (const auto& P1 : c1.lattice) {
                        ++r.total;
                        const Hyperideal P{
                            product_subset(pr, P1.members, h2.full())};
                        const auto& lhs = hat_pds(P, sh);
                        if (!lhs) {
                          ++r.filtered;
                          continue;
                        }
                        if (which == 25) {
                          if (phi2_full) continue;
                          ++r.hypothesis_met;
                          bool rhs = holds(cls_ds(c1, da, P1, *S1, s1)) &&
                                     holds(hat_ds(P, sh));
                          if (lhs->ok() != rhs)
                            record(r, *pool.b, c.e->id,
                                   describe(P) + " : sides disagree (" +
                                       to_string(lhs->verdict) + " vs " +
                                       (rhs ? "true" : "false") + ")");
                        } else {
                          ++r.hypothesis_met;
                          bool l = lhs->ok() && !holds(hat_ds(P, {}));
                          bool rr =
                              phi2_full &&
                              holds(cls_pds(c1, pa, da, P1, *S1, s1)) &&
                              !holds(cls_ds(c1, da, P1, *S1, {}));
                          if (l != rr)
                            record(r, *pool.b, c.e->id,
                                   describe(P) + " : sides disagree (" +
                                       (l ? "true" : "false") + " vs " +
                                       (rr ? "true" : "false") + ")");
                        }
                      }
                    } else {
                      for (const auto& P1 : c1.lattice)
                        for (const auto& P2 : c2.lattice) {
                          ++r.total;
                          if (c1.phi(pa, P1) == P1 || c2.phi(pb, P2) == P2)
                            continue;
                          if (P1 != K1 && c1.delta(da, P1) == K1) continue;
                          if (P2 != K2 && c2.delta(db, P2) == K2) continue;
                          const Hyperideal P{
                              product_subset(pr, P1.members, P2.members)};
                          if (P.members == h.full()) {
                            ++r.filtered;
                            continue;
                          }
                          ++r.hypothesis_met;
                          bool ai = holds(hat_pds(P, sh));
                          bool aiii = holds(hat_ds(P, sh));
                          bool aii =
                              (holds(cls_ds(c2, db, P2, *S2, s2)) &&
                               (P1 == K1 ||
                                (P1.members.contains(s1)))) ||
                              (holds(cls_ds(c1, da, P1, *S1, s1)) &&
                               (P2 == K2 || (P2.members.contains(s2))));
                          if (!(ai == aii && aii == aiii))
                            record(r, *pool.b, c.e->id,
                                   describe(P) + " P2=" +
                                       set_text(h2, P2.members) +
                                       " : assertions (" +
                                       std::to_string(ai) + "," +
                                       std::to_string(aii) + "," +
                                       std::to_string(aiii) + ") disagree");
                        }
                    }
                  }
              }
          }
      }
  });
  if (which == 26)
    note_once(r,
              "reductions here always produce hyperideals, so the "
              "nonempty-image clause is vacuously true");
}

void t25(Pool& pool, TheoremReport& r) { product_criteria(pool, r, 25); }
void t26(Pool& pool, TheoremReport& r) { product_criteria(pool, r, 26); }
void t27(Pool& pool, TheoremReport& r) { product_criteria(pool, r, 27); }

// -------------------------------------------------------------------------
// Registry.
// -------------------------------------------------------------------------

struct Check {
  const char* id;
  const char* title;
  void (*fn)(Pool&, TheoremReport&);
};

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"T01", "radical preserves the classification", t01},
      {"T02", "radical preserves the reduction-only classification", t02},
      {"T03", "colon of the radical avoids S", t03},
      {"T04", "expansion colon is stable under s-powers", t04},
      {"T05", "colon dichotomy at g(s,u)", t05},
      {"T06", "colon dichotomy, reduction-only form", t06},
      {"T07", "element colons inherit the classification", t07},
      {"T08", "intersection with an S-meeting hyperideal", t08},
      {"T09", "product with S-meeting hyperideals", t09},
      {"T10", "collapse criterion for idempotent reductions", t10},
      {"T11", "collapse criterion at phi0/delta1", t11},
      {"T12", "shrinking the multiplicative set", t12},
      {"T13", "closure under invertible-image denominators", t13},
      {"T14", "strong antecedents push partial products into phi(P)", t14},
      {"T15", "strong non-primary ideals have g(P^(n)) inside phi(P)", t15},
      {"T16", "strong non-primary ideals share their radical with phi(P)",
       t16},
      {"T17", "strong ideals absorb s*rad(phi(P)) into delta(P)", t17},
      {"T18", "strong classification equals the colon criterion", t18},
      {"T19", "strong classification equals the colon criterion, variant",
       t19},
      {"T20", "ideal colons inherit the classification", t20},
      {"T21", "strong non-primary product collapse", t21},
      {"T22", "strong non-primary pairwise product collapse", t22},
      {"T23", "fraction-structure equivalence", t23},
      {"T24", "compatible epimorphisms pull the classification back", t24},
      {"T25", "product with a full second factor", t25},
      {"T26", "product criterion with a collapsed second reduction", t26},
      {"T27", "componentwise product criterion", t27},
  };
  return checks;
}

TheoremReport run_one(const Check& ck, Pool& pool) {
  TheoremReport r;
  r.id = ck.id;
  r.title = ck.title;
  auto start = std::chrono::steady_clock::now();
  ck.fn(pool, r);
  auto stop = std::chrono::steady_clock::now();
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Corpus.
// ---------------------------------------------------------------------------

FiniteHyperring three_element_demo() {
  const std::uint32_t sz = 3;  // 0, 1, u
  auto sub = [&](std::initializer_list<Elem> es) {
    Subset x(sz, 0);
    for (Elem e : es) x.add(e);
    return x;
  };
  std::vector<Subset> f(sz * sz);
  auto put = [&](Elem a, Elem b, Subset v) {
    f[a * sz + b] = v;
    f[b * sz + a] = v;
  };
  put(0, 0, sub({0}));
  put(0, 1, sub({1}));
  put(0, 2, sub({2}));
  put(1, 1, sub({0, 1, 2}));
  put(1, 2, sub({1}));
  put(2, 2, sub({0, 2}));
  std::vector<Elem> g(sz * sz, 0);
  auto mulput = [&](Elem a, Elem b, Elem v) {
    g[a * sz + b] = v;
    g[b * sz + a] = v;
  };
  mulput(1, 1, 1);
  mulput(1, 2, 2);
  mulput(2, 2, 0);
  return FiniteHyperring(2, 2, sz, std::move(f), std::move(g), 0, 1,
                         {"0", "1", "u"});
}

std::vector<CorpusEntry> build_corpus(const SweepBudget& budget) {
  std::vector<CorpusEntry> out;
  auto add_base = [&](const std::string& id, FiniteHyperring h) {
    h.validate();
    out.push_back(CorpusEntry{id, "base", std::move(h)});
  };
  add_base("k3", three_element_demo());
  for (std::uint32_t k : {2u, 3u, 4u, 6u, 8u})
    add_base("z" + std::to_string(k), ring_zk(k));
  const std::size_t nbase = out.size();

  if (budget.include_products) {
    for (std::size_t i = 0; i < nbase; ++i)
      for (std::size_t j = i; j < nbase; ++j) {
        if (out[i].h.size() > 4 || out[j].h.size() > 4) continue;
        try {
          ProductStructure pr = direct_product(out[i].h, out[j].h);
          out.push_back(CorpusEntry{out[i].id + "x" + out[j].id, "product",
                                    std::move(pr.structure),
                                    static_cast<int>(i),
                                    static_cast<int>(j)});
        } catch (const std::runtime_error&) {
          // over budget or failed a well-definedness check; skip
        }
      }
  }

  if (budget.include_localizations) {
    std::vector<CorpusEntry> locs;
    for (std::size_t i = 0; i < nbase; ++i) {
      const FiniteHyperring& h = out[i].h;
      for (const Subset& s :
           enumerate_multiplicative_sets(h, budget.localize_mulset_size)) {
        if (!s.contains(h.one())) continue;
        if (s.count() == 1) continue;  // S = {1}: isomorphic to the base
        try {
          FractionStructure fr = localize(h, MultiplicativeSet{s});
          if (fr.structure.size() <= 1) continue;
          locs.push_back(CorpusEntry{out[i].id + "@" + set_text(h, s),
                                     "localization",
                                     std::move(fr.structure)});
        } catch (const std::runtime_error&) {
          // localization unavailable at this set; skip
        }
      }
    }
    for (auto& e : locs) out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Public entry points.
// ---------------------------------------------------------------------------

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& ck : registry()) v.push_back(ck.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

TheoremReport run_theorem(const std::string& id,
                          const std::vector<CorpusEntry>& corpus,
                          const SweepBudget& budget) {
  for (const auto& ck : registry())
    if (id == ck.id) {
      Pool pool = build_pool(corpus, budget);
      return run_one(ck, pool);
    }
  throw input_error("unknown theorem id: " + id);
}

std::vector<TheoremReport> run_all(const std::vector<CorpusEntry>& corpus,
                                   const SweepBudget& budget) {
  Pool pool = build_pool(corpus, budget);
  std::vector<TheoremReport> out;
  for (const auto& ck : registry()) out.push_back(run_one(ck, pool));
  return out;
}

std::vector<std::string> witness_mode_notes() {
  namespace an = hx::analytic;
  std::vector<std::string> out;
  {
    auto st = an::parse_modular("modular(5,25,4,3)");
    an::ModIdeal P{5};
    auto cl = an::mod_classify(*st, P, "pow:5", "delta0");
    std::string line = st->id() + " P=" + an::mod_ideal_text(*st, P) +
                       " phi=pow:5 delta=delta0 S={1} -> " +
                       to_string(cl.verdict);
    if (cl.verdict == Verdict::fails) {
      bool replays = an::mod_refutes(*st, P, "pow:5", "delta0",
                                     cl.refutation);
      line += replays ? " (witness replays)" : " (witness does NOT replay)";
    }
    out.push_back(line);
  }
  {
    auto st = an::parse_modular("modular(2,8,2,2)");
    an::ModIdeal P{4};
    auto cl = an::mod_classify(*st, P, "phi0", "delta1");
    out.push_back(st->id() + " P=" + an::mod_ideal_text(*st, P) +
                  " phi=phi0 delta=delta1 S={1} -> " +
                  to_string(cl.verdict));
  }
  return out;
}

}  // namespace hx
