#include "hx/maps.hpp"

#include <charconv>

namespace hx {

namespace {

Hyperideal power_chain_limit(const FiniteHyperring& h, const Hyperideal& P) {
  // P^[x(n-1)+1] descends in x (the image of g over an absorbing set stays
  // inside it), so the chain stabilizes and the intersection is its limit.
  Hyperideal cur = P;
  while (true) {
    std::vector<Hyperideal> parts(h.n(), P);
    parts[0] = cur;
    Hyperideal next = ideal_product(h, parts).ideal;
    if (next == cur) return cur;
    cur = next;
  }
}

std::uint32_t parse_pow_exponent(const std::string& id) {
  std::uint32_t k = 0;
  const char* b = id.data() + 4;
  const char* e = id.data() + id.size();
  auto [p, ec] = std::from_chars(b, e, k);
  if (ec != std::errc{} || p != e || k == 0)
    throw input_error("bad power exponent in map id '" + id + "'");
  return k;
}

}  // namespace

bool is_builtin_phi_id(const std::string& id) {
  if (id == "phi0" || id == "phi1" || id == "phiN" || id == "phiW") return true;
  if (id.rfind("pow:", 0) == 0) {
    try {
      parse_pow_exponent(id);
      return true;
    } catch (const input_error&) {
      return false;
    }
  }
  return false;
}

bool is_builtin_delta_id(const std::string& id) {
  return id == "delta0" || id == "delta1" || id == "deltaK" || id == "deltaM";
}

ReductionFn builtin_phi(const std::string& id) {
  if (id == "phi0")
    return {id, false, [](const FiniteHyperring& h, const Hyperideal&) {
              return Hyperideal{Subset::singleton(h.size(), h.zero())};
            }};
  if (id == "phi1")
    return {id, false,
            [](const FiniteHyperring&, const Hyperideal& P) { return P; }};
  if (id == "phiN")
    return {id, false, [](const FiniteHyperring& h, const Hyperideal& P) {
              std::vector<Hyperideal> parts(h.n(), P);
              return ideal_product(h, parts).ideal;
            }};
  if (id == "phiW")
    return {id, false, [](const FiniteHyperring& h, const Hyperideal& P) {
              return power_chain_limit(h, P);
            }};
  if (id.rfind("pow:", 0) == 0) {
    std::uint32_t k = parse_pow_exponent(id);
    return {id, false, [k](const FiniteHyperring& h, const Hyperideal& P) {
              return ideal_power(h, P, k).ideal;
            }};
  }
  throw input_error("unknown reduction id '" + id + "'");
}

ExpansionFn builtin_delta(const std::string& id) {
  if (id == "delta0")
    return {id, true,
            [](const FiniteHyperring&, const Hyperideal& P) { return P; }};
  if (id == "delta1")
    return {id, true, [](const FiniteHyperring& h, const Hyperideal& P) {
              return radical_by_primes(h, P);
            }};
  if (id == "deltaK")
    return {id, true, [](const FiniteHyperring& h, const Hyperideal&) {
              return Hyperideal{h.full()};
            }};
  if (id == "deltaM")
    return {id, true, [](const FiniteHyperring& h, const Hyperideal& P) {
              Subset out = h.full();
              bool any = false;
              for (const Hyperideal& M : enumerate_hyperideals(h, h.size())) {
                if (!P.members.subset_of(M.members)) continue;
                if (!is_maximal(h, M)) continue;
                out &= M.members;
                any = true;
              }
              return any ? Hyperideal{out} : Hyperideal{h.full()};
            }};
  throw input_error("unknown expansion id '" + id + "'");
}

IdealMap table_map(const std::string& id, bool expansion,
                   std::map<std::uint64_t, std::uint64_t> table) {
  return {id, expansion,
          [id, table = std::move(table)](const FiniteHyperring& h,
                                         const Hyperideal& P) {
            auto it = table.find(P.members.bits());
            if (it == table.end())
              throw input_error("table map '" + id +
                                "' has no entry for the given hyperideal");
            return Hyperideal{Subset(h.size(), it->second)};
          }};
}

ContractReport verify_contract(const IdealMap& fn, const FiniteHyperring& h) {
  ContractReport rep;
  auto lattice = enumerate_hyperideals(h, h.size());
  std::vector<Hyperideal> images;
  for (const Hyperideal& P : lattice) {
    Hyperideal img = fn(h, P);
    images.push_back(img);
    if (!is_hyperideal(h, img.members))
      rep.violations.push_back({"not-ideal", P, P, "image is not a hyperideal"});
    bool contained = fn.expansion ? P.members.subset_of(img.members)
                                  : img.members.subset_of(P.members);
    if (!contained)
      rep.violations.push_back(
          {"containment", P, P,
           fn.expansion ? "P not inside its image" : "image not inside P"});
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!lattice[i].members.subset_of(lattice[j].members)) continue;
      if (!images[i].members.subset_of(images[j].members))
        rep.violations.push_back(
            {"monotonicity", lattice[i], lattice[j], "images not comparable"});
    }
  return rep;
}

bool is_idempotent_on(const IdealMap& fn, const FiniteHyperring& h) {
  for (const Hyperideal& P : enumerate_hyperideals(h, h.size())) {
    Hyperideal once = fn(h, P);
    if (!(fn(h, once) == once)) return false;
  }
  return true;
}

}  // namespace hx
