#include "hx/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hx {

namespace {

std::string tuple_text(std::span<const Elem> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Direct product.
// ---------------------------------------------------------------------------

ProductStructure direct_product(const FiniteHyperring& h1,
                                const FiniteHyperring& h2) {
  h1.require_validated();
  h2.require_validated();
  if (h1.m() != h2.m() || h1.n() != h2.n())
    throw input_error("direct product requires equal arities");
  const std::uint32_t s1 = h1.size(), s2 = h2.size();
  if (std::uint64_t(s1) * s2 > 64)
    throw budget_error("product carrier exceeds 64 elements");
  const std::uint32_t size = s1 * s2;
  const std::uint32_t m = h1.m(), n = h1.n();
  auto pair_of = [&](Elem a, Elem b) { return a * s2 + b; };
  auto first_of = [&](Elem e) { return e / s2; };
  auto second_of = [&](Elem e) { return e % s2; };

  std::size_t f_count = 1, g_count = 1;
  for (std::uint32_t i = 0; i < m; ++i) f_count *= size;
  for (std::uint32_t i = 0; i < n; ++i) g_count *= size;
  std::vector<Subset> f_table(f_count, Subset::empty_set(size));
  std::vector<Elem> g_table(g_count, 0);

  std::vector<Elem> t1(m), t2(m);
  for_each_tuple(size, m, [&](std::span<const Elem> t) {
    for (std::uint32_t i = 0; i < m; ++i) {
      t1[i] = first_of(t[i]);
      t2[i] = second_of(t[i]);
    }
    Subset a = h1.f(t1);
    Subset b = h2.f(t2);
    Subset out = Subset::empty_set(size);
    a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.add(pair_of(x, y)); }); });
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < m; ++i) idx = idx * size + t[i];
    f_table[idx] = out;
  });
  std::vector<Elem> u1(n), u2(n);
  for_each_tuple(size, n, [&](std::span<const Elem> t) {
    for (std::uint32_t i = 0; i < n; ++i) {
      u1[i] = first_of(t[i]);
      u2[i] = second_of(t[i]);
    }
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i) idx = idx * size + t[i];
    g_table[idx] = pair_of(h1.g(u1), h2.g(u2));
  });

  std::vector<std::string> labels(size);
  for (Elem a = 0; a < s1; ++a)
    for (Elem b = 0; b < s2; ++b)
      labels[pair_of(a, b)] = "(" + h1.label(a) + "," + h2.label(b) + ")";

  ProductStructure pr{
      FiniteHyperring(m, n, size, std::move(f_table), std::move(g_table),
                      pair_of(h1.zero(), h2.zero()),
                      pair_of(h1.one(), h2.one()), std::move(labels)),
      s1, s2};
  if (!pr.structure.validate().ok())
    throw construction_error("product of valid structures failed validation: " +
                             pr.structure.validate().summary());
  return pr;
}

Subset product_subset(const ProductStructure& pr, const Subset& p1,
                      const Subset& p2) {
  Subset out = Subset::empty_set(pr.structure.size());
  p1.for_each([&](Elem a) { p2.for_each([&](Elem b) { out.add(pr.pair(a, b)); }); });
  return out;
}

bool factorize_product_subset(const ProductStructure& pr, const Subset& x,
                              Subset* p1, Subset* p2) {
  Subset a = Subset::empty_set(pr.size1), b = Subset::empty_set(pr.size2);
  x.for_each([&](Elem e) {
    a.add(pr.first(e));
    b.add(pr.second(e));
  });
  if (!(product_subset(pr, a, b) == x)) return false;
  if (p1) *p1 = a;
  if (p2) *p2 = b;
  return true;
}

IdealMap product_map(const ProductStructure& pr, const FiniteHyperring& h1,
                     const FiniteHyperring& h2, const IdealMap& fn1,
                     const IdealMap& fn2) {
  std::string id = fn1.id == fn2.id ? fn1.id + "^" : fn1.id + "x" + fn2.id;
  bool expansion = fn1.expansion;
  return {id, expansion,
          [&pr, &h1, &h2, fn1, fn2](const FiniteHyperring&, const Hyperideal& P) {
            Subset a, b;
            if (!factorize_product_subset(pr, P.members, &a, &b))
              throw construction_error(
                  "product hyperideal does not factor componentwise");
            Hyperideal q1 = fn1(h1, Hyperideal{a});
            Hyperideal q2 = fn2(h2, Hyperideal{b});
            return Hyperideal{product_subset(pr, q1.members, q2.members)};
          }};
}

// ---------------------------------------------------------------------------
// Localization.
// ---------------------------------------------------------------------------

namespace {

// (a,s) ~ (b,t) iff some u in S kills the cross difference.
bool fraction_related(const FiniteHyperring& h, const Subset& S, Elem a, Elem s,
                      Elem b, Elem t) {
  Subset diff = h.fadd(h.mul(a, t), h.neg(h.mul(b, s)));
  bool related = false;
  S.for_each([&](Elem u) {
    diff.for_each([&](Elem d) {
      if (h.mul(u, d) == h.zero()) related = true;
    });
  });
  return related;
}

}  // namespace

FractionStructure localize(const FiniteHyperring& h, const MultiplicativeSet& S) {
  h.require_validated();
  if (!is_multiplicative(h, S.members))
    throw input_error("S is not a multiplicative set");
  if (!S.members.contains(h.one()))
    throw precondition_error(
        "localization requires 1 in S (common denominators must stay in S)");

  std::vector<Elem> s_values = S.members.elements();
  std::vector<Elem> class_of;
  std::vector<std::pair<Elem, Elem>> rep;
  const std::size_t ns = s_values.size();
  const std::size_t nodes = std::size_t(h.size()) * ns;

  auto node = [&](Elem a, std::size_t si) { return a * ns + si; };

  std::vector<std::vector<bool>> rel(nodes, std::vector<bool>(nodes, false));
  for (Elem a = 0; a < h.size(); ++a)
    for (std::size_t i = 0; i < ns; ++i)
      for (Elem b = 0; b < h.size(); ++b)
        for (std::size_t j = 0; j < ns; ++j)
          rel[node(a, i)][node(b, j)] =
              fraction_related(h, S.members, a, s_values[i], b, s_values[j]);

  for (std::size_t x = 0; x < nodes; ++x) {
    if (!rel[x][x])
      throw construction_error("fraction relation is not reflexive");
    for (std::size_t y = 0; y < nodes; ++y) {
      if (rel[x][y] != rel[y][x])
        throw construction_error("fraction relation is not symmetric");
      if (!rel[x][y]) continue;
      for (std::size_t z = 0; z < nodes; ++z)
        if (rel[y][z] && !rel[x][z]) {
          std::ostringstream os;
          os << "fraction relation is not transitive at nodes " << x << ", "
             << y << ", " << z;
          throw construction_error(os.str());
        }
    }
  }

  class_of.assign(nodes, 0);
  std::vector<bool> assigned(nodes, false);
  for (std::size_t x = 0; x < nodes; ++x) {
    if (assigned[x]) continue;
    Elem c = static_cast<Elem>(rep.size());
    rep.emplace_back(static_cast<Elem>(x / ns), static_cast<Elem>(x % ns));
    for (std::size_t y = x; y < nodes; ++y)
      if (rel[x][y]) {
        class_of[y] = c;
        assigned[y] = true;
      }
  }
  const std::uint32_t size = static_cast<std::uint32_t>(rep.size());
  if (size > 64) throw budget_error("fraction carrier exceeds 64 elements");

  const std::uint32_t m = h.m(), n = h.n();
  auto s_index = [&](Elem s) -> std::size_t {
    for (std::size_t i = 0; i < ns; ++i)
      if (s_values[i] == s) return i;
    throw construction_error("denominator escaped S");
  };

  // Members of each class, for well-definedness sweeps.
  std::vector<std::vector<std::pair<Elem, Elem>>> members(size);
  for (Elem a = 0; a < h.size(); ++a)
    for (std::size_t i = 0; i < ns; ++i)
      members[class_of[node(a, i)]].emplace_back(a, s_values[i]);

  // Induced f: common denominator d = product of all denominators (in S
  // because 1 in S keeps binary products inside), numerator i scales a_i
  // by the other denominators.
  std::size_t f_count = 1, g_count = 1;
  for (std::uint32_t i = 0; i < m; ++i) f_count *= size;
  for (std::uint32_t i = 0; i < n; ++i) g_count *= size;
  std::vector<Subset> f_table(f_count, Subset::empty_set(size));
  std::vector<Elem> g_table(g_count, 0);

  auto eval_f = [&](std::span<const std::pair<Elem, Elem>> reps) -> Subset {
    Elem d = h.one();
    for (const auto& [a, s] : reps) d = h.mul(d, s);
    std::size_t di = s_index(d);
    std::vector<Elem> nums;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Elem scale = h.one();
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (j != i) scale = h.mul(scale, reps[j].second);
      nums.push_back(h.mul(reps[i].first, scale));
    }
    Subset img = h.f(nums);
    Subset out = Subset::empty_set(size);
    img.for_each([&](Elem c) { out.add(class_of[node(c, di)]); });
    return out;
  };
  auto eval_g = [&](std::span<const std::pair<Elem, Elem>> reps) -> Elem {
    std::vector<Elem> as, ss;
    for (const auto& [a, s] : reps) {
      as.push_back(a);
      ss.push_back(s);
    }
    return class_of[node(h.g(as), s_index(h.g(ss)))];
  };

  for_each_tuple(size, m, [&](std::span<const Elem> t) {
    std::vector<std::pair<Elem, Elem>> reps;
    for (Elem c : t) reps.push_back(members[c].front());
    Subset value = eval_f(reps);
    // Well-definedness: every representative choice must agree.
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<std::pair<Elem, Elem>> alt;
      for (std::uint32_t i = 0; i < m; ++i) alt.push_back(members[t[i]][pick[i]]);
      if (!(eval_f(alt) == value))
        throw construction_error("induced hyperaddition is ill-defined at class tuple " +
                                 tuple_text(t));
      std::uint32_t i = 0;
      for (; i < m; ++i) {
        if (++pick[i] < members[t[i]].size()) break;
        pick[i] = 0;
      }
      if (i == m) break;
    }
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < m; ++i) idx = idx * size + t[i];
    f_table[idx] = value;
  });

  for_each_tuple(size, n, [&](std::span<const Elem> t) {
    std::vector<std::pair<Elem, Elem>> reps;
    for (Elem c : t) reps.push_back(members[c].front());
    Elem value = eval_g(reps);
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<std::pair<Elem, Elem>> alt;
      for (std::uint32_t i = 0; i < n; ++i) alt.push_back(members[t[i]][pick[i]]);
      if (eval_g(alt) != value)
        throw construction_error("induced multiplication is ill-defined at class tuple " +
                                 tuple_text(t));
      std::uint32_t i = 0;
      for (; i < n; ++i) {
        if (++pick[i] < members[t[i]].size()) break;
        pick[i] = 0;
      }
      if (i == n) break;
    }
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i) idx = idx * size + t[i];
    g_table[idx] = value;
  });

  std::size_t one_idx = s_index(h.one());
  std::vector<std::string> labels(size);
  for (Elem c = 0; c < size; ++c) {
    auto [a, si] = rep[c];
    labels[c] = h.label(a) + "/" + h.label(s_values[si]);
  }
  std::vector<Elem> canonical(h.size());
  for (Elem a = 0; a < h.size(); ++a) canonical[a] = class_of[node(a, one_idx)];

  FractionStructure fr{
      FiniteHyperring(m, n, size, std::move(f_table), std::move(g_table),
                      class_of[node(h.zero(), one_idx)],
                      class_of[node(h.one(), one_idx)], std::move(labels)),
      S, std::move(class_of), std::move(s_values), std::move(rep),
      std::move(canonical)};
  if (!fr.structure.validate().ok())
    throw construction_error("fraction structure failed validation: " +
                             fr.structure.validate().summary());
  return fr;
}

Hyperideal extend_ideal(const FiniteHyperring& h, const FractionStructure& fr,
                        const Hyperideal& P) {
  Subset out = Subset::empty_set(fr.structure.size());
  P.members.for_each([&](Elem a) {
    for (std::size_t i = 0; i < fr.s_values.size(); ++i)
      out.add(fr.class_of[a * fr.s_values.size() + i]);
  });
  (void)h;
  return Hyperideal{out};
}

Hyperideal contract_ideal(const FiniteHyperring& h, const FractionStructure& fr,
                          const Hyperideal& Q) {
  Subset out = Subset::empty_set(h.size());
  for (Elem a = 0; a < h.size(); ++a)
    if (Q.members.contains(fr.canonical(a))) out.add(a);
  return Hyperideal{out};
}

IdealMap localized_map(const FiniteHyperring& h, const FractionStructure& fr,
                       const IdealMap& fn) {
  return {fn.id + "_S", fn.expansion,
          [&h, &fr, fn](const FiniteHyperring&, const Hyperideal& Q) {
            Hyperideal c = contract_ideal(h, fr, Q);
            return extend_ideal(h, fr, fn(h, c));
          }};
}

// ---------------------------------------------------------------------------
// Homomorphisms.
// ---------------------------------------------------------------------------

HomReport check_homomorphism(const Homomorphism& k) {
  HomReport rep;
  const FiniteHyperring& h1 = *k.source;
  const FiniteHyperring& h2 = *k.target;
  h1.require_validated();
  h2.require_validated();
  if (h1.m() != h2.m() || h1.n() != h2.n()) {
    rep.violations.push_back("arity mismatch between source and target");
    return rep;
  }
  if (k.map.size() != h1.size()) {
    rep.violations.push_back("map is not total on the source carrier");
    return rep;
  }
  for (Elem a : k.map)
    if (a >= h2.size()) {
      rep.violations.push_back("map value out of target range");
      return rep;
    }
  if (k.map[h1.zero()] != h2.zero())
    rep.violations.push_back("zero is not preserved");
  if (k.map[h1.one()] != h2.one())
    rep.violations.push_back("identity is not preserved");

  for_each_tuple(h1.size(), h1.m(), [&](std::span<const Elem> t) {
    Subset lhs = Subset::empty_set(h2.size());
    h1.f(t).for_each([&](Elem c) { lhs.add(k.map[c]); });
    std::vector<Elem> mapped;
    for (Elem u : t) mapped.push_back(k.map[u]);
    if (!(lhs == h2.f(mapped)))
      rep.violations.push_back("hyperaddition not preserved at " + tuple_text(t));
  });
  for_each_tuple(h1.size(), h1.n(), [&](std::span<const Elem> t) {
    std::vector<Elem> mapped;
    for (Elem u : t) mapped.push_back(k.map[u]);
    if (k.map[h1.g(t)] != h2.g(mapped))
      rep.violations.push_back("multiplication not preserved at " + tuple_text(t));
  });
  return rep;
}

bool is_epimorphism(const Homomorphism& k) {
  Subset image = Subset::empty_set(k.target->size());
  for (Elem v : k.map) image.add(v);
  return image == k.target->full();
}

Hyperideal preimage(const Homomorphism& k, const Hyperideal& P2) {
  Subset out = Subset::empty_set(k.source->size());
  for (Elem a = 0; a < k.source->size(); ++a)
    if (P2.members.contains(k.map[a])) out.add(a);
  return Hyperideal{out};
}

HomReport check_map_compatibility(const Homomorphism& k, const IdealMap& phi,
                                  const IdealMap& psi, const IdealMap& delta,
                                  const IdealMap& gamma) {
  HomReport rep = check_homomorphism(k);
  if (!rep.ok()) return rep;
  for (const Hyperideal& Q :
       enumerate_hyperideals(*k.target, k.target->size())) {
    Hyperideal pre = preimage(k, Q);
    if (!(phi(*k.source, pre) == preimage(k, psi(*k.target, Q))))
      rep.violations.push_back("reduction maps disagree on a target hyperideal");
    if (!(delta(*k.source, pre) == preimage(k, gamma(*k.target, Q))))
      rep.violations.push_back("expansion maps disagree on a target hyperideal");
  }
  return rep;
}

}  // namespace hx
