#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hx/analytic.hpp"
#include "hx/io.hpp"
#include "hx/theorems.hpp"

using namespace hx;

namespace {

Subset sub(const FiniteHyperring& h, std::initializer_list<Elem> es) {
  Subset x = Subset::empty_set(h.size());
  for (Elem e : es) x.add(e);
  return x;
}

bool has_axiom(const ValidationReport& rep, const std::string& axiom) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_CASE("three-element structure validates and has the frozen lattice") {
  FiniteHyperring h = three_element_demo();
  CHECK(h.validate().ok());
  // elements: 0 -> "0", 1 -> "1", 2 -> "u"
  auto lattice = enumerate_hyperideals(h, 8);
  REQUIRE(lattice.size() == 3);
  CHECK(lattice[0].members == sub(h, {0}));
  CHECK(lattice[1].members == sub(h, {0, 2}));
  CHECK(lattice[2].members == h.full());
}

TEST_CASE("frozen hyperideal-operation values on the three-element structure") {
  FiniteHyperring h = three_element_demo();
  h.validate();
  const Elem u = 2;
  CHECK(principal(h, u).members == sub(h, {0, 2}));
  CHECK(radical_by_primes(h, Hyperideal{sub(h, {0})}).members == sub(h, {0, 2}));
  CHECK(radical_by_powers(h, Hyperideal{sub(h, {0})}).members == sub(h, {0, 2}));
  CHECK(colon(h, Hyperideal{sub(h, {0})}, u).members == sub(h, {0, 2}));
  const std::vector<Subset> a{sub(h, {0, 2}), sub(h, {0})};
  CHECK(h.f_subsets(a) == sub(h, {0, 2}));
  const std::vector<Subset> b{h.full(), h.full()};
  CHECK(h.f_subsets(b) == h.full());
}

TEST_CASE("frozen ideal-map values on the three-element structure") {
  FiniteHyperring h = three_element_demo();
  h.validate();
  const Hyperideal P{sub(h, {0, 2})};
  CHECK(builtin_phi("phiN")(h, P).members == sub(h, {0}));
  CHECK(builtin_phi("phiW")(h, P).members == sub(h, {0}));
  CHECK(builtin_delta("deltaM")(h, Hyperideal{sub(h, {0})}).members ==
        sub(h, {0, 2}));
  CHECK(builtin_phi("phi0")(h, P).members == sub(h, {0}));
  CHECK(builtin_phi("phi1")(h, P).members == P.members);
  CHECK(builtin_delta("deltaK")(h, P).members == h.full());
}

TEST_CASE("validator names the broken axiom for documented mutations") {
  FiniteHyperring good = three_element_demo();
  const std::uint32_t sz = good.size();

  SUBCASE("broken inverse: remove 0 from u+u") {
    auto f = good.raw_f();
    Subset uu(sz, 0);
    uu.add(2);
    f[2 * sz + 2] = uu;  // u+u = {u}
    FiniteHyperring bad(2, 2, sz, std::move(f), good.raw_g(), 0, 1,
                        good.labels());
    const auto& rep = bad.validate();
    CHECK_FALSE(rep.ok());
    CHECK(has_axiom(rep, "unique-inverse"));
    CHECK_FALSE(rep.violations[0].witness.empty());
  }
  SUBCASE("broken distributivity: u*u = u") {
    auto g = good.raw_g();
    g[2 * sz + 2] = 2;
    FiniteHyperring bad(2, 2, sz, good.raw_f(), std::move(g), 0, 1,
                        good.labels());
    const auto& rep = bad.validate();
    CHECK_FALSE(rep.ok());
    CHECK(has_axiom(rep, "distributivity"));
  }
  SUBCASE("broken identity: 1*u = 1") {
    auto g = good.raw_g();
    g[1 * sz + 2] = 1;
    g[2 * sz + 1] = 1;
    FiniteHyperring bad(2, 2, sz, good.raw_f(), std::move(g), 0, 1,
                        good.labels());
    const auto& rep = bad.validate();
    CHECK_FALSE(rep.ok());
    CHECK(has_axiom(rep, "one-identity"));
  }
}

TEST_CASE("ring-derived structures validate") {
  for (std::uint32_t k : {2u, 3u, 4u, 6u, 8u}) {
    FiniteHyperring h = ring_zk(k);
    CHECK(h.validate().ok());
  }
}

TEST_CASE("radical oracles agree on every small corpus structure") {
  for (const auto& e : build_corpus()) {
    if (e.h.size() > 8) continue;
    for (const auto& P : enumerate_hyperideals(e.h, 8))
      CHECK(radical_by_primes(e.h, P) == radical_by_powers(e.h, P));
  }
}

TEST_CASE("classification on the three-element structure") {
  FiniteHyperring h = three_element_demo();
  h.validate();
  const Hyperideal P{sub(h, {0, 2})};
  const MultiplicativeSet S{sub(h, {1})};
  // {0,u} is prime, hence primary, hence delta1-S-primary.
  CHECK(is_prime(h, P));
  CHECK(is_primary(h, P));
  CHECK(is_delta_S_primary(h, P, builtin_delta("delta1"), S, {}).ok());
  // phi1 excludes everything: vacuous.
  auto cl = is_phi_delta_S_primary(h, P, builtin_phi("phi1"),
                                   builtin_delta("delta0"), S, {});
  CHECK(cl.verdict == Verdict::vacuous);
  // Classifying K itself is a precondition error.
  CHECK_THROWS_AS(is_phi_delta_S_primary(h, Hyperideal{h.full()},
                                         builtin_phi("phi0"),
                                         builtin_delta("delta0"), S, {}),
                  precondition_error);
}

TEST_CASE("ideal-map contracts hold for the builtins") {
  FiniteHyperring h = ring_zk(8);
  h.validate();
  for (const char* id : {"phi0", "phi1", "phiN", "phiW", "pow:3"}) {
    auto rep = verify_contract(builtin_phi(id), h);
    CHECK_MESSAGE(rep.ok(), id);
  }
  for (const char* id : {"delta0", "delta1", "deltaK", "deltaM"}) {
    auto rep = verify_contract(builtin_delta(id), h);
    CHECK_MESSAGE(rep.ok(), id);
  }
}

TEST_CASE("structure document round-trip") {
  for (const auto& e : build_corpus()) {
    if (e.h.size() > 12) continue;
    auto doc = emit_structure(e.h, e.id);
    FiniteHyperring back = load_structure_json(doc);
    CHECK(back.raw_f() == e.h.raw_f());
    CHECK(back.raw_g() == e.h.raw_g());
    CHECK(back.zero() == e.h.zero());
    CHECK(back.one() == e.h.one());
    CHECK(back.validate().ok());
  }
}

TEST_CASE("structure document rejects conflicts and holes") {
  auto doc = emit_structure(three_element_demo(), "k3");
  SUBCASE("conflicting g rows") {
    nlohmann::json extra;
    extra["args"] = {"a1", "a2"};
    extra["value"] = "a0";  // contradicts 1*u = u
    doc["g"].push_back(extra);
    CHECK_THROWS_AS(load_structure_json(doc), input_error);
  }
  SUBCASE("missing f row") {
    doc["f"].erase(0);
    CHECK_THROWS_AS(load_structure_json(doc), input_error);
  }
  SUBCASE("unknown element") {
    doc["zero"] = "nope";
    CHECK_THROWS_AS(load_structure_json(doc), input_error);
  }
}

TEST_CASE("exact modular witness replay") {
  namespace an = hx::analytic;
  auto st = an::parse_modular("modular(5,25,4,3)");
  REQUIRE(st.has_value());
  an::ModIdeal P{5};  // <5^5>
  // 5^5 lies in P but not in pow:5(P) = <5^25> = {0}.
  an::BigInt v = 3125;
  CHECK(an::mod_contains(*st, P, v));
  CHECK_FALSE(an::mod_contains(*st, an::mod_apply_phi(*st, "pow:5", P), v));
  std::vector<an::BigInt> w(5, 5);
  CHECK(an::mod_refutes(*st, P, "pow:5", "delta0", w));
  auto cl = an::mod_classify(*st, P, "pow:5", "delta0");
  CHECK(cl.verdict == Verdict::fails);
  CHECK(an::mod_refutes(*st, P, "pow:5", "delta0", cl.refutation));
}

TEST_CASE("unit-interval facts") {
  namespace an = hx::analytic;
  an::UIInterval P{an::Rational(1, 2), true};
  // The fixed tuple (0.6, 0.7, 0.8) does not refute: 0.6*0.8 lands in P.
  CHECK_FALSE(an::ui_refutes(P, "phiW", "delta0", 1,
                             {an::Rational(3, 5), an::Rational(7, 10),
                              an::Rational(4, 5)}));
  CHECK(an::ui_refutes(P, "phiW", "delta0", 1,
                       {an::Rational(9, 10), an::Rational(9, 10),
                        an::Rational(3, 5)}));
  auto cl = an::ui_classify(P, "phiW", "delta0", an::ui_parse_mulset("(0,1/10]"));
  CHECK(cl.verdict == Verdict::holds_on_sample);
  CHECK_FALSE(cl.disjointness_ok);  // flagged, not thrown
}

TEST_CASE("localization and product plumbing") {
  FiniteHyperring h = ring_zk(6);
  h.validate();
  // S = {1,5}: unit denominators, isomorphic to z6.
  Subset sb = sub(h, {1, 5});
  FractionStructure fr = localize(h, MultiplicativeSet{sb});
  CHECK(fr.structure.size() == 6);
  for (const auto& P : enumerate_hyperideals(h, 8)) {
    Hyperideal back = contract_ideal(h, fr, extend_ideal(h, fr, P));
    Subset uni = Subset::empty_set(h.size());
    sb.for_each([&](Elem t) { uni = uni | colon(h, P, t).members; });
    CHECK(back.members == uni);
  }
  FiniteHyperring z2 = ring_zk(2);
  z2.validate();
  ProductStructure pr = direct_product(h, z2);
  CHECK(enumerate_hyperideals(pr.structure, 12).size() ==
        enumerate_hyperideals(h, 8).size() *
            enumerate_hyperideals(z2, 8).size());
}
