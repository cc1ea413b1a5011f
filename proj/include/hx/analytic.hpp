#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hx/classify.hpp"

namespace hx::analytic {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "a/b" or a decimal literal into an exact rational.
Rational parse_rational(const std::string& text);
std::string rational_text(const Rational& r);

// ---------------------------------------------------------------------------
// unit-interval-max: carrier [0,1], m = 2 with u (+) v = {max(u,v)} for
// u != v and [0,u] for u = v; g is real 3-ary multiplication. Hyperideals
// are the down-sets [0,c] and [0,c). Everything runs on exact rationals.
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kUnitIntervalM = 2;
inline constexpr std::uint32_t kUnitIntervalN = 3;

struct UIInterval {
  Rational hi;
  bool closed = true;  // [0,hi] when true, [0,hi) when false
  bool operator==(const UIInterval&) const = default;
};

bool ui_contains(const UIInterval& I, const Rational& u);
bool ui_is_proper(const UIInterval& I);
std::string ui_text(const UIInterval& I);
/// Parse "[0,R]" or "[0,R)".
UIInterval ui_parse_interval(const std::string& text);

/// Multiplicative subsets supported in closed form: a finite list of
/// rationals, or the interval (0,hi].
struct UIMulSet {
  std::vector<Rational> points;  // nonempty when interval_hi is unset
  std::optional<Rational> interval_hi;
  bool contains(const Rational& u) const;
  std::string text() const;
};

/// Parse "{r1,r2,...}" or "(0,R]".
UIMulSet ui_parse_mulset(const std::string& text);
bool ui_is_multiplicative(const UIMulSet& S);
bool ui_disjoint(const UIInterval& P, const UIMulSet& S);

/// Closed-form ideal maps; ids as in maps.hpp.
UIInterval ui_apply_phi(const std::string& id, const UIInterval& P);
UIInterval ui_apply_delta(const std::string& id, const UIInterval& P);

struct UIClassification {
  Verdict verdict = Verdict::fails;
  std::optional<Rational> witness_s;
  std::vector<Rational> refutation;  // tuple; empty unless fails
  std::optional<Rational> refutation_s;
  std::string detail;
  bool disjointness_ok = true;
};

/// Replays one tuple (length x(n-1)+1): true when it refutes the
/// classification for the given s.
bool ui_refutes(const UIInterval& P, const std::string& phi_id,
                const std::string& delta_id, const Rational& s,
                const std::vector<Rational>& tuple);

/// Grid-sampled classification at the given step (default 1/20): tries
/// every s of S on the grid against every n-tuple on the grid. A clean
/// sweep is holds_on_sample, never a proof. A violated disjointness
/// precondition is flagged in the result rather than thrown.
UIClassification ui_classify(const UIInterval& P, const std::string& phi_id,
                             const std::string& delta_id, const UIMulSet& S,
                             const Rational& step = Rational(1, 20));

// ---------------------------------------------------------------------------
// modular(p,k,m,n): carrier Z_{p^k} with singleton m-ary addition and n-ary
// multiplication. Hyperideals are <p^e> for e = 0..k (e = k is {0}).
// Exact big-integer arithmetic; membership-query and witness-replay only.
// ---------------------------------------------------------------------------

struct ModularStructure {
  BigInt p;
  std::uint32_t k = 0, m = 0, n = 0;
  BigInt modulus;  // p^k
  std::string id() const;
};

/// Parse "modular(p,k,m,n)".
std::optional<ModularStructure> parse_modular(const std::string& id);

struct ModIdeal {
  std::uint32_t exp = 0;  // <p^exp>; exp == k means {0}
  bool operator==(const ModIdeal&) const = default;
};

/// Parse "<p^e>", "<N>" (N a power of p) or "{0}".
ModIdeal mod_parse_ideal(const ModularStructure& st, const std::string& text);
std::string mod_ideal_text(const ModularStructure& st, const ModIdeal& P);
bool mod_contains(const ModularStructure& st, const ModIdeal& P, const BigInt& v);

ModIdeal mod_apply_phi(const ModularStructure& st, const std::string& id,
                       const ModIdeal& P);
ModIdeal mod_apply_delta(const ModularStructure& st, const std::string& id,
                         const ModIdeal& P);

struct ModClassification {
  Verdict verdict = Verdict::fails;
  std::vector<BigInt> refutation;  // tuple of carrier values when fails
  std::string detail;
};

/// Replays one tuple (length x(n-1)+1) with s = 1.
bool mod_refutes(const ModularStructure& st, const ModIdeal& P,
                 const std::string& phi_id, const std::string& delta_id,
                 const std::vector<BigInt>& tuple);

/// Witness search for S = {1}: scans exponent vectors (tuples of powers of
/// p) of every admissible length up to x_max iterations. Exhaustive over
/// that family; verdict holds means no power-of-p refuter exists and is
/// reported as holds_on_sample.
ModClassification mod_classify(const ModularStructure& st, const ModIdeal& P,
                               const std::string& phi_id,
                               const std::string& delta_id,
                               std::uint32_t x_max = 4);

}  // namespace hx::analytic
