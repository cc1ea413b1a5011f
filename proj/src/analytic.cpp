#include "hx/analytic.hpp"

#include <algorithm>
#include <sstream>

namespace hx::analytic {

namespace {

const Rational kOne = 1;
const Rational kZero = 0;

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = trimmed(text);
  if (t.empty()) throw input_error("empty rational literal");
  try {
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      BigInt num(t.substr(0, slash)), den(t.substr(slash + 1));
      if (den == 0) throw input_error("zero denominator");
      return Rational(num, den);
    }
    auto dot = t.find('.');
    if (dot == std::string::npos) return Rational(BigInt(t));
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < t.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  } catch (const std::exception&) {
    throw input_error("bad rational literal '" + text + "'");
  }
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// ---------------------------------------------------------------------------
// unit-interval-max
// ---------------------------------------------------------------------------

bool ui_contains(const UIInterval& I, const Rational& u) {
  if (u < 0) return false;
  return I.closed ? u <= I.hi : u < I.hi;
}

bool ui_is_proper(const UIInterval& I) { return !(I.closed && I.hi == kOne); }

std::string ui_text(const UIInterval& I) {
  return "[0," + rational_text(I.hi) + (I.closed ? "]" : ")");
}

UIInterval ui_parse_interval(const std::string& text) {
  std::string t = trimmed(text);
  if (t.size() < 5 || t.front() != '[' ||
      (t.back() != ']' && t.back() != ')'))
    throw input_error("interval must look like [0,R] or [0,R): '" + text + "'");
  auto comma = t.find(',');
  if (comma == std::string::npos || trimmed(t.substr(1, comma - 1)) != "0")
    throw input_error("interval must start at 0: '" + text + "'");
  UIInterval I;
  I.hi = parse_rational(t.substr(comma + 1, t.size() - comma - 2));
  I.closed = t.back() == ']';
  if (I.hi < 0 || I.hi > 1) throw input_error("interval endpoint outside [0,1]");
  return I;
}

bool UIMulSet::contains(const Rational& u) const {
  if (interval_hi) return u > 0 && u <= *interval_hi;
  return std::find(points.begin(), points.end(), u) != points.end();
}

std::string UIMulSet::text() const {
  if (interval_hi) return "(0," + rational_text(*interval_hi) + "]";
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i)
    out += (i ? "," : "") + rational_text(points[i]);
  return out + "}";
}

UIMulSet ui_parse_mulset(const std::string& text) {
  std::string t = trimmed(text);
  UIMulSet S;
  if (t.size() >= 5 && t.front() == '(' && t.back() == ']') {
    auto comma = t.find(',');
    if (comma == std::string::npos || trimmed(t.substr(1, comma - 1)) != "0")
      throw input_error("interval multiplicative set must look like (0,R]");
    S.interval_hi = parse_rational(t.substr(comma + 1, t.size() - comma - 2));
    if (*S.interval_hi <= 0 || *S.interval_hi > 1)
      throw input_error("multiplicative interval endpoint outside (0,1]");
    return S;
  }
  if (t.size() >= 3 && t.front() == '{' && t.back() == '}') {
    std::string body = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string piece =
          comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
      S.points.push_back(parse_rational(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (S.points.empty()) throw input_error("empty multiplicative set");
    return S;
  }
  throw input_error("multiplicative set must look like {r1,...} or (0,R]");
}

bool ui_is_multiplicative(const UIMulSet& S) {
  if (S.interval_hi) return *S.interval_hi <= 1;  // products of (0,h] stay in (0,h]
  // A finite list must be literally closed under 3-ary products.
  for (const Rational& a : S.points)
    for (const Rational& b : S.points)
      for (const Rational& c : S.points)
        if (!S.contains(a * b * c)) return false;
  return true;
}

bool ui_disjoint(const UIInterval& P, const UIMulSet& S) {
  if (S.interval_hi) {
    // (0,h] misses [0,c] / [0,c) iff the ideal contains no positive value
    // <= h, i.e. c = 0 (any positive c admits a point in both).
    return P.hi == 0;
  }
  for (const Rational& s : S.points)
    if (ui_contains(P, s)) return false;
  return true;
}

UIInterval ui_apply_phi(const std::string& id, const UIInterval& P) {
  const std::uint32_t n = kUnitIntervalN;
  if (id == "phi0") return {kZero, true};
  if (id == "phi1") return P;
  auto power = [&](std::uint32_t k) -> UIInterval {
    Rational h = 1;
    for (std::uint32_t i = 0; i < k; ++i) h *= P.hi;
    return {h, P.closed};
  };
  if (id == "phiN") return power(n);
  if (id == "phiW") {
    // Powers [0,c^k] strictly descend for c < 1, so the chain's limit is
    // {0}; c = 1 is a fixed point.
    if (P.hi == kOne) return P;
    return {kZero, true};
  }
  if (id.rfind("pow:", 0) == 0) {
    std::uint32_t k = static_cast<std::uint32_t>(std::stoul(id.substr(4)));
    if (k == 0 || (k - 1) % (n - 1) != 0)
      throw input_error("power exponent must be x(n-1)+1");
    return power(k);
  }
  throw input_error("unknown reduction id '" + id + "'");
}

UIInterval ui_apply_delta(const std::string& id, const UIInterval& P) {
  if (id == "delta0") return P;
  if (id == "deltaK") return {kOne, true};
  if (id == "delta1" || id == "deltaM") {
    // Every positive u < 1 has a power below any positive bound, and the
    // unique maximal hyperideal is [0,1); both maps send proper P there.
    if (!ui_is_proper(P)) return P;
    return {kOne, false};
  }
  throw input_error("unknown expansion id '" + id + "'");
}

namespace {

Rational ui_product(const std::vector<Rational>& t) {
  Rational v = 1;
  for (const Rational& u : t) v *= u;
  return v;
}

bool ui_consequent_ok(const UIInterval& P, const UIInterval& D,
                      const Rational& s, const std::vector<Rational>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (ui_contains(P, s * t[i])) return true;
    std::vector<Rational> swapped = t;
    swapped[i] = s;
    if (ui_contains(D, ui_product(swapped))) return true;
  }
  return false;
}

}  // namespace

bool ui_refutes(const UIInterval& P, const std::string& phi_id,
                const std::string& delta_id, const Rational& s,
                const std::vector<Rational>& tuple) {
  const std::uint32_t n = kUnitIntervalN;
  if (tuple.size() < n || (tuple.size() - 1) % (n - 1) != 0)
    throw input_error("tuple length must be x(n-1)+1 with x >= 1");
  UIInterval ph = ui_apply_phi(phi_id, P);
  UIInterval de = ui_apply_delta(delta_id, P);
  Rational v = ui_product(tuple);
  if (!ui_contains(P, v) || ui_contains(ph, v)) return false;
  return !ui_consequent_ok(P, de, s, tuple);
}

UIClassification ui_classify(const UIInterval& P, const std::string& phi_id,
                             const std::string& delta_id, const UIMulSet& S,
                             const Rational& step) {
  if (!ui_is_proper(P)) throw precondition_error("classification needs a proper hyperideal");
  if (!ui_is_multiplicative(S)) throw input_error("S is not a multiplicative set");
  if (step <= 0 || step > 1) throw input_error("grid step must lie in (0,1]");
  UIClassification out;
  out.disjointness_ok = ui_disjoint(P, S);

  UIInterval ph = ui_apply_phi(phi_id, P);
  UIInterval de = ui_apply_delta(delta_id, P);

  std::vector<Rational> grid;
  for (Rational u = 0; u <= 1; u += step) grid.push_back(u);

  std::vector<Rational> s_candidates;
  if (S.interval_hi) {
    for (const Rational& u : grid)
      if (S.contains(u)) s_candidates.push_back(u);
  } else {
    s_candidates = S.points;
  }
  if (s_candidates.empty())
    throw input_error("no sample of S lies on the grid");

  // Collect antecedent tuples on the grid.
  std::vector<std::vector<Rational>> antecedents;
  const std::uint32_t n = kUnitIntervalN;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Rational> t;
    for (std::size_t i : idx) t.push_back(grid[i]);
    Rational v = ui_product(t);
    if (ui_contains(P, v) && !ui_contains(ph, v)) antecedents.push_back(t);
    std::uint32_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < grid.size()) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  if (antecedents.empty()) {
    out.verdict = Verdict::vacuous;
    return out;
  }
  for (const Rational& s : s_candidates) {
    bool all_ok = true;
    for (const auto& t : antecedents) {
      if (!ui_consequent_ok(P, de, s, t)) {
        all_ok = false;
        if (out.refutation.empty()) {
          out.refutation = t;
          out.refutation_s = s;
        }
        break;
      }
    }
    if (all_ok) {
      out.verdict = Verdict::holds_on_sample;
      out.witness_s = s;
      out.refutation.clear();
      out.refutation_s.reset();
      out.detail = "no grid tuple refutes at step " + rational_text(step);
      return out;
    }
  }
  out.verdict = Verdict::fails;
  out.detail = "grid tuple refutes every sampled s";
  return out;
}

// ---------------------------------------------------------------------------
// modular(p,k,m,n)
// ---------------------------------------------------------------------------

std::string ModularStructure::id() const {
  std::ostringstream os;
  os << "modular(" << p << "," << k << "," << m << "," << n << ")";
  return os.str();
}

std::optional<ModularStructure> parse_modular(const std::string& id) {
  std::string t = trimmed(id);
  if (t.rfind("modular(", 0) != 0 || t.back() != ')') return std::nullopt;
  std::string body = t.substr(8, t.size() - 9);
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto comma = body.find(',', pos);
    parts.push_back(trimmed(comma == std::string::npos ? body.substr(pos)
                                                       : body.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 4) throw input_error("modular(p,k,m,n) takes four parameters");
  ModularStructure st;
  try {
    st.p = BigInt(parts[0]);
    st.k = static_cast<std::uint32_t>(std::stoul(parts[1]));
    st.m = static_cast<std::uint32_t>(std::stoul(parts[2]));
    st.n = static_cast<std::uint32_t>(std::stoul(parts[3]));
  } catch (const std::exception&) {
    throw input_error("bad modular(p,k,m,n) parameters: '" + id + "'");
  }
  if (st.p < 2 || st.k == 0 || st.m < 2 || st.n < 2)
    throw input_error("modular parameters out of range");
  st.modulus = 1;
  for (std::uint32_t i = 0; i < st.k; ++i) st.modulus *= st.p;
  return st;
}

namespace {

// p-adic valuation of v mod p^k, with 0 valued k.
std::uint32_t valuation(const ModularStructure& st, BigInt v) {
  v %= st.modulus;
  if (v < 0) v += st.modulus;
  if (v == 0) return st.k;
  std::uint32_t e = 0;
  while (v % st.p == 0) {
    v /= st.p;
    ++e;
  }
  return e;
}

BigInt pow_p(const ModularStructure& st, std::uint32_t e) {
  BigInt v = 1;
  for (std::uint32_t i = 0; i < e; ++i) v *= st.p;
  return v;
}

}  // namespace

ModIdeal mod_parse_ideal(const ModularStructure& st, const std::string& text) {
  std::string t = trimmed(text);
  if (t == "{0}") return {st.k};
  if (t.size() < 3 || t.front() != '<' || t.back() != '>')
    throw input_error("modular hyperideal must look like <p^e>, <N> or {0}");
  std::string body = trimmed(t.substr(1, t.size() - 2));
  BigInt gen;
  auto caret = body.find('^');
  try {
    if (caret != std::string::npos) {
      BigInt base(trimmed(body.substr(0, caret)));
      std::uint32_t e = static_cast<std::uint32_t>(std::stoul(body.substr(caret + 1)));
      gen = 1;
      for (std::uint32_t i = 0; i < e; ++i) gen *= base;
    } else {
      gen = BigInt(body);
    }
  } catch (const std::exception&) {
    throw input_error("bad modular hyperideal generator: '" + text + "'");
  }
  return {valuation(st, gen)};
}

std::string mod_ideal_text(const ModularStructure& st, const ModIdeal& P) {
  if (P.exp >= st.k) return "{0}";
  std::ostringstream os;
  os << "<" << st.p << "^" << P.exp << ">";
  return os.str();
}

bool mod_contains(const ModularStructure& st, const ModIdeal& P, const BigInt& v) {
  return valuation(st, v) >= P.exp;
}

ModIdeal mod_apply_phi(const ModularStructure& st, const std::string& id,
                       const ModIdeal& P) {
  auto clamp = [&](std::uint64_t e) {
    return ModIdeal{static_cast<std::uint32_t>(std::min<std::uint64_t>(e, st.k))};
  };
  if (id == "phi0") return {st.k};
  if (id == "phi1") return P;
  if (id == "phiN") return clamp(std::uint64_t(P.exp) * st.n);
  if (id == "phiW") return P.exp == 0 ? P : ModIdeal{st.k};
  if (id.rfind("pow:", 0) == 0) {
    std::uint32_t r = static_cast<std::uint32_t>(std::stoul(id.substr(4)));
    if (r == 0 || (r - 1) % (st.n - 1) != 0)
      throw input_error("power exponent must be x(n-1)+1");
    return clamp(std::uint64_t(P.exp) * r);
  }
  throw input_error("unknown reduction id '" + id + "'");
}

ModIdeal mod_apply_delta(const ModularStructure&, const std::string& id,
                         const ModIdeal& P) {
  if (id == "delta0") return P;
  if (id == "deltaK") return {0};
  if (id == "delta1" || id == "deltaM") {
    // <p> is the unique prime (and maximal) hyperideal above any proper P.
    return P.exp == 0 ? P : ModIdeal{1};
  }
  throw input_error("unknown expansion id '" + id + "'");
}

namespace {

bool mod_consequent_ok(const ModularStructure& st, const ModIdeal& P,
                       const ModIdeal& D, const std::vector<BigInt>& t) {
  // s = 1: first consequent is u_i in P, second replaces u_i with 1.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (mod_contains(st, P, t[i])) return true;
    BigInt rest = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) rest = (rest * t[j]) % st.modulus;
    if (mod_contains(st, D, rest)) return true;
  }
  return false;
}

}  // namespace

bool mod_refutes(const ModularStructure& st, const ModIdeal& P,
                 const std::string& phi_id, const std::string& delta_id,
                 const std::vector<BigInt>& tuple) {
  if (tuple.size() < st.n || (tuple.size() - 1) % (st.n - 1) != 0)
    throw input_error("tuple length must be x(n-1)+1 with x >= 1");
  ModIdeal ph = mod_apply_phi(st, phi_id, P);
  ModIdeal de = mod_apply_delta(st, delta_id, P);
  BigInt v = 1;
  for (const BigInt& u : tuple) v = (v * u) % st.modulus;
  if (!mod_contains(st, P, v) || mod_contains(st, ph, v)) return false;
  return !mod_consequent_ok(st, P, de, tuple);
}

ModClassification mod_classify(const ModularStructure& st, const ModIdeal& P,
                               const std::string& phi_id,
                               const std::string& delta_id,
                               std::uint32_t x_max) {
  if (P.exp == 0) throw precondition_error("classification needs a proper hyperideal");
  ModClassification out;
  ModIdeal ph = mod_apply_phi(st, phi_id, P);
  ModIdeal de = mod_apply_delta(st, delta_id, P);
  bool any_antecedent = false;

  // Membership of any product of powers of p depends only on the exponent
  // sum, so scanning exponent vectors covers this family exhaustively.
  for (std::uint32_t x = 1; x <= x_max; ++x) {
    std::uint32_t len = x * (st.n - 1) + 1;
    std::vector<std::uint32_t> e(len, 0);
    while (true) {
      std::uint64_t sum = 0;
      for (std::uint32_t v : e) sum += v;
      // Membership depends only on min(sum, k): the product is p^sum mod
      // p^k, which is 0 once sum reaches k.
      std::uint32_t eff = static_cast<std::uint32_t>(std::min<std::uint64_t>(sum, st.k));
      bool antecedent = eff >= P.exp && eff < ph.exp;
      if (antecedent) {
        any_antecedent = true;
        bool ok = false;
        for (std::uint32_t i = 0; i < len && !ok; ++i) {
          if (e[i] >= P.exp) ok = true;
          std::uint64_t rest = sum - e[i];
          std::uint32_t reff = static_cast<std::uint32_t>(std::min<std::uint64_t>(rest, st.k));
          if (reff >= de.exp) ok = true;
        }
        if (!ok) {
          for (std::uint32_t v : e) out.refutation.push_back(pow_p(st, v));
          out.verdict = Verdict::fails;
          out.detail = "power-of-" + st.p.str() + " tuple refutes with s = 1";
          return out;
        }
      }
      std::uint32_t i = 0;
      for (; i < len; ++i) {
        if (++e[i] <= st.k) break;
        e[i] = 0;
      }
      if (i == len) break;
    }
  }
  out.verdict = any_antecedent ? Verdict::holds_on_sample : Verdict::vacuous;
  out.detail = any_antecedent
                   ? "no power-of-p tuple refutes up to " +
                         std::to_string(x_max) + " iterations"
                   : "no power-of-p tuple meets the antecedent";
  return out;
}

}  // namespace hx::analytic
