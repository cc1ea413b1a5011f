#include "hx/core.hpp"

#include <algorithm>
#include <sstream>

namespace hx {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " (witness:";
    for (Elem e : v.witness) os << ' ' << e;
    os << ") " << v.detail << '\n';
  }
  return os.str();
}

namespace {

std::size_t pow_sz(std::uint32_t base, std::uint32_t exp) {
  std::size_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

FiniteHyperring::FiniteHyperring(std::uint32_t m, std::uint32_t n,
                                 std::uint32_t size, std::vector<Subset> f_table,
                                 std::vector<Elem> g_table, Elem zero, Elem one,
                                 std::vector<std::string> labels)
    : m_(m), n_(n), size_(size), f_(std::move(f_table)), g_(std::move(g_table)),
      zero_(zero), one_(one), labels_(std::move(labels)) {
  if (m_ < 2 || n_ < 2) throw input_error("arities must be at least 2");
  if (size_ < 1) throw input_error("carrier must be nonempty");
  if (size_ > 64) throw input_error("carrier larger than 64 elements unsupported");
  if (f_.size() != pow_sz(size_, m_)) throw input_error("f table has wrong size");
  if (g_.size() != pow_sz(size_, n_)) throw input_error("g table has wrong size");
  if (zero_ >= size_ || one_ >= size_) throw input_error("zero/one out of range");
  for (const Subset& s : f_) {
    if (s.width() != size_) throw input_error("f hypervalue has wrong width");
    if ((s.bits() & ~Subset::full_set(size_).bits()) != 0)
      throw input_error("f hypervalue out of range");
  }
  for (Elem e : g_)
    if (e >= size_) throw input_error("g value out of range");
  if (labels_.empty()) {
    labels_.resize(size_);
    for (std::uint32_t i = 0; i < size_; ++i) labels_[i] = "a" + std::to_string(i);
  }
  if (labels_.size() != size_) throw input_error("label count mismatch");
  derive_neg();
}

void FiniteHyperring::derive_neg() {
  // neg(u) is the unique v with 0 in f(u, v, 0^(m-2)); uniqueness is an
  // axiom checked by validate(). Fall back to u itself when absent so the
  // validator can still run and report.
  neg_.assign(size_, 0);
  std::vector<Elem> args(m_, zero_);
  for (Elem u = 0; u < size_; ++u) {
    Elem found = u;
    for (Elem v = 0; v < size_; ++v) {
      args[0] = u;
      args[1] = v;
      if (f(args).contains(zero_)) {
        found = v;
        break;
      }
    }
    neg_[u] = found;
  }
}

std::size_t FiniteHyperring::f_index(std::span<const Elem> args) const {
  std::size_t idx = 0;
  for (std::uint32_t i = 0; i < m_; ++i) idx = idx * size_ + args[i];
  return idx;
}

std::size_t FiniteHyperring::g_index(std::span<const Elem> args) const {
  std::size_t idx = 0;
  for (std::uint32_t i = 0; i < n_; ++i) idx = idx * size_ + args[i];
  return idx;
}

Subset FiniteHyperring::f(std::span<const Elem> args) const {
  if (args.size() != m_) throw input_error("f arity mismatch");
  return f_[f_index(args)];
}

Subset FiniteHyperring::f_subsets(std::span<const Subset> args) const {
  if (args.size() != m_) throw input_error("f arity mismatch");
  for (const Subset& a : args)
    if (a.is_empty()) throw input_error("empty argument subset");
  Subset out = Subset::empty_set(size_);
  std::vector<Elem> t(m_);
  std::vector<std::vector<Elem>> choices(m_);
  for (std::uint32_t i = 0; i < m_; ++i) choices[i] = args[i].elements();
  std::vector<std::size_t> pos(m_, 0);
  while (true) {
    for (std::uint32_t i = 0; i < m_; ++i) t[i] = choices[i][pos[i]];
    out |= f(t);
    std::uint32_t i = 0;
    for (; i < m_; ++i) {
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
    }
    if (i == m_) break;
  }
  return out;
}

Elem FiniteHyperring::g(std::span<const Elem> args) const {
  if (args.size() != n_) throw input_error("g arity mismatch");
  return g_[g_index(args)];
}

Subset FiniteHyperring::g_subsets(std::span<const Subset> args) const {
  if (args.size() != n_) throw input_error("g arity mismatch");
  for (const Subset& a : args)
    if (a.is_empty()) throw input_error("empty argument subset");
  Subset out = Subset::empty_set(size_);
  std::vector<Elem> t(n_);
  std::vector<std::vector<Elem>> choices(n_);
  for (std::uint32_t i = 0; i < n_; ++i) choices[i] = args[i].elements();
  std::vector<std::size_t> pos(n_, 0);
  while (true) {
    for (std::uint32_t i = 0; i < n_; ++i) t[i] = choices[i][pos[i]];
    out.add(g(t));
    std::uint32_t i = 0;
    for (; i < n_; ++i) {
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
    }
    if (i == n_) break;
  }
  return out;
}

Elem FiniteHyperring::g_iterated(std::uint32_t x, std::span<const Elem> args) const {
  if (x == 0 || args.size() != static_cast<std::size_t>(x) * (n_ - 1) + 1)
    throw input_error("g_iterated argument count must be x(n-1)+1");
  // Left-nested composition; associativity makes the bracketing irrelevant.
  std::vector<Elem> head(args.begin(), args.begin() + n_);
  Elem acc = g(head);
  std::size_t pos = n_;
  for (std::uint32_t step = 1; step < x; ++step) {
    std::vector<Elem> t;
    t.push_back(acc);
    for (std::uint32_t i = 0; i < n_ - 1; ++i) t.push_back(args[pos++]);
    acc = g(t);
  }
  return acc;
}

Subset FiniteHyperring::g_iterated_subsets(std::uint32_t x,
                                           std::span<const Subset> args) const {
  if (x == 0 || args.size() != static_cast<std::size_t>(x) * (n_ - 1) + 1)
    throw input_error("g_iterated argument count must be x(n-1)+1");
  std::vector<Subset> head(args.begin(), args.begin() + n_);
  Subset acc = g_subsets(head);
  std::size_t pos = n_;
  for (std::uint32_t step = 1; step < x; ++step) {
    std::vector<Subset> t;
    t.push_back(acc);
    for (std::uint32_t i = 0; i < n_ - 1; ++i) t.push_back(args[pos++]);
    acc = g_subsets(t);
  }
  return acc;
}

Elem FiniteHyperring::mul(Elem a, Elem b) const {
  std::vector<Elem> t(n_, one_);
  t[0] = a;
  t[1] = b;
  return g(t);
}

Elem FiniteHyperring::prod(std::span<const Elem> args) const {
  if (args.empty()) throw input_error("empty product");
  Elem acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = mul(acc, args[i]);
  return acc;
}

Subset FiniteHyperring::prod_subsets(std::span<const Subset> args) const {
  if (args.empty()) throw input_error("empty product");
  Subset acc = args[0];
  Subset one_set = Subset::singleton(size_, one_);
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::vector<Subset> t(n_, one_set);
    t[0] = acc;
    t[1] = args[i];
    acc = g_subsets(t);
  }
  return acc;
}

Subset FiniteHyperring::fadd(Elem a, Elem b) const {
  std::vector<Elem> t(m_, zero_);
  t[0] = a;
  t[1] = b;
  return f(t);
}

void FiniteHyperring::require_validated() const {
  if (!validated_) {
    validate();
    if (!validated_)
      throw precondition_error("structure failed validation: " + report_.summary());
  }
}

const ValidationReport& FiniteHyperring::validate() const {
  if (!validation_ran_) {
    report_ = ValidationReport{};
    run_validation(report_);
    validation_ran_ = true;
    validated_ = report_.ok();
  }
  return report_;
}

void FiniteHyperring::run_validation(ValidationReport& rep) const {
  auto add = [&rep](std::string axiom, std::vector<Elem> witness,
                    std::string detail = "") {
    rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };

  // Nonempty hypervalues.
  bool empty_found = false;
  for_each_tuple(size_, m_, [&](std::span<const Elem> t) {
    if (empty_found) return;
    if (f_[f_index(t)].is_empty()) {
      add("f-nonempty", {t.begin(), t.end()}, "hypervalue is empty");
      empty_found = true;
    }
  });
  if (empty_found) return;  // everything below assumes nonempty values

  // f invariant under argument permutation. Adjacent transpositions suffice.
  {
    bool bad = false;
    for_each_tuple(size_, m_, [&](std::span<const Elem> t) {
      if (bad) return;
      std::vector<Elem> s(t.begin(), t.end());
      for (std::uint32_t i = 0; i + 1 < m_ && !bad; ++i) {
        std::swap(s[i], s[i + 1]);
        if (!(f(s) == f(t))) {
          add("f-commutative", {t.begin(), t.end()},
              "swap of arguments " + std::to_string(i) + "," + std::to_string(i + 1) +
                  " changes the hypervalue");
          bad = true;
        }
        std::swap(s[i], s[i + 1]);
      }
    });
  }

  // g invariant under argument permutation (the structures here are
  // commutative hyperrings).
  {
    bool bad = false;
    for_each_tuple(size_, n_, [&](std::span<const Elem> t) {
      if (bad) return;
      std::vector<Elem> s(t.begin(), t.end());
      for (std::uint32_t i = 0; i + 1 < n_ && !bad; ++i) {
        std::swap(s[i], s[i + 1]);
        if (g(s) != g(t)) {
          add("g-commutative", {t.begin(), t.end()}, "product order-sensitive");
          bad = true;
        }
        std::swap(s[i], s[i + 1]);
      }
    });
  }

  // 0 scalar neutral: f(u, 0^(m-1)) = {u}.
  for (Elem u = 0; u < size_; ++u) {
    std::vector<Elem> t(m_, zero_);
    t[0] = u;
    if (!(f(t) == Subset::singleton(size_, u))) {
      add("zero-neutral", {u}, "f(u, 0^(m-1)) != {u}");
    }
  }

  // Unique inverse: exactly one v with 0 in f(u, v, 0^(m-2)).
  for (Elem u = 0; u < size_; ++u) {
    int count = 0;
    for (Elem v = 0; v < size_; ++v)
      if (fadd(u, v).contains(zero_)) ++count;
    if (count != 1)
      add("unique-inverse", {u},
          count == 0 ? "no inverse" : std::to_string(count) + " inverses");
  }
  // Inverse uniqueness failures make reversibility meaningless; stop if so.
  if (!rep.violations.empty() &&
      std::any_of(rep.violations.begin(), rep.violations.end(),
                  [](const AxiomViolation& v) { return v.axiom == "unique-inverse"; }))
    return;

  // m-ary associativity of f on all (2m-1)-tuples: nest at position j,
  // compare against nesting at position 0.
  {
    bool bad = false;
    for_each_tuple(size_, 2 * m_ - 1, [&](std::span<const Elem> t) {
      if (bad) return;
      auto placed = [&](std::uint32_t j) {
        // f(t_0..t_{j-1}, f(t_j..t_{j+m-1}), t_{j+m}..t_{2m-2})
        std::vector<Elem> inner(t.begin() + j, t.begin() + j + m_);
        Subset inner_val = f(inner);
        std::vector<Subset> outer;
        for (std::uint32_t i = 0; i < j; ++i)
          outer.push_back(Subset::singleton(size_, t[i]));
        outer.push_back(inner_val);
        for (std::uint32_t i = j + m_; i < 2 * m_ - 1; ++i)
          outer.push_back(Subset::singleton(size_, t[i]));
        return f_subsets(outer);
      };
      Subset base = placed(0);
      for (std::uint32_t j = 1; j < m_ && !bad; ++j) {
        if (!(placed(j) == base)) {
          add("f-associative", {t.begin(), t.end()},
              "nesting at position " + std::to_string(j) + " disagrees");
          bad = true;
        }
      }
    });
  }

  // Reversibility: u in f(v_1^m) implies each v_i in f(u, neg of others).
  {
    bool bad = false;
    for_each_tuple(size_, m_, [&](std::span<const Elem> v) {
      if (bad) return;
      Subset val = f(v);
      val.for_each([&](Elem u) {
        if (bad) return;
        for (std::uint32_t i = 0; i < m_ && !bad; ++i) {
          std::vector<Elem> t;
          t.push_back(u);
          for (std::uint32_t j = 0; j < m_; ++j)
            if (j != i) t.push_back(neg_[v[j]]);
          if (!f(t).contains(v[i])) {
            std::vector<Elem> w(v.begin(), v.end());
            w.push_back(u);
            add("reversibility", w, "component " + std::to_string(i) + " not recoverable");
            bad = true;
          }
        }
      });
    });
  }

  // n-ary associativity of g on all (2n-1)-tuples.
  {
    bool bad = false;
    for_each_tuple(size_, 2 * n_ - 1, [&](std::span<const Elem> t) {
      if (bad) return;
      auto placed = [&](std::uint32_t j) {
        std::vector<Elem> inner(t.begin() + j, t.begin() + j + n_);
        Elem inner_val = g(inner);
        std::vector<Elem> outer;
        for (std::uint32_t i = 0; i < j; ++i) outer.push_back(t[i]);
        outer.push_back(inner_val);
        for (std::uint32_t i = j + n_; i < 2 * n_ - 1; ++i) outer.push_back(t[i]);
        return g(outer);
      };
      Elem base = placed(0);
      for (std::uint32_t j = 1; j < n_ && !bad; ++j) {
        if (placed(j) != base) {
          add("g-associative", {t.begin(), t.end()},
              "nesting at position " + std::to_string(j) + " disagrees");
          bad = true;
        }
      }
    });
  }

  // Distributivity of g over f in every slot.
  {
    bool bad = false;
    // Tuple layout: n-1 outer arguments u, then m inner arguments v.
    for_each_tuple(size_, (n_ - 1) + m_, [&](std::span<const Elem> t) {
      if (bad) return;
      std::vector<Elem> u(t.begin(), t.begin() + (n_ - 1));
      std::vector<Elem> v(t.begin() + (n_ - 1), t.end());
      Subset fv = f(v);
      for (std::uint32_t slot = 0; slot < n_ && !bad; ++slot) {
        std::vector<Subset> gargs;
        for (std::uint32_t i = 0, ui = 0; i < n_; ++i) {
          if (i == slot)
            gargs.push_back(fv);
          else
            gargs.push_back(Subset::singleton(size_, u[ui++]));
        }
        Subset lhs = g_subsets(gargs);
        // rhs = f(g(..,v_1,..), ..., g(..,v_m,..))
        std::vector<Subset> fargs;
        for (Elem vi : v) {
          std::vector<Elem> ga;
          for (std::uint32_t i = 0, ui = 0; i < n_; ++i)
            ga.push_back(i == slot ? vi : u[ui++]);
          fargs.push_back(Subset::singleton(size_, g(ga)));
        }
        Subset rhs = f_subsets(fargs);
        if (!(lhs == rhs)) {
          add("distributivity", {t.begin(), t.end()},
              "slot " + std::to_string(slot));
          bad = true;
        }
      }
    });
  }

  // 0 absorbing for g.
  {
    bool bad = false;
    for_each_tuple(size_, n_ - 1, [&](std::span<const Elem> t) {
      if (bad) return;
      for (std::uint32_t slot = 0; slot < n_ && !bad; ++slot) {
        std::vector<Elem> ga;
        for (std::uint32_t i = 0, ui = 0; i < n_; ++i)
          ga.push_back(i == slot ? zero_ : t[ui++]);
        if (g(ga) != zero_) {
          add("zero-absorbing", ga, "");
          bad = true;
        }
      }
    });
  }

  // 1 scalar identity: g(u, 1^(n-1)) = u.
  for (Elem u = 0; u < size_; ++u) {
    std::vector<Elem> t(n_, one_);
    t[0] = u;
    if (g(t) != u) add("one-identity", {u}, "g(u, 1^(n-1)) != u");
  }
}

FiniteHyperring ring_zk(std::uint32_t k) {
  if (k < 1 || k > 64) throw input_error("ring_zk: k out of range");
  std::vector<Subset> f(static_cast<std::size_t>(k) * k, Subset::empty_set(k));
  std::vector<Elem> g(static_cast<std::size_t>(k) * k, 0);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      f[a * k + b] = Subset::singleton(k, (a + b) % k);
      g[a * k + b] = (a * b) % k;
    }
  std::vector<std::string> labels(k);
  for (Elem a = 0; a < k; ++a) labels[a] = std::to_string(a);
  return FiniteHyperring(2, 2, k, std::move(f), std::move(g), 0, k == 1 ? 0 : 1,
                         std::move(labels));
}

}  // namespace hx
