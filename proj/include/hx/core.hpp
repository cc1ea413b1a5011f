#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hx {

using Elem = std::uint32_t;

/// Malformed input: tables with holes, out-of-range indices, unresolved
/// names. Distinct from axiom violations, which land in a ValidationReport.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller asked for something the definitions forbid (e.g. classifying
/// K itself, or a multiplicative set meeting the hyperideal).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configurable enumeration cap was exceeded.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A derived structure (quotient, product) failed a well-definedness check.
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Subset of a carrier, one bit per element index. Carriers are capped at
/// 64 elements; everything in this library is desk-scale by design.
class Subset {
 public:
  Subset() = default;
  Subset(std::uint32_t width, std::uint64_t bits) : width_(width), bits_(bits) {}

  static Subset empty_set(std::uint32_t width) { return Subset(width, 0); }
  static Subset full_set(std::uint32_t width) {
    return Subset(width, width == 64 ? ~0ULL : ((1ULL << width) - 1));
  }
  static Subset singleton(std::uint32_t width, Elem e) {
    return Subset(width, 1ULL << e);
  }

  std::uint32_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(Elem e) const { return (bits_ >> e) & 1ULL; }
  void add(Elem e) { bits_ |= 1ULL << e; }
  void remove(Elem e) { bits_ &= ~(1ULL << e); }

  bool is_empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  bool subset_of(const Subset& o) const { return (bits_ & ~o.bits_) == 0; }
  bool proper_subset_of(const Subset& o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  bool intersects(const Subset& o) const { return (bits_ & o.bits_) != 0; }

  Subset operator|(const Subset& o) const { return Subset(width_, bits_ | o.bits_); }
  Subset operator&(const Subset& o) const { return Subset(width_, bits_ & o.bits_); }
  Subset minus(const Subset& o) const { return Subset(width_, bits_ & ~o.bits_); }
  Subset& operator|=(const Subset& o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(const Subset& o) { bits_ &= o.bits_; return *this; }

  bool operator==(const Subset& o) const = default;
  bool operator<(const Subset& o) const {
    // (cardinality, bit pattern): the canonical enumeration order.
    if (count() != o.count()) return count() < o.count();
    return bits_ < o.bits_;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b;) {
      Elem e = static_cast<Elem>(__builtin_ctzll(b));
      out.push_back(e);
      b &= b - 1;
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b;) {
      fn(static_cast<Elem>(__builtin_ctzll(b)));
      b &= b - 1;
    }
  }

 private:
  std::uint32_t width_ = 0;
  std::uint64_t bits_ = 0;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Iterate all tuples of the given length over {0,...,base-1}.
template <typename Fn>
void for_each_tuple(std::uint32_t base, std::uint32_t len, Fn&& fn) {
  std::vector<Elem> t(len, 0);
  if (base == 0) return;
  while (true) {
    fn(std::span<const Elem>(t));
    std::uint32_t i = 0;
    for (; i < len; ++i) {
      if (++t[i] < base) break;
      t[i] = 0;
    }
    if (i == len) break;
  }
}

/// A finite Krasner (m,n)-hyperring given by explicit tables: an m-ary
/// set-valued hyperaddition f, an n-ary multiplication g, distinguished
/// zero and scalar identity, and the (derived) negation map.
///
/// Construction only checks table shape; call validate() to check the
/// algebraic axioms. All other modules assume a validated structure.
class FiniteHyperring {
 public:
  FiniteHyperring(std::uint32_t m, std::uint32_t n, std::uint32_t size,
                  std::vector<Subset> f_table, std::vector<Elem> g_table,
                  Elem zero, Elem one,
                  std::vector<std::string> labels = {});

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem neg(Elem u) const { return neg_[u]; }
  const std::string& label(Elem u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset full() const { return Subset::full_set(size_); }

  /// Hyperaddition on an m-tuple of elements.
  Subset f(std::span<const Elem> args) const;
  /// Hyperaddition on m subsets: union over all choices of representatives.
  Subset f_subsets(std::span<const Subset> args) const;
  /// Multiplication on an n-tuple.
  Elem g(std::span<const Elem> args) const;
  /// Elementwise image of g over n subsets.
  Subset g_subsets(std::span<const Subset> args) const;
  /// x-fold nested multiplication, consuming x(n-1)+1 arguments.
  Elem g_iterated(std::uint32_t x, std::span<const Elem> args) const;
  Subset g_iterated_subsets(std::uint32_t x, std::span<const Subset> args) const;

  /// Binary product g(a, b, 1^(n-2)).
  Elem mul(Elem a, Elem b) const;
  /// Product of an arbitrary nonempty argument list, folded with mul.
  Elem prod(std::span<const Elem> args) const;
  Subset prod_subsets(std::span<const Subset> args) const;
  /// Binary hypersum f(a, b, 0^(m-2)).
  Subset fadd(Elem a, Elem b) const;

  /// Check every axiom; on success the structure is marked validated and
  /// the negation map is usable.
  const ValidationReport& validate() const;
  bool validated() const { return validated_; }
  /// Throws precondition_error unless validate() has passed.
  void require_validated() const;

  const std::vector<Subset>& raw_f() const { return f_; }
  const std::vector<Elem>& raw_g() const { return g_; }

  std::size_t f_index(std::span<const Elem> args) const;
  std::size_t g_index(std::span<const Elem> args) const;

 private:
  void derive_neg();
  void run_validation(ValidationReport& report) const;

  std::uint32_t m_, n_, size_;
  std::vector<Subset> f_;  // dense, size_^m entries
  std::vector<Elem> g_;    // dense, size_^n entries
  Elem zero_, one_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
  mutable bool validated_ = false;
  mutable bool validation_ran_ = false;
  mutable ValidationReport report_;
};

/// The (2,2)-structure derived from the ring Z_k: singleton hyperaddition,
/// ordinary multiplication. Every commutative ring is a Krasner hyperring
/// this way.
FiniteHyperring ring_zk(std::uint32_t k);

}  // namespace hx
