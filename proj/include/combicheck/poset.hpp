#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace combicheck {

/// Poset elements are the integers 0..n-1.
using Element = int;
using ElementMask = std::uint32_t;

inline constexpr int kMaxPosetSize = 32;

class PosetError : public std::runtime_error {
 public:
  enum class Kind { parse, cyclic, invalid };
  PosetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Finite poset on 0..n-1 (n <= 32) stored as up-set and down-set bitmasks.
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of the given cover pairs (i below j). Throws
  /// PosetError(cyclic) if the relation has a cycle, PosetError(invalid) for
  /// out-of-range indices.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  /// up[x] has bit y set iff x <= y. Validates reflexivity, antisymmetry and
  /// transitivity.
  static Poset from_up_masks(std::vector<ElementMask> up);

  int size() const { return n_; }
  bool leq(Element x, Element y) const { return (up_[x] >> y) & 1U; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  ElementMask up_mask(Element x) const { return up_[x]; }
  ElementMask down_mask(Element x) const { return down_[x]; }
  ElementMask upper_covers_mask(Element x) const { return upper_covers_[x]; }
  ElementMask lower_covers_mask(Element x) const { return lower_covers_[x]; }
  bool is_cover(Element x, Element y) const { return (upper_covers_[x] >> y) & 1U; }

  /// All cover pairs (x, y) with x covered by y, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Restriction to elements 0..k-1.
  Poset prefix(int k) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  void finish();

  int n_ = 0;
  std::vector<ElementMask> up_;
  std::vector<ElementMask> down_;
  std::vector<ElementMask> upper_covers_;
  std::vector<ElementMask> lower_covers_;
  std::vector<std::pair<int, int>> covers_;
};

/// Per-element cover counts.
struct CoverCount {
  int down = 0;  // elements covered by x
  int up = 0;    // elements covering x
  friend bool operator==(const CoverCount&, const CoverCount&) = default;
};

std::vector<CoverCount> cover_counts(const Poset& p);

/// Why a poset failed to be a lattice.
struct NotALattice {
  int a = -1;
  int b = -1;
  std::string reason;
};

class NotALatticeError : public std::runtime_error {
 public:
  explicit NotALatticeError(NotALattice info)
      : std::runtime_error("not a lattice: " + info.reason), info_(std::move(info)) {}
  const NotALattice& info() const { return info_; }

 private:
  NotALattice info_;
};

class Lattice {
 public:
  /// Computes meet and join tables, or reports the first pair (in
  /// lexicographic order) lacking a meet or a join.
  static std::variant<Lattice, NotALattice> build(const Poset& p);

  /// Like build() but throws NotALatticeError.
  static Lattice from_poset(const Poset& p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(poset_.size()) + static_cast<std::size_t>(b);
  }

  Poset poset_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

struct ModularityResult {
  bool modular = true;
  std::optional<std::array<Element, 3>> witness;  // (a, b, x) with a <= b violating the modular law
};

/// Checks a v (x ^ b) = (a v x) ^ b for all a <= b and all x. The cover form of
/// modularity is evaluated as well; disagreement throws std::logic_error.
ModularityResult is_modular(const Lattice& l);

/// Three pairwise incomparable elements with equal pairwise meets and equal
/// pairwise joins, i.e. the atoms of an M3 sublattice.
std::optional<std::array<Element, 3>> find_m3_sublattice(const Lattice& l);

/// Elements covering exactly one element.
std::vector<Element> join_irreducibles(const Lattice& l);

/// Distributive iff modular with no M3 sublattice. Cross-checked against the
/// join-irreducible ideal count (Birkhoff); disagreement throws std::logic_error.
bool is_distributive(const Lattice& l);

/// Bijection element -> [n] that is order preserving. Stored both ways.
class LinearExtension {
 public:
  LinearExtension() = default;

  /// `order[k]` is the element receiving label k + 1.
  static LinearExtension from_order(std::vector<Element> order);

  int size() const { return static_cast<int>(order_.size()); }
  /// sigma(x), 1-based label.
  int label(Element x) const { return label_[x]; }
  /// sigma^{-1}(i) for 1 <= i <= n.
  Element element_at(int i) const { return order_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Element>& order() const { return order_; }

  bool extends(const Poset& p) const;

  friend bool operator==(const LinearExtension& a, const LinearExtension& b) { return a.order_ == b.order_; }

 private:
  std::vector<Element> order_;
  std::vector<int> label_;
};

/// Calls f(const LinearExtension&) for each linear extension in lexicographic
/// order of the element sequence, stopping after `cap` of them (0 = no cap).
/// Returns the number emitted; sets *truncated when the cap cut enumeration short.
std::uint64_t linear_extensions(const Poset& p, std::uint64_t cap,
                                const std::function<void(const LinearExtension&)>& f, bool* truncated = nullptr);

std::vector<LinearExtension> all_linear_extensions(const Poset& p, std::uint64_t cap = 0);

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every labelled poset on n elements exactly once. Element k is added to a
/// poset on 0..k-1 together with its strict down-set (an order ideal) and strict
/// up-set (an order filter lying above the whole down-set). Throws
/// LimitExceeded when n > limit.
void enumerate_posets(int n, const std::function<void(const Poset&)>& f, int limit = 6);

/// Every labelled poset on n elements whose restriction to 0..k-1 is `prefix`.
void enumerate_poset_extensions(const Poset& prefix, int n, const std::function<void(const Poset&)>& f);

std::vector<Poset> all_posets(int n);

}  // namespace combicheck
