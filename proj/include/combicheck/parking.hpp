#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "combicheck/bipoly.hpp"
#include "combicheck/parallel.hpp"
#include "combicheck/permutation.hpp"
#include "combicheck/report.hpp"

namespace combicheck {

/// Raised when some car drives past the last spot.
class ParkingFailure : public std::runtime_error {
 public:
  explicit ParkingFailure(int car);
  /// 1-based arrival index of the first car that cannot park.
  int car() const { return car_; }

 private:
  int car_;
};

/// Weakly increasing b with b_j <= j.
class ParkingContent {
 public:
  ParkingContent() = default;
  /// Throws std::invalid_argument unless b is a parking content.
  explicit ParkingContent(std::vector<int> b);

  int size() const { return static_cast<int>(b_.size()); }
  /// b_j for 1 <= j <= n.
  int operator()(int j) const { return b_[static_cast<std::size_t>(j - 1)]; }
  std::span<const int> values() const { return b_; }

  friend auto operator<=>(const ParkingContent&, const ParkingContent&) = default;

 private:
  std::vector<int> b_;
};

/// True iff the sorted rearrangement satisfies b_j <= j.
bool is_parking_function(std::span<const int> prefs);

/// Car i tries spot prefs[i] and moves forward. Returns the outcome
/// oc = sigma(1)...sigma(n), sigma(i) = spot of car i. Throws ParkingFailure.
/// Preferences must be positive.
Permutation park(std::span<const int> prefs);

struct ParkingStats {
  int cosum = 0;  // C(n+1, 2) - sum of preferences
  int exced = 0;  // i with pi_i > i
};

/// Throws std::invalid_argument if prefs is not a parking function.
ParkingStats parking_stats(std::span<const int> prefs);

struct InducedParking {
  Word pi;           // pi_i = b_{w(i)}
  Permutation sigma; // oc(pi)
};

InducedParking induced_pf(const ParkingContent& b, const Permutation& w);

/// mu(b): product over values a of (multiplicity of a)!.
std::uint64_t mu(const ParkingContent& b);

/// Ferrers board B_b; column c has cells in rows 1 .. b_c - 1.
struct Board {
  std::vector<int> heights;  // heights[c - 1] = b_c - 1

  static Board from_content(const ParkingContent& b);
  int size() const { return static_cast<int>(heights.size()); }
  bool contains(int row, int col) const;
};

struct Rook {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Rook&, const Rook&) = default;
};

/// Kept sorted by row, which is the canonical form used for comparison.
using RookPlacement = std::vector<Rook>;

/// Sorts by row and checks rows and columns are pairwise distinct.
/// Throws std::invalid_argument on attacking rooks.
RookPlacement normalize_placement(RookPlacement r);

bool placement_on_board(const RookPlacement& r, const Board& board);

/// rook_k for k = 0..n by dynamic programming over columns with a bitmask of
/// used rows. Supports n <= 16.
std::vector<std::uint64_t> rook_numbers(const Board& board);

/// Every nonattacking placement on the board, each sorted by row.
std::vector<RookPlacement> all_rook_placements(const Board& board);

enum class ExcedMethod { direct, rook };

/// Sum over w in S_n of t^exced(pi^{b,w}). The direct method enumerates S_n
/// (n <= 8); the rook method uses sum_k rook_k (n-k)! (t-1)^k.
BiPoly excedance_polynomial(const ParkingContent& b, ExcedMethod method);

/// Sum over w in S_n of t^des(sigma^{b,w}); n <= 8.
BiPoly descent_polynomial(const ParkingContent& b);

/// Phi(w, A) = {(sigma(i+1), w(i)) : i in A}. Throws std::invalid_argument if
/// A is not a subset of Des(sigma^{b,w}); the result being a placement on B_b
/// is checked and a failure throws std::logic_error.
RookPlacement phi(const ParkingContent& b, const Permutation& w, std::span<const int> a);

struct Insertion {
  Permutation w;
  std::vector<int> a;  // ascending
  friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// Builds the preimage of R indexed by u0, an ordering of the columns R does
/// not use. Rooks are inserted in row order: park the current word (car d has
/// preference b_d, cars arrive in word order), find the car d_j in spot r_j
/// and put c_j immediately before it. Throws std::invalid_argument if R is not
/// a placement on B_b or u0 is not an ordering of the free columns.
Insertion insert_forward(const ParkingContent& b, const RookPlacement& r, const Word& u0);

/// Deletes c_k, ..., c_1 from w, checking at each step that the deletion undoes
/// the matching insertion. Throws std::invalid_argument unless Phi(w, A) = R.
Word insert_inverse(const ParkingContent& b, const RookPlacement& r, const Permutation& w,
                    std::span<const int> a);

/// All parking contents of length n in lexicographic order (Catalan many).
std::vector<ParkingContent> all_parking_contents(int n);

/// Calls f(prefs) for every parking function of length n in lexicographic
/// order. If first > 0 only those with pi_1 = first are visited.
template <class F>
void for_each_parking_function(int n, F&& f, int first = 0) {
  if (n <= 0) {
    if (first == 0) f(Word{});
    return;
  }
  Word prefs(static_cast<std::size_t>(n), 1);
  if (first > 0) prefs[0] = first;
  const std::size_t lo = first > 0 ? 1 : 0;
  for (;;) {
    if (is_parking_function(prefs)) f(static_cast<const Word&>(prefs));
    std::size_t i = prefs.size();
    while (i > lo && prefs[i - 1] == n) prefs[--i] = 1;
    if (i == lo) return;
    ++prefs[i - 1];
  }
}

/// For every content of length n: excedance sum = descent sum, by brute force,
/// together with direct = rook on the excedance side and the mu(b) fibre
/// sizes. When n <= 5 also checks that each k-rook placement has exactly
/// (n-k)! preimages under Phi and that insertion round-trips.
Report verify_fixed_content(int n, const Executor& exec);

}  // namespace combicheck
