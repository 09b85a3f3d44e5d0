#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace combicheck {

/// A word is a finite string of positive integers.
using Word = std::vector<int>;

/// Throws std::invalid_argument if some letter is < 1.
void validate_word(std::span<const int> letters);

/// Permutation of [n] in one-line notation. Positions and values are 1-indexed
/// in the public interface; storage is 0-indexed.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `one_line` holds each of 1..n once.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }

  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> one_line() const { return map_; }

  Permutation inverse() const;

  /// w(n) w(n-1) ... w(1)
  Permutation reversed() const;

  /// i -> n + 1 - w(i)
  Permutation complemented() const;

  /// (this * other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Descent statistics of a permutation.
struct DescentStats {
  std::vector<int> descent_set;  // i with w(i) > w(i+1), ascending
  int des = 0;
  int des1 = 0;  // big descents: w(i) > w(i+1) + 1
};

DescentStats perm_stats(const Permutation& w);
int des(const Permutation& w);
int des1(const Permutation& w);

/// Rank-standardization of a word of distinct values: the smallest letter
/// becomes 1, the next 2, and so on. The empty word gives the empty permutation.
Permutation standardize(std::span<const int> distinct_values);

/// Compact rendering: "621543" when n <= 9, comma separated otherwise.
std::string to_string(const Permutation& w);

/// Parses "6,3,2,5,4,1" or "632541".
Permutation parse_permutation(const std::string& text);

/// Calls f(const Permutation&) for every permutation of [n] in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f);

}  // namespace combicheck

#include <algorithm>
#include <numeric>

namespace combicheck {

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    f(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace combicheck
