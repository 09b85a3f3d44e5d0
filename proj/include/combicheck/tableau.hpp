#pragma once

#include <compare>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "combicheck/permutation.hpp"

namespace combicheck {

/// Semistandard tableau of straight shape. Rows are listed top to bottom and
/// none is empty.
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument unless rows weakly increase, columns strictly
  /// increase, row lengths weakly decrease and entries are positive.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  std::vector<int> shape() const;
  std::vector<int> conjugate_shape() const;
  int max_entry() const;

  /// T_{<= m}: the entries at most m, again a straight tableau.
  Tableau at_most(int m) const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Cell of a skew piece; row and col are 1-based.
struct SkewCell {
  int row = 0;
  int col = 0;
  int entry = 0;
  friend auto operator<=>(const SkewCell&, const SkewCell&) = default;
};

/// T_{> m}: the cells of T holding entries larger than the threshold.
struct SkewPiece {
  int threshold = 0;
  std::vector<SkewCell> cells;  // sorted by (row, col)
  friend bool operator==(const SkewPiece&, const SkewPiece&) = default;
};

SkewPiece above(const Tableau& t, int m);

/// A union B: defined only when the cells are disjoint, the union has straight
/// shape and it is semistandard. Otherwise nullopt.
std::optional<Tableau> disjoint_union(const Tableau& a, const SkewPiece& b);

/// Row word: rows read left to right, bottom row first.
Word row_word(const Tableau& t);

nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
std::string to_string(const Tableau& t);

}  // namespace combicheck
