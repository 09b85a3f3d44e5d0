#include "combicheck/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace combicheck {

namespace {

bool is_semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_semistandard(rows_)) throw std::invalid_argument("not a semistandard tableau of straight shape");
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

std::vector<int> Tableau::conjugate_shape() const {
  std::vector<int> c(rows_.empty() ? 0 : rows_[0].size(), 0);
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) ++c[j];
  }
  return c;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_) {
    if (!row.empty()) m = std::max(m, row.back());
  }
  return m;
}

Tableau Tableau::at_most(int m) const {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows_) {
    std::vector<int> kept;
    for (int x : row) {
      if (x <= m) kept.push_back(x);
    }
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return Tableau(std::move(out));
}

SkewPiece above(const Tableau& t, int m) {
  SkewPiece s;
  s.threshold = m;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const auto& row = t.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] > m) s.cells.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1, row[c]});
    }
  }
  return s;
}

std::optional<Tableau> disjoint_union(const Tableau& a, const SkewPiece& b) {
  std::map<std::pair<int, int>, int> cells;
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    for (std::size_t c = 0; c < a.rows()[r].size(); ++c) {
      cells[{static_cast<int>(r) + 1, static_cast<int>(c) + 1}] = a.rows()[r][c];
    }
  }
  for (const auto& cell : b.cells) {
    if (cell.row < 1 || cell.col < 1) return std::nullopt;
    if (!cells.emplace(std::pair(cell.row, cell.col), cell.entry).second) return std::nullopt;
  }
  std::vector<std::vector<int>> rows;
  for (const auto& [pos, entry] : cells) {
    const auto [r, c] = pos;
    if (r > static_cast<int>(rows.size()) + 1) return std::nullopt;
    if (r == static_cast<int>(rows.size()) + 1) rows.emplace_back();
    auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (c != static_cast<int>(row.size()) + 1) return std::nullopt;
    row.push_back(entry);
  }
  if (!is_semistandard(rows)) return std::nullopt;
  return Tableau(std::move(rows));
}

Word row_word(const Tableau& t) {
  Word w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

nlohmann::json to_json(const Tableau& t) { return t.rows(); }

Tableau tableau_from_json(const nlohmann::json& j) { return Tableau(j.get<std::vector<std::vector<int>>>()); }

std::string to_string(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace combicheck
