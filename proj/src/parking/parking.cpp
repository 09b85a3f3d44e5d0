#include "combicheck/parking.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace combicheck {

namespace {

constexpr int kMaxDirect = 8;

// occupant[s - 1] = label of the car in spot s, 0 if empty. Cars in `labels`
// arrive in order; car d prefers pref(d). Returns false if a car fails.
template <class Pref>
bool park_labels(std::span<const int> labels, int spots, Pref pref, std::vector<int>& occupant,
                 int* failed_at = nullptr) {
  occupant.assign(static_cast<std::size_t>(spots), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int s = pref(labels[i]);
    while (s <= spots && occupant[static_cast<std::size_t>(s - 1)] != 0) ++s;
    if (s > spots) {
      if (failed_at != nullptr) *failed_at = static_cast<int>(i) + 1;
      return false;
    }
    occupant[static_cast<std::size_t>(s - 1)] = labels[i];
  }
  return true;
}

std::vector<int> identity_word(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return w;
}

// Spot of each car label after parking the word (0 if the label is absent).
std::vector<int> spots_of(const ParkingContent& b, std::span<const int> word) {
  std::vector<int> occupant;
  if (!park_labels(word, b.size(), [&](int d) { return b(d); }, occupant)) {
    throw std::logic_error("a car failed to park during insertion");
  }
  std::vector<int> spot(static_cast<std::size_t>(b.size()) + 1, 0);
  for (int s = 1; s <= b.size(); ++s) {
    const int d = occupant[static_cast<std::size_t>(s - 1)];
    if (d != 0) spot[static_cast<std::size_t>(d)] = s;
  }
  return spot;
}

nlohmann::json placement_json(const RookPlacement& r) {
  auto j = nlohmann::json::array();
  for (const auto& rook : r) j.push_back({rook.row, rook.col});
  return j;
}

std::vector<int> descent_set(const Permutation& w) { return perm_stats(w).descent_set; }

bool is_subset_sorted(std::span<const int> a, std::span<const int> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ParkingFailure::ParkingFailure(int car)
    : std::runtime_error("parking failure at car " + std::to_string(car)), car_(car) {}

ParkingContent::ParkingContent(std::vector<int> b) : b_(std::move(b)) {
  for (std::size_t j = 0; j < b_.size(); ++j) {
    if (b_[j] < 1 || b_[j] > static_cast<int>(j) + 1 || (j > 0 && b_[j] < b_[j - 1])) {
      throw std::invalid_argument("not a parking content: position " + std::to_string(j + 1));
    }
  }
}

bool is_parking_function(std::span<const int> prefs) {
  std::vector<int> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] < 1 || sorted[j] > static_cast<int>(j) + 1) return false;
  }
  return true;
}

Permutation park(std::span<const int> prefs) {
  validate_word(prefs);
  const int n = static_cast<int>(prefs.size());
  const auto cars = identity_word(n);
  std::vector<int> occupant;
  int failed = 0;
  if (!park_labels(cars, n, [&](int i) { return prefs[static_cast<std::size_t>(i - 1)]; }, occupant, &failed)) {
    throw ParkingFailure(failed);
  }
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) sigma[static_cast<std::size_t>(occupant[static_cast<std::size_t>(s - 1)] - 1)] = s;
  return Permutation(std::move(sigma));
}

ParkingStats parking_stats(std::span<const int> prefs) {
  if (!is_parking_function(prefs)) throw std::invalid_argument("not a parking function");
  const int n = static_cast<int>(prefs.size());
  ParkingStats s;
  s.cosum = n * (n + 1) / 2;
  for (int i = 1; i <= n; ++i) {
    const int p = prefs[static_cast<std::size_t>(i - 1)];
    s.cosum -= p;
    if (p > i) ++s.exced;
  }
  return s;
}

InducedParking induced_pf(const ParkingContent& b, const Permutation& w) {
  if (b.size() != w.size()) throw std::invalid_argument("induced_pf: length mismatch");
  Word pi(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) pi[static_cast<std::size_t>(i - 1)] = b(w(i));
  Permutation sigma = park(pi);
  return {std::move(pi), std::move(sigma)};
}

std::uint64_t mu(const ParkingContent& b) {
  std::uint64_t out = 1;
  std::uint64_t run = 0;
  for (int j = 1; j <= b.size(); ++j) {
    run = (j > 1 && b(j) == b(j - 1)) ? run + 1 : 1;
    out *= run;
  }
  return out;
}

Board Board::from_content(const ParkingContent& b) {
  Board board;
  for (int v : b.values()) board.heights.push_back(v - 1);
  return board;
}

bool Board::contains(int row, int col) const {
  return col >= 1 && col <= size() && row >= 1 && row <= heights[static_cast<std::size_t>(col - 1)];
}

RookPlacement normalize_placement(RookPlacement r) {
  std::sort(r.begin(), r.end());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r[i].row == r[j].row || r[i].col == r[j].col) throw std::invalid_argument("attacking rooks");
    }
  }
  return r;
}

bool placement_on_board(const RookPlacement& r, const Board& board) {
  return std::all_of(r.begin(), r.end(), [&](const Rook& x) { return board.contains(x.row, x.col); });
}

std::vector<std::uint64_t> rook_numbers(const Board& board) {
  const int n = board.size();
  if (n > 16) throw std::invalid_argument("rook_numbers: board wider than 16 columns");
  int rows = 0;
  for (int h : board.heights) rows = std::max(rows, h);
  std::vector<std::uint64_t> dp(std::size_t{1} << rows, 0);
  dp[0] = 1;
  for (int h : board.heights) {
    std::vector<std::uint64_t> next = dp;  // column left empty
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (dp[mask] == 0) continue;
      for (int r = 0; r < h; ++r) {
        if ((mask >> r) & 1U) continue;
        next[mask | (std::size_t{1} << r)] += dp[mask];
      }
    }
    dp = std::move(next);
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    out[static_cast<std::size_t>(std::popcount(mask))] += dp[mask];
  }
  return out;
}

std::vector<RookPlacement> all_rook_placements(const Board& board) {
  std::vector<RookPlacement> out;
  RookPlacement current;
  std::vector<bool> used_row(static_cast<std::size_t>(board.size()) + 1, false);
  auto rec = [&](auto& self, int col) -> void {
    if (col > board.size()) {
      out.push_back(normalize_placement(current));
      return;
    }
    self(self, col + 1);
    for (int r = 1; r <= board.heights[static_cast<std::size_t>(col - 1)]; ++r) {
      if (used_row[static_cast<std::size_t>(r)]) continue;
      used_row[static_cast<std::size_t>(r)] = true;
      current.push_back({r, col});
      self(self, col + 1);
      current.pop_back();
      used_row[static_cast<std::size_t>(r)] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

BiPoly excedance_polynomial(const ParkingContent& b, ExcedMethod method) {
  const int n = b.size();
  if (method == ExcedMethod::rook) {
    const auto rooks = rook_numbers(Board::from_content(b));
    const BiPoly t_minus_1 = BiPoly::t() - BiPoly(1);
    BiPoly out;
    for (int k = 0; k <= n; ++k) {
      if (rooks[static_cast<std::size_t>(k)] == 0) continue;
      out += BiPoly(BigInt(rooks[static_cast<std::size_t>(k)]) * factorial(static_cast<unsigned>(n - k))) *
             t_minus_1.pow(static_cast<unsigned>(k));
    }
    return out;
  }
  if (n > kMaxDirect) throw std::domain_error("excedance_polynomial: direct method needs n <= 8");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(n, [&](const Permutation& w) {
    int e = 0;
    for (int i = 1; i <= n; ++i) e += b(w(i)) > i;
    coeffs[static_cast<std::size_t>(e)] += 1;
  });
  return BiPoly::from_t_coeffs(coeffs);
}

BiPoly descent_polynomial(const ParkingContent& b) {
  const int n = b.size();
  if (n > kMaxDirect) throw std::domain_error("descent_polynomial: needs n <= 8");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(n, 1)), 0);
  for_each_permutation(n, [&](const Permutation& w) {
    coeffs[static_cast<std::size_t>(des(induced_pf(b, w).sigma))] += 1;
  });
  return BiPoly::from_t_coeffs(coeffs);
}

RookPlacement phi(const ParkingContent& b, const Permutation& w, std::span<const int> a) {
  const Permutation sigma = induced_pf(b, w).sigma;
  std::vector<int> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      !is_subset_sorted(sorted, descent_set(sigma))) {
    throw std::invalid_argument("phi: A is not a set of descents of sigma^{b,w}");
  }
  RookPlacement r;
  for (int i : sorted) r.push_back({sigma(i + 1), w(i)});
  r = normalize_placement(std::move(r));
  if (!placement_on_board(r, Board::from_content(b))) throw std::logic_error("phi: placement leaves the board");
  return r;
}

Insertion insert_forward(const ParkingContent& b, const RookPlacement& placement, const Word& u0) {
  const int n = b.size();
  const RookPlacement r = normalize_placement(placement);
  if (!placement_on_board(r, Board::from_content(b))) throw std::invalid_argument("insert_forward: rook off the board");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& rook : r) seen[static_cast<std::size_t>(rook.col)] = true;
  if (u0.size() + r.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("insert_forward: u0 must order the free columns");
  }
  for (int d : u0) {
    if (d < 1 || d > n || seen[static_cast<std::size_t>(d)]) {
      throw std::invalid_argument("insert_forward: u0 must order the free columns");
    }
    seen[static_cast<std::size_t>(d)] = true;
  }

  Word u = u0;
  std::vector<int> occupant;
  for (const auto& rook : r) {
    if (!park_labels(u, n, [&](int d) { return b(d); }, occupant)) {
      throw std::logic_error("insert_forward: a car failed to park");
    }
    const int d = occupant[static_cast<std::size_t>(rook.row - 1)];
    if (d == 0) throw std::logic_error("insert_forward: spot r_j is empty");
    u.insert(std::find(u.begin(), u.end(), d), rook.col);
  }

  Insertion out{Permutation(u), {}};
  for (const auto& rook : r) {
    out.a.push_back(static_cast<int>(std::find(u.begin(), u.end(), rook.col) - u.begin()) + 1);
  }
  std::sort(out.a.begin(), out.a.end());
  if (phi(b, out.w, out.a) != r) throw std::logic_error("insert_forward: Phi(w, A) != R");
  return out;
}

Word insert_inverse(const ParkingContent& b, const RookPlacement& placement, const Permutation& w,
                    std::span<const int> a) {
  const RookPlacement r = normalize_placement(placement);
  RookPlacement image;
  try {
    image = phi(b, w, a);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("insert_inverse: (w, A) is not in the preimage of R");
  }
  if (image != r) throw std::invalid_argument("insert_inverse: (w, A) is not in the preimage of R");

  const auto one_line = w.one_line();
  Word u(one_line.begin(), one_line.end());
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    const auto pos = std::find(u.begin(), u.end(), it->col);
    if (pos + 1 == u.end()) throw std::logic_error("insert_inverse: c_j is last in the word");
    const int d = *(pos + 1);
    Word without(u.begin(), u.end());
    without.erase(without.begin() + (pos - u.begin()));
    // Undoing step j: d_j parks in r_j both with and without c_j present.
    if (spots_of(b, u)[static_cast<std::size_t>(d)] != it->row ||
        spots_of(b, without)[static_cast<std::size_t>(d)] != it->row) {
      throw std::logic_error("insert_inverse: deletion does not undo an insertion step");
    }
    u = std::move(without);
  }
  return u;
}

std::vector<ParkingContent> all_parking_contents(int n) {
  std::vector<ParkingContent> out;
  std::vector<int> b;
  auto rec = [&](auto& self, int j) -> void {
    if (j > n) {
      out.emplace_back(b);
      return;
    }
    for (int v = b.empty() ? 1 : b.back(); v <= j; ++v) {
      b.push_back(v);
      self(self, j + 1);
      b.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

struct ContentResult {
  std::uint64_t placements = 0;
  std::uint64_t round_trips = 0;
  nlohmann::json witness = nullptr;
};

nlohmann::json content_witness(const ParkingContent& b, const std::string& what) {
  return {{"b", std::vector<int>(b.values().begin(), b.values().end())}, {"failure", what}};
}

ContentResult check_content(const ParkingContent& b, bool preimages) {
  ContentResult res;
  const int n = b.size();
  const BiPoly exced = excedance_polynomial(b, ExcedMethod::direct);
  const BiPoly descents = descent_polynomial(b);
  if (exced != descents) {
    res.witness = content_witness(b, "exced-vs-des");
    res.witness["exced"] = to_json(exced);
    res.witness["des"] = to_json(descents);
    return res;
  }
  if (excedance_polynomial(b, ExcedMethod::rook) != exced) {
    res.witness = content_witness(b, "direct-vs-rook");
    return res;
  }

  std::map<Word, std::uint64_t> fibres;
  for_each_permutation(n, [&](const Permutation& w) { ++fibres[induced_pf(b, w).pi]; });
  const std::uint64_t m = mu(b);
  for (const auto& [pi, count] : fibres) {
    if (count != m) {
      res.witness = content_witness(b, "mu");
      res.witness["pi"] = pi;
      return res;
    }
  }
  if (!preimages) return res;

  const Board board = Board::from_content(b);
  std::map<RookPlacement, std::vector<Insertion>> pre;
  for_each_permutation(n, [&](const Permutation& w) {
    const auto d = descent_set(induced_pf(b, w).sigma);
    for (unsigned s = 0; s < (1U << d.size()); ++s) {
      std::vector<int> a;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if ((s >> i) & 1U) a.push_back(d[i]);
      }
      pre[phi(b, w, a)].push_back({w, a});
    }
  });
  const auto placements = all_rook_placements(board);
  if (pre.size() != placements.size()) {
    res.witness = content_witness(b, "phi-image");
    return res;
  }
  for (const auto& r : placements) {
    ++res.placements;
    auto it = pre.find(r);
    const auto k = static_cast<unsigned>(r.size());
    if (it == pre.end() || BigInt(it->second.size()) != factorial(static_cast<unsigned>(n) - k)) {
      res.witness = content_witness(b, "preimage-count");
      res.witness["R"] = placement_json(r);
      return res;
    }
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& rook : r) used[static_cast<std::size_t>(rook.col)] = true;
    Word u0;
    for (int c = 1; c <= n; ++c) {
      if (!used[static_cast<std::size_t>(c)]) u0.push_back(c);
    }
    std::vector<Insertion> built;
    do {
      Insertion ins = insert_forward(b, r, u0);
      ++res.round_trips;
      if (insert_inverse(b, r, ins.w, ins.a) != u0) {
        res.witness = content_witness(b, "round-trip");
        res.witness["R"] = placement_json(r);
        res.witness["u0"] = u0;
        return res;
      }
      built.push_back(std::move(ins));
    } while (std::next_permutation(u0.begin(), u0.end()));
    // The insertions must hit every preimage exactly once.
    auto key = [](const Insertion& x) { return std::pair(x.w, x.a); };
    auto cmp = [&](const Insertion& x, const Insertion& y) { return key(x) < key(y); };
    auto expected = it->second;
    std::sort(built.begin(), built.end(), cmp);
    std::sort(expected.begin(), expected.end(), cmp);
    if (built != expected) {
      res.witness = content_witness(b, "insertion-not-bijective");
      res.witness["R"] = placement_json(r);
      return res;
    }
  }
  return res;
}

}  // namespace

Report verify_fixed_content(int n, const Executor& exec) {
  Report r;
  r.theorem = "fixed-content";
  const auto contents = all_parking_contents(n);
  const bool preimages = n <= 5;
  const auto results =
      exec.map<ContentResult>(contents.size(), [&](std::size_t i) { return check_content(contents[i], preimages); });
  std::uint64_t placements = 0;
  std::uint64_t round_trips = 0;
  for (const auto& res : results) {
    ++r.instances;
    placements += res.placements;
    round_trips += res.round_trips;
    if (!res.witness.is_null()) r.fail(res.witness);
  }
  r.details["n"] = n;
  r.details["contents"] = contents.size();
  r.details["preimages_checked"] = preimages;
  r.details["placements"] = placements;
  r.details["round_trips"] = round_trips;
  return r;
}

}  // namespace combicheck
