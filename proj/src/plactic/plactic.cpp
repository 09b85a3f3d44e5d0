#include "combicheck/plactic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace combicheck {

namespace {

using Rows = std::vector<std::vector<int>>;

void insert_letter(Rows& rows, int x, const BumpObserver* observer) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    const int bumped = *it;
    *it = x;
    if (observer != nullptr && *observer) (*observer)(static_cast<int>(r) + 1, bumped);
    x = bumped;
  }
  rows.push_back({x});
}

Rows insert_word(Rows rows, std::span<const int> word, const BumpObserver* observer = nullptr) {
  for (int x : word) insert_letter(rows, x, observer);
  return rows;
}

nlohmann::json tableau_list(const std::vector<Tableau>& ts) {
  auto j = nlohmann::json::array();
  for (const auto& t : ts) j.push_back(to_json(t));
  return j;
}

std::uint64_t word_count(int alphabet, int max_len) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int len = 0; len <= max_len; ++len) {
    total += power;
    power *= static_cast<std::uint64_t>(alphabet);
  }
  return total;
}

}  // namespace

Tableau rsk_insert(const Tableau& t, std::span<const int> word, const BumpObserver& observer) {
  validate_word(word);
  return Tableau(insert_word(t.rows(), word, &observer));
}

Tableau rsk_p(std::span<const int> word) { return rsk_insert(Tableau(), word); }

bool knuth_equiv(std::span<const int> u, std::span<const int> v) { return rsk_p(u) == rsk_p(v); }

int greene_oracle(std::span<const int> word, int k, GreeneMode mode) {
  if (word.size() > 12) throw std::invalid_argument("greene_oracle: word longer than 12");
  if (k < 1) throw std::invalid_argument("greene_oracle: k must be positive");
  validate_word(word);
  const bool inc = mode == GreeneMode::increasing;
  auto fits = [&](int end, int x) { return inc ? end <= x : end > x; };
  std::map<std::pair<std::size_t, std::vector<int>>, int> memo;
  // ends: the last letter of each nonempty chain, sorted.
  auto best = [&](auto& self, std::size_t pos, const std::vector<int>& ends) -> int {
    if (pos == word.size()) return 0;
    const auto key = std::pair(pos, ends);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int x = word[pos];
    int result = self(self, pos + 1, ends);
    auto extend = [&](std::vector<int> next) {
      std::sort(next.begin(), next.end());
      result = std::max(result, 1 + self(self, pos + 1, next));
    };
    if (static_cast<int>(ends.size()) < k) {
      auto next = ends;
      next.push_back(x);
      extend(std::move(next));
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      if (i > 0 && ends[i] == ends[i - 1]) continue;
      if (!fits(ends[i], x)) continue;
      auto next = ends;
      next[i] = x;
      extend(std::move(next));
    }
    memo.emplace(key, result);
    return result;
  };
  return best(best, 0, {});
}

CentralizerSet centralizer_search(const Word& u, int alphabet, int max_len, const Executor& exec,
                                  std::uint64_t budget) {
  validate_word(u);
  if (alphabet < 1 || max_len < 0) throw std::invalid_argument("centralizer_search: bad bounds");
  const std::uint64_t total = word_count(alphabet, max_len);
  if (total > budget) {
    throw BudgetExceeded("centralizer_search: " + std::to_string(total) + " words exceed the budget of " +
                         std::to_string(budget));
  }
  const Rows pu = insert_word({}, u);
  struct Part {
    std::set<Tableau> members;
    std::uint64_t tested = 0;
  };
  // Part 0 holds the empty word; part f holds words starting with f.
  const auto parts = exec.map<Part>(static_cast<std::size_t>(alphabet) + 1, [&](std::size_t f) {
    Part part;
    auto test = [&](const Word& w) {
      ++part.tested;
      Rows pw = insert_word({}, w);
      if (insert_word(pu, w) == insert_word(pw, u)) part.members.insert(Tableau(std::move(pw)));
    };
    if (f == 0) {
      test({});
      return part;
    }
    for (int len = 1; len <= max_len; ++len) {
      Word w(static_cast<std::size_t>(len), 1);
      w[0] = static_cast<int>(f);
      for (;;) {
        test(w);
        std::size_t i = w.size();
        while (i > 1 && w[i - 1] == alphabet) w[--i] = 1;
        if (i == 1) break;
        ++w[i - 1];
      }
    }
    return part;
  });
  CentralizerSet out{u, alphabet, max_len, 0, {}};
  std::set<Tableau> all;
  for (const auto& p : parts) {
    out.words_tested += p.tested;
    all.insert(p.members.begin(), p.members.end());
  }
  out.members.assign(all.begin(), all.end());
  return out;
}

bool check_no_bump(const Word& u, const Word& w) {
  const std::set<int> letters(u.begin(), u.end());
  bool ok = true;
  const BumpObserver observer = [&](int, int bumped) {
    if (letters.count(bumped) == 0) ok = false;
  };
  insert_word(insert_word({}, w), u, &observer);
  return ok;
}

Word rc_m(std::span<const int> w, int m) {
  validate_word(w);
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it > m) throw std::invalid_argument("rc_m: letter " + std::to_string(*it) + " exceeds m");
    out.push_back(m - *it + 1);
  }
  return out;
}

Tableau evac_m(const Tableau& t, int m) {
  if (t.max_entry() > m) throw std::invalid_argument("evac_m: entry exceeds m");
  return rsk_p(rc_m(row_word(t), m));
}

Tableau tau_m(const Tableau& t, int m) {
  const Tableau low = evac_m(t.at_most(m), m);
  auto out = disjoint_union(low, above(t, m));
  // evac_m preserves shape, so the reassembly is always defined.
  if (!out) throw std::logic_error("tau_m: evacuation changed the shape");
  return *out;
}

Report verify_first_rows_theorem(const Word& u, int alphabet, int max_len, const Executor& exec) {
  if (u.empty()) throw std::invalid_argument("verify_first_rows_theorem: u must be nonempty");
  Report r;
  r.theorem = "plactic-first-rows";
  const int m = *std::max_element(u.begin(), u.end());
  const int ell = rsk_p(u).num_rows();
  const auto set = centralizer_search(u, alphabet, max_len, exec);
  r.instances = set.members.size();
  r.details["u"] = u;
  r.details["m"] = m;
  r.details["rows"] = ell;
  r.details["alphabet"] = alphabet;
  r.details["max_len"] = max_len;
  r.details["words_tested"] = set.words_tested;
  for (const auto& t : set.members) {
    bool bounded = true;
    for (int row = 0; row < std::min(ell, t.num_rows()); ++row) {
      bounded = bounded && t.rows()[static_cast<std::size_t>(row)].back() <= m;
    }
    if (!bounded) r.fail({{"u", u}, {"check", "first-rows"}, {"tableau", to_json(t)}});
    if (!check_no_bump(u, row_word(t))) r.fail({{"u", u}, {"check", "no-bump"}, {"tableau", to_json(t)}});
  }
  return r;
}

Report compare_rc_sets(const Word& u, int m, const CentralizerSet& of_u, const CentralizerSet& of_rc) {
  Report r;
  r.theorem = "plactic-rc-evacuation";
  r.instances = of_u.members.size();
  r.details["u"] = u;
  r.details["m"] = m;
  r.details["alphabet"] = of_u.alphabet;
  r.details["max_len"] = of_u.max_len;
  r.details["members"] = of_u.members.size();
  std::set<Tableau> image;
  for (const auto& t : of_u.members) image.insert(tau_m(t, m));
  const std::set<Tableau> target(of_rc.members.begin(), of_rc.members.end());
  if (image.size() != of_u.members.size() || image != target) {
    std::vector<Tableau> missing;
    std::vector<Tableau> extra;
    std::set_difference(target.begin(), target.end(), image.begin(), image.end(), std::back_inserter(missing));
    std::set_difference(image.begin(), image.end(), target.begin(), target.end(), std::back_inserter(extra));
    r.fail({{"u", u},
            {"m", m},
            {"alphabet", of_u.alphabet},
            {"max_len", of_u.max_len},
            {"not_reached", tableau_list(missing)},
            {"outside_target", tableau_list(extra)}});
  }
  return r;
}

Report verify_rc_theorem(const Word& u, int m, int alphabet, int max_len, const Executor& exec) {
  if (m > alphabet) throw std::invalid_argument("verify_rc_theorem: need m <= alphabet");
  const Word rc = rc_m(u, m);
  return compare_rc_sets(u, m, centralizer_search(u, alphabet, max_len, exec),
                         centralizer_search(rc, alphabet, max_len, exec));
}

}  // namespace combicheck
