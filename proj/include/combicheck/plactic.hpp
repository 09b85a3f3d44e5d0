#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "combicheck/parallel.hpp"
#include "combicheck/report.hpp"
#include "combicheck/tableau.hpp"

namespace combicheck {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Called with (row, bumped letter) each time row insertion bumps; rows are
/// 1-based.
using BumpObserver = std::function<void(int row, int bumped)>;

/// Row-inserts the letters of `word` into `t`, bumping the leftmost entry
/// strictly greater than the inserted letter.
Tableau rsk_insert(const Tableau& t, std::span<const int> word, const BumpObserver& observer = {});

/// P(w); the empty word gives the empty tableau.
Tableau rsk_p(std::span<const int> word);

/// Knuth equivalence, decided by P(u) = P(v).
bool knuth_equiv(std::span<const int> u, std::span<const int> v);

enum class GreeneMode { increasing, decreasing };

/// Largest subword splitting into k weakly increasing (or strictly decreasing)
/// subwords, by exhaustive dynamic programming over the multiset of chain
/// ends. Throws std::invalid_argument when |w| > 12.
int greene_oracle(std::span<const int> word, int k, GreeneMode mode);

/// Members of the plactic centralizer C(u) among words over [M] of length at
/// most L, one tableau per Knuth class, sorted.
struct CentralizerSet {
  Word u;
  int alphabet = 0;
  int max_len = 0;
  std::uint64_t words_tested = 0;
  std::vector<Tableau> members;
};

/// Words are split by first letter across workers. Throws BudgetExceeded when
/// more than `budget` words would be tested.
CentralizerSet centralizer_search(const Word& u, int alphabet, int max_len, const Executor& exec = Executor(),
                                  std::uint64_t budget = 5'000'000);

/// Inserts u into P(w) and reports whether every bumped letter occurs in u.
bool check_no_bump(const Word& u, const Word& w);

/// (m - w_n + 1) ... (m - w_1 + 1). Throws std::invalid_argument if a letter
/// exceeds m.
Word rc_m(std::span<const int> w, int m);

/// P(RC_m(rw(T))). Throws std::invalid_argument if an entry exceeds m.
Tableau evac_m(const Tableau& t, int m);

/// Evacuates T_{<= m} in place and keeps T_{> m}.
Tableau tau_m(const Tableau& t, int m);

/// Every member of C(u) found within (M, L) has all entries of its first l
/// rows at most m (m = max letter of u, l = rows of P(u)), and inserting u
/// into it never bumps a letter absent from u.
Report verify_first_rows_theorem(const Word& u, int alphabet, int max_len, const Executor& exec = Executor());

/// tau_m maps the (M, L)-restricted tableau set of C(u) onto that of C(RC_m(u)).
Report verify_rc_theorem(const Word& u, int m, int alphabet, int max_len, const Executor& exec = Executor());

/// Same check with both centralizer sets supplied, so sweeps can reuse them.
Report compare_rc_sets(const Word& u, int m, const CentralizerSet& of_u, const CentralizerSet& of_rc);

}  // namespace combicheck
