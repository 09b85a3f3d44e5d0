#include <algorithm>
#include <map>
#include <set>

#include "combicheck/parking.hpp"
#include "doctest.h"

using namespace combicheck;

namespace {

// Rook numbers by trying every subset of cells.
std::vector<std::uint64_t> brute_rook_numbers(const ParkingContent& b) {
  std::vector<std::pair<int, int>> cells;
  for (int c = 1; c <= b.size(); ++c) {
    for (int r = 1; r < b(c); ++r) cells.emplace_back(r, c);
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(b.size()) + 1, 0);
  for (std::uint32_t s = 0; s < (1U << cells.size()); ++s) {
    std::set<int> rows;
    std::set<int> cols;
    bool ok = true;
    int k = 0;
    for (std::size_t i = 0; i < cells.size() && ok; ++i) {
      if (((s >> i) & 1U) == 0) continue;
      ok = rows.insert(cells[i].first).second && cols.insert(cells[i].second).second;
      ++k;
    }
    if (ok) ++out[static_cast<std::size_t>(k)];
  }
  return out;
}

// Every sequence in [n]^n, in lexicographic order.
template <class F>
void for_each_sequence(int n, F f) {
  Word s(static_cast<std::size_t>(n), 1);
  for (;;) {
    f(s);
    int i = n - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n) s[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
  }
}

const ParkingContent kExampleB({1, 1, 2, 4, 5, 6});
const RookPlacement kExampleR{{1, 3}, {2, 6}, {4, 5}};

}  // namespace

TEST_CASE("park examples") {
  CHECK(park(Word{6, 2, 1, 5, 4, 1}) == parse_permutation("621543"));
  CHECK(park(Word{1, 2, 3, 4}) == Permutation::identity(4));
  try {
    park(Word{2, 2});
    FAIL("expected a parking failure");
  } catch (const ParkingFailure& e) {
    CHECK(e.car() == 2);
  }
  try {
    park(Word{3, 3, 1});
    FAIL("expected a parking failure");
  } catch (const ParkingFailure& e) {
    CHECK(e.car() == 2);
  }
  CHECK(park(Word{3, 1, 1}) == parse_permutation("312"));
}

TEST_CASE("park succeeds exactly on parking functions") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = 0;
    for_each_sequence(n, [&](const Word& s) {
      bool parked = true;
      try {
        park(s);
      } catch (const ParkingFailure&) {
        parked = false;
      }
      CHECK(parked == is_parking_function(s));
      count += parked;
    });
    std::uint64_t expected = 1;
    for (int i = 0; i < n - 1; ++i) expected *= static_cast<std::uint64_t>(n + 1);
    CHECK(count == expected);
  }
}

TEST_CASE("parking_stats examples") {
  const auto s = parking_stats(Word{6, 2, 1, 5, 4, 1});
  CHECK(s.cosum == 2);
  CHECK(s.exced == 2);
  CHECK(parking_stats(Word{1, 2, 3, 4, 5}).cosum == 0);
  CHECK(parking_stats(Word{1, 2, 3, 4, 5}).exced == 0);
  CHECK(parking_stats(Word{1, 1}).cosum == 1);
  CHECK(parking_stats(Word{1, 1}).exced == 0);
  CHECK_THROWS_AS(parking_stats(Word{2, 2}), std::invalid_argument);
}

TEST_CASE("parking contents validate and enumerate") {
  CHECK_THROWS_AS(ParkingContent({2}), std::invalid_argument);
  CHECK_THROWS_AS(ParkingContent({1, 1, 1, 3, 2}), std::invalid_argument);
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(all_parking_contents(n).size() == catalan[static_cast<std::size_t>(n)]);
  const auto c3 = all_parking_contents(3);
  CHECK(std::is_sorted(c3.begin(), c3.end()));
}

TEST_CASE("for_each_parking_function agrees with the sequence filter") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Word> listed;
    for_each_parking_function(n, [&](const Word& p) { listed.push_back(p); });
    std::vector<Word> filtered;
    for_each_sequence(n, [&](const Word& s) {
      if (is_parking_function(s)) filtered.push_back(s);
    });
    CHECK(listed == filtered);
    std::vector<Word> by_first;
    for (int f = 1; f <= n; ++f) for_each_parking_function(n, [&](const Word& p) { by_first.push_back(p); }, f);
    CHECK(by_first == filtered);
  }
}

TEST_CASE("cosum is constant on each rearrangement class") {
  for (int n = 1; n <= 5; ++n) {
    std::map<Word, std::set<int>> by_class;
    for_each_parking_function(n, [&](const Word& p) {
      Word sorted = p;
      std::sort(sorted.begin(), sorted.end());
      by_class[sorted].insert(parking_stats(p).cosum);
    });
    for (const auto& [b, values] : by_class) {
      int sum = 0;
      for (int v : b) sum += v;
      REQUIRE(values.size() == 1);
      CHECK(*values.begin() == n * (n + 1) / 2 - sum);
    }
  }
}

TEST_CASE("induced_pf examples") {
  const auto ex = induced_pf(kExampleB, parse_permutation("632541"));
  CHECK(ex.pi == Word{6, 2, 1, 5, 4, 1});
  CHECK(ex.sigma == parse_permutation("621543"));
  const ParkingContent b({1, 1, 2, 3});
  CHECK(induced_pf(b, Permutation::identity(4)).pi == Word{1, 1, 2, 3});
  const auto small = induced_pf(ParkingContent({1, 2}), parse_permutation("21"));
  CHECK(small.pi == Word{2, 1});
  CHECK(small.sigma == parse_permutation("21"));
}

TEST_CASE("mu examples and fibre sizes") {
  CHECK(mu(ParkingContent({1, 2, 3})) == 1);
  CHECK(mu(ParkingContent({1, 1, 1})) == 6);
  CHECK(mu(kExampleB) == 2);
  CHECK(mu(ParkingContent({1, 1, 2, 2})) == 4);
}

TEST_CASE("rook numbers agree with brute-force placement counting") {
  CHECK(rook_numbers(Board::from_content(ParkingContent({1, 1, 1}))) == std::vector<std::uint64_t>{1, 0, 0, 0});
  CHECK(rook_numbers(Board::from_content(ParkingContent({1, 2}))) == std::vector<std::uint64_t>{1, 1, 0});
  const auto ex = rook_numbers(Board::from_content(kExampleB));
  CHECK(ex == brute_rook_numbers(kExampleB));
  MESSAGE("rook numbers of the example board: " << ex[0] << " " << ex[1] << " " << ex[2] << " " << ex[3]);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& b : all_parking_contents(n)) {
      const Board board = Board::from_content(b);
      const auto counts = rook_numbers(board);
      CHECK(counts == brute_rook_numbers(b));
      std::vector<std::uint64_t> from_list(static_cast<std::size_t>(n) + 1, 0);
      for (const auto& r : all_rook_placements(board)) {
        CHECK(placement_on_board(r, board));
        ++from_list[r.size()];
      }
      CHECK(from_list == counts);
    }
  }
}

TEST_CASE("excedance polynomial examples") {
  const BiPoly t = BiPoly::t();
  for (auto m : {ExcedMethod::direct, ExcedMethod::rook}) {
    CHECK(excedance_polynomial(ParkingContent({1, 1}), m) == BiPoly(2));
    CHECK(excedance_polynomial(ParkingContent({1, 2}), m) == BiPoly(1) + t);
  }
  const ParkingContent b({1, 1, 2});
  CHECK(excedance_polynomial(b, ExcedMethod::direct) == excedance_polynomial(b, ExcedMethod::rook));
  CHECK(excedance_polynomial(b, ExcedMethod::direct).evaluate(0, 1) == 6);
  CHECK_THROWS_AS(excedance_polynomial(ParkingContent(std::vector<int>(9, 1)), ExcedMethod::direct),
                  std::domain_error);
}

TEST_CASE("direct and rook excedance polynomials agree for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& b : all_parking_contents(n)) {
      CHECK(excedance_polynomial(b, ExcedMethod::direct) == excedance_polynomial(b, ExcedMethod::rook));
    }
  }
}

TEST_CASE("phi examples") {
  const auto w = parse_permutation("632541");
  const std::vector<int> a{1, 2, 4};
  CHECK(phi(kExampleB, w, a) == kExampleR);
  CHECK(phi(kExampleB, w, std::vector<int>{}).empty());
  CHECK(phi(ParkingContent({1, 2}), parse_permutation("21"), std::vector<int>{1}) == RookPlacement{{1, 2}});
  // 3 is not a descent of 621543.
  CHECK_THROWS_AS(phi(kExampleB, w, std::vector<int>{3}), std::invalid_argument);
}

TEST_CASE("insertion reproduces the worked example") {
  const auto ins = insert_forward(kExampleB, kExampleR, Word{2, 4, 1});
  CHECK(ins.w == parse_permutation("632541"));
  CHECK(ins.a == std::vector<int>{1, 2, 4});
  CHECK(insert_inverse(kExampleB, kExampleR, ins.w, ins.a) == Word{2, 4, 1});
}

TEST_CASE("insertion small cases and errors") {
  const ParkingContent b({1, 2});
  const auto ins = insert_forward(b, RookPlacement{{1, 2}}, Word{1});
  CHECK(ins.w == parse_permutation("21"));
  CHECK(ins.a == std::vector<int>{1});
  CHECK(insert_inverse(b, RookPlacement{{1, 2}}, ins.w, ins.a) == Word{1});
  const auto none = insert_forward(kExampleB, {}, Word{3, 1, 2, 6, 5, 4});
  CHECK(none.w == parse_permutation("312654"));
  CHECK(none.a.empty());
  CHECK(insert_inverse(kExampleB, {}, none.w, none.a) == Word{3, 1, 2, 6, 5, 4});
  CHECK_THROWS_AS(insert_forward(b, RookPlacement{{1, 1}}, Word{2}), std::invalid_argument);
  CHECK_THROWS_AS(insert_forward(b, RookPlacement{{1, 2}}, Word{2}), std::invalid_argument);
  CHECK_THROWS_AS(insert_inverse(b, RookPlacement{{1, 2}}, Permutation::identity(2), std::vector<int>{}),
                  std::invalid_argument);
}

TEST_CASE("preimage counts by exhaustive (w, A) enumeration") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : all_parking_contents(n)) {
      std::map<RookPlacement, std::uint64_t> counts;
      for_each_permutation(n, [&](const Permutation& w) {
        const auto d = perm_stats(induced_pf(b, w).sigma).descent_set;
        for (unsigned s = 0; s < (1U << d.size()); ++s) {
          std::vector<int> a;
          for (std::size_t i = 0; i < d.size(); ++i) {
            if ((s >> i) & 1U) a.push_back(d[i]);
          }
          ++counts[phi(b, w, a)];
        }
      });
      for (const auto& r : all_rook_placements(Board::from_content(b))) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= n - static_cast<int>(r.size()); ++i) fact *= static_cast<std::uint64_t>(i);
        CHECK(counts[r] == fact);
      }
    }
  }
}

TEST_CASE("verify_fixed_content") {
  const Executor exec(2);
  for (int n = 1; n <= 5; ++n) {
    const auto r = verify_fixed_content(n, exec);
    CHECK(r.status == Status::verified);
  }
  const auto r3 = verify_fixed_content(3, Executor(1));
  CHECK(r3.instances == 5);
  CHECK(to_json(r3) == to_json(verify_fixed_content(3, Executor(3))));
}

TEST_CASE("the example content satisfies the fixed-content identity") {
  CHECK(excedance_polynomial(kExampleB, ExcedMethod::direct) == descent_polynomial(kExampleB));
}
