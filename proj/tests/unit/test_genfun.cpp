#include <algorithm>
#include <map>
#include <set>

#include "combicheck/genfun.hpp"
#include "combicheck/parking.hpp"
#include "doctest.h"

using namespace combicheck;

namespace {

// Parking functions straight from the definition, with a local simulation.
BiPoly brute_parking_sum(int n, ParkingStatistic stat) {
  BiPoly out;
  std::vector<int> p(static_cast<std::size_t>(n), 1);
  for (;;) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool pf = true;
    for (int j = 0; j < n; ++j) pf = pf && sorted[static_cast<std::size_t>(j)] <= j + 1;
    if (pf) {
      std::vector<int> spot_of(static_cast<std::size_t>(n));
      std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
      int sum = 0;
      int exced = 0;
      for (int i = 0; i < n; ++i) {
        int s = p[static_cast<std::size_t>(i)];
        while (taken[static_cast<std::size_t>(s)]) ++s;
        taken[static_cast<std::size_t>(s)] = true;
        spot_of[static_cast<std::size_t>(i)] = s;
        sum += p[static_cast<std::size_t>(i)];
        exced += p[static_cast<std::size_t>(i)] > i + 1;
      }
      const Permutation oc(spot_of);
      int e = exced;
      if (stat == ParkingStatistic::des_oc) e = des(oc);
      if (stat == ParkingStatistic::des_oc_inv) e = des(oc.inverse());
      out += BiPoly::monomial(1, static_cast<unsigned>(n * (n + 1) / 2 - sum), static_cast<unsigned>(e));
    }
    int i = n - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == n) p[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return out;
    ++p[static_cast<std::size_t>(i)];
  }
}

// The Jacobi-style recursion split at the maximum instead of the minimum.
bool split_at_max(const std::vector<int>& word) {
  if (word.empty()) return true;
  const auto pos = std::max_element(word.begin(), word.end()) - word.begin();
  if (pos % 2 != 0) return false;
  return split_at_max(std::vector<int>(word.begin(), word.begin() + pos)) &&
         split_at_max(std::vector<int>(word.begin() + pos + 1, word.end()));
}

std::set<Permutation> members(int n, PermClass tag) {
  std::set<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    if (class_membership(w, tag)) out.insert(w);
  });
  return out;
}

std::set<Permutation> perms(std::initializer_list<const char*> words) {
  std::set<Permutation> out;
  for (const char* w : words) out.insert(parse_permutation(w));
  return out;
}

}  // namespace

TEST_CASE("tree_stats examples") {
  const auto star = tree_stats(RootedTree({0, 0, 0, 0}));
  CHECK(star.inv == 0);
  CHECK(star.leaves == 4);
  CHECK(tree_stats(RootedTree({2, 0})).inv == 1);
  CHECK(tree_stats(RootedTree({0, 1})).inv == 0);
  CHECK(tree_stats(RootedTree({0, 1})).leaves == 1);
  CHECK_THROWS_AS(RootedTree({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree({1}), std::invalid_argument);
}

TEST_CASE("both tree enumerations list the same (n+1)^(n-1) trees") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> a;
    std::set<std::vector<int>> b;
    std::size_t visits = 0;
    for_each_tree(n, TreeEnumeration::parent_functions, [&](const RootedTree& t) {
      std::vector<int> p;
      for (int v = 1; v <= n; ++v) p.push_back(t.parent(v));
      a.insert(p);
      ++visits;
    });
    for_each_tree(n, TreeEnumeration::pruefer, [&](const RootedTree& t) {
      std::vector<int> p;
      for (int v = 1; v <= n; ++v) p.push_back(t.parent(v));
      b.insert(p);
    });
    std::size_t expected = 1;
    for (int i = 0; i < n - 1; ++i) expected *= static_cast<std::size_t>(n + 1);
    CHECK(visits == expected);
    CHECK(a.size() == expected);
    CHECK(a == b);
  }
}

TEST_CASE("I_n examples") {
  CHECK(i_poly(1, IMethod::trees) == BiPoly(1));
  CHECK(i_poly(2, IMethod::trees).substitute_t(1) == BiPoly(2) + BiPoly::q());
  const BiPoly t = BiPoly::t();
  CHECK(i_poly(3, IMethod::recurrence).substitute_q(-1) == t + t * t);
  CHECK(i_poly(0, IMethod::recurrence) == BiPoly(1));
  CHECK_THROWS_AS(i_poly(8, IMethod::trees), std::domain_error);
  CHECK_THROWS_AS(i_poly(21, IMethod::recurrence), std::domain_error);
}

TEST_CASE("I_n by trees equals the recurrence for n <= 7") {
  const Executor exec(2);
  for (int n = 0; n <= 7; ++n) CHECK(i_poly(n, IMethod::trees, exec) == i_poly(n, IMethod::recurrence));
}

TEST_CASE("parking sums agree with a brute-force definition") {
  const Executor exec(3);
  for (int n = 1; n <= 5; ++n) {
    for (auto s : {ParkingStatistic::exced, ParkingStatistic::des_oc, ParkingStatistic::des_oc_inv}) {
      CHECK(itilde_poly(n, s, exec) == brute_parking_sum(n, s));
    }
  }
  CHECK(itilde_poly(2, ParkingStatistic::exced) == BiPoly(1) + BiPoly::q() + BiPoly::t());
  CHECK(itilde_poly(2, ParkingStatistic::exced).substitute_q(-1) == BiPoly::t());
  CHECK(itilde_poly(1, ParkingStatistic::des_oc) == BiPoly(1));
  CHECK_THROWS_AS(itilde_poly(8, ParkingStatistic::exced), std::domain_error);
}

TEST_CASE("I_n(-1, t) recurrence") {
  const BiPoly t = BiPoly::t();
  CHECK(i_minus1(0) == BiPoly(1));
  CHECK(i_minus1(1) == BiPoly(1));
  CHECK(i_minus1(2) == t);
  CHECK(i_minus1(3) == t + t * t);
  for (int n = 0; n <= 20; ++n) CHECK(i_minus1(n) == i_poly(n, IMethod::recurrence).substitute_q(-1));
  CHECK_NOTHROW(i_minus1(30));
}

TEST_CASE("simsun polynomials") {
  const BiPoly x = BiPoly::t();
  CHECK(simsun_poly(0, SimsunMethod::brute) == BiPoly(1));
  CHECK(simsun_poly(0, SimsunMethod::recurrence) == BiPoly(1));
  CHECK(simsun_poly(2, SimsunMethod::brute) == BiPoly(1) + x);
  CHECK(simsun_poly(3, SimsunMethod::recurrence) == BiPoly(1) + BiPoly(4) * x);
  CHECK_FALSE(is_simsun(parse_permutation("321")));
  CHECK(is_simsun(parse_permutation("312")));
  CHECK_FALSE(is_simsun(parse_permutation("4312")));
  for (int m = 0; m <= 8; ++m) CHECK(simsun_poly(m, SimsunMethod::brute) == simsun_poly(m, SimsunMethod::recurrence));
}

TEST_CASE("A_n recurrence matches the reflected simsun polynomial") {
  CHECK(a_poly(1) == BiPoly(1));
  for (int n = 1; n <= 9; ++n) {
    CHECK(a_poly(n) == simsun_poly(n - 1, SimsunMethod::recurrence).reflect_t(static_cast<unsigned>(n - 1)));
  }
}

TEST_CASE("ell values") {
  CHECK(ell_values(Permutation::identity(4)) == std::vector<int>{1, 1, 1, 1});
  CHECK(ell_values(parse_permutation("621543")) == std::vector<int>{6, 2, 1, 5, 4, 1});
  CHECK(ell_values(Permutation::identity(1)) == std::vector<int>{1});
}

TEST_CASE("parking outcome fibres are boxes [l_i, sigma(i)]") {
  for (int n = 1; n <= 5; ++n) {
    std::map<Permutation, std::vector<Word>> fibres;
    for_each_parking_function(n, [&](const Word& p) { fibres[park(p)].push_back(p); });
    for_each_permutation(n, [&](const Permutation& sigma) {
      const auto ell = ell_values(sigma);
      std::vector<Word> box;
      Word p(ell.begin(), ell.end());
      for (;;) {
        box.push_back(p);
        int i = n - 1;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == sigma(i + 1)) {
          p[static_cast<std::size_t>(i)] = ell[static_cast<std::size_t>(i)];
          --i;
        }
        if (i < 0) break;
        ++p[static_cast<std::size_t>(i)];
      }
      CHECK(fibres[sigma] == box);
    });
  }
}

TEST_CASE("class membership examples") {
  CHECK(class_membership(parse_permutation("12"), PermClass::alternating));
  CHECK_FALSE(class_membership(parse_permutation("21"), PermClass::alternating));
  CHECK(class_membership(parse_permutation("1324"), PermClass::alternating));
  CHECK(members(3, PermClass::T) == perms({"213", "321"}));
  CHECK(members(3, PermClass::jacobi) == perms({"123", "231"}));
  CHECK(members(3, PermClass::O) == perms({"213", "321"}));
  CHECK(class_membership(Permutation(), PermClass::jacobi));
}

TEST_CASE("T_n, O_n and Jacobi permutations are related as claimed for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto o = members(n, PermClass::O);
    const auto t = members(n, PermClass::T);
    std::set<Permutation> inv;
    for (const auto& s : o) inv.insert(s.inverse());
    CHECK(inv == t);
    std::set<Permutation> comp;
    for (const auto& s : t) comp.insert(s.complemented());
    CHECK(comp == members(n, PermClass::jacobi));
  }
}

TEST_CASE("splitting at the maximum does not give the complements of T_n") {
  std::set<Permutation> at_max;
  for_each_permutation(3, [&](const Permutation& w) {
    if (split_at_max(std::vector<int>(w.one_line().begin(), w.one_line().end()))) at_max.insert(w);
  });
  CHECK(at_max == members(3, PermClass::T));
  CHECK(at_max != members(3, PermClass::jacobi));
}

TEST_CASE("zigzag and Jacobi polynomials") {
  const BiPoly t = BiPoly::t();
  CHECK(zigzag_poly(2) == t);
  CHECK(zigzag_poly(1) == t);
  CHECK(jacobi_poly(3) == BiPoly(1) + t);
  CHECK(jacobi_poly(4).is_palindromic_t(2));
  for (int n = 2; n <= 8; ++n) {
    CHECK(zigzag_poly(n) == t * jacobi_poly(n));
    CHECK(jacobi_poly(n).is_palindromic_t(static_cast<unsigned>(n - 2)));
  }
}

TEST_CASE("theorem checkers on small n") {
  const Executor exec(2);
  for (int n = 1; n <= 5; ++n) {
    CHECK(verify_hopkins(n, exec).status == Status::verified);
    CHECK(verify_stanley_yin(n, exec).status == Status::verified);
    CHECK(verify_simsun_theorem(n, exec).status == Status::verified);
  }
  for (int n = 2; n <= 5; ++n) CHECK(verify_alternating_theorem(n, exec).status == Status::verified);
  CHECK_THROWS_AS(verify_alternating_theorem(1, exec), std::domain_error);
  const auto r = verify_simsun_theorem(3);
  CHECK(bipoly_from_json(r.details["i_minus1"]) == BiPoly::t() + BiPoly::t() * BiPoly::t());
}
