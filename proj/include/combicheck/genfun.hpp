#pragma once

#include <functional>
#include <vector>

#include "combicheck/bipoly.hpp"
#include "combicheck/parallel.hpp"
#include "combicheck/permutation.hpp"
#include "combicheck/report.hpp"

namespace combicheck {

/// Tree on {0, ..., n} rooted at 0, stored as parent pointers.
class RootedTree {
 public:
  RootedTree() = default;
  /// parents[v - 1] is the parent of v. Throws std::invalid_argument unless
  /// every vertex reaches 0.
  explicit RootedTree(std::vector<int> parents);

  int size() const { return static_cast<int>(parent_.size()); }
  /// Parent of v for 1 <= v <= n.
  int parent(int v) const { return parent_[static_cast<std::size_t>(v - 1)]; }

 private:
  std::vector<int> parent_;
};

struct TreeStats {
  int inv = 0;     // pairs i < j with j on the path from i to the root
  int leaves = 0;  // vertices of {0..n} without children
};

TreeStats tree_stats(const RootedTree& t);

enum class TreeEnumeration { parent_functions, pruefer };

/// Calls f(tree) for each of the (n+1)^(n-1) trees; n <= 7.
void for_each_tree(int n, TreeEnumeration how, const std::function<void(const RootedTree&)>& f);

enum class IMethod { trees, recurrence };

/// I_n(q, t) = sum over trees of q^inv t^(lev - 1). Trees: parent functions
/// with an acyclicity filter for n <= 6, Pruefer decoding at n = 7.
/// Recurrence: n <= 20.
BiPoly i_poly(int n, IMethod method, const Executor& exec = Executor());

enum class ParkingStatistic { exced, des_oc, des_oc_inv };

/// Sum over parking functions of q^cosum t^stat; n <= 7.
BiPoly itilde_poly(int n, ParkingStatistic stat, const Executor& exec = Executor());

/// Sum over parking functions of q^cosum (t-free); n <= 7.
BiPoly cosum_poly(int n, const Executor& exec = Executor());

/// I_n(-1, t) from its own recurrence with I_0 = 1; n <= 30.
BiPoly i_minus1(int n);

bool is_simsun(const Permutation& w);

enum class SimsunMethod { brute, recurrence };

/// R_m(x) = sum over simsun w in S_m of x^des(w), with x stored in the t slot.
/// Brute force needs m <= 9.
BiPoly simsun_poly(int m, SimsunMethod method);

/// A_n(t) from A_1 = 1 and A_{n+1} = (1 + n(t-1)) A_n + t(2-t) A_n'.
BiPoly a_poly(int n);

/// l_i = 1 + max{r >= 0 not among sigma(1..i-1) : r < sigma(i)}.
std::vector<int> ell_values(const Permutation& sigma);

enum class PermClass { simsun, alternating, jacobi, O, T };

/// Jacobi is decided recursively: split at the minimum, even-length left part,
/// both sides standardize to Jacobi permutations, empty is Jacobi.
bool class_membership(const Permutation& w, PermClass tag);

/// J_n(t) = sum over Jacobi gamma in S_n of t^des(gamma^{-1}).
BiPoly jacobi_poly(int n);

/// Z_n(t) = sum over up-down alternating w of t^(des1(w^{-1}) + 1); n <= 10.
BiPoly zigzag_poly(int n);

/// Itilde_n via exced = via des(oc).
Report verify_hopkins(int n, const Executor& exec = Executor());

/// Trees = recurrence, = parking sum with des(oc^{-1}), I_n(q, 1) = cosum
/// enumeration, I_n(1, 1) = (n+1)^(n-1).
Report verify_stanley_yin(int n, const Executor& exec = Executor());

/// I_n(-1, t) = A_n(t) = t^(n-1) R_{n-1}(1/t) with R from both methods, and
/// R brute = recurrence; 1 <= n <= 10.
Report verify_simsun_theorem(int n, const Executor& exec = Executor());

/// Itilde_n(-1, t) = Z_n(t) for 2 <= n <= 7, with the intermediate descent
/// sum over O_n, T_n = O_n^{-1}, complement(T_n) = Jacobi_n, Z_n = t J_n and
/// J_n palindromic of degree n - 2.
Report verify_alternating_theorem(int n, const Executor& exec = Executor());

}  // namespace combicheck
