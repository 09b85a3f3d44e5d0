#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "combicheck/int_matrix.hpp"
#include "combicheck/parallel.hpp"
#include "combicheck/permutation.hpp"
#include "combicheck/poset.hpp"
#include "combicheck/report.hpp"

namespace combicheck {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDistributiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExtensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// W(i, j) = 1 iff sigma^{-1}(i) >= sigma^{-1}(j). Unit lower-triangular.
IntMatrix cartan_matrix(const Poset& p, const LinearExtension& sigma);

/// The permutation w with W in B w B, B the upper-triangular Borel subgroup.
///
/// Rank of the lower-left block (rows i..n, columns 1..j) is invariant under
/// B x B, so w is read off the lower-left rank profile. Rows are added from the
/// bottom up to a basis kept in echelon form by leftmost nonzero column; row i
/// contributes exactly one new pivot column, and that column is w(i). Runs in
/// 64-bit arithmetic and redoes the elimination with big integers on overflow.
/// Throws SingularMatrixError when W is not invertible.
Permutation bruhat_permutation(const IntMatrix& w);

/// Same permutation from the literal rank formula
///   P(i,j) = r(i,j) - r(i+1,j) - r(i,j-1) + r(i+1,j-1),
/// r(i,j) = rank of rows i..n and columns 1..j, one Bareiss rank per block.
/// Quadratically many rank computations; kept as an independent route.
Permutation bruhat_permutation_by_ranks(const IntMatrix& w);

/// Echelonmotion: mapping[x] = y iff P(sigma(y), sigma(x)) = 1.
struct EchelonMap {
  std::vector<Element> mapping;
  IntMatrix permutation_matrix;
};

EchelonMap echelonmotion(const Poset& p, const LinearExtension& sigma);

/// Only the element map, skipping the matrix copy.
std::vector<Element> echelon_mapping(const Poset& p, const LinearExtension& sigma);

/// Rowmotion on a distributive lattice through its join-irreducible ideals.
///
/// Element x is identified with the ideal I of join-irreducibles below it. The
/// image is the ideal of join-irreducibles lying above no maximal element of I,
/// so the bottom goes to the top. This is the inverse of the map "ideal
/// generated by the minimal elements of the complement"; the direction here is
/// the one that coincides with echelonmotion. Throws NotDistributiveError.
std::vector<Element> rowmotion_distributive(const Lattice& l);

/// For every linear extension (up to `cap`, 0 = all) and every x, checks
/// up(Ech(x)) = down(x). Non-modular input gives status skipped.
Report verify_echelon_theorem(const Lattice& l, std::uint64_t cap = 0);

/// Compares the multisets of down-cover and up-cover counts. Both are recorded
/// in details; the equality is only asserted for modular lattices.
Report verify_dilworth(const Lattice& l);

/// Compares Ech over all linear extensions. Throws ExtensionCapExceeded when
/// there are more than `cap` extensions (0 = no cap).
bool is_echelon_independent(const Poset& p, std::uint64_t cap = 0);

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

Poset chain_poset(int n);
Poset chain_product_poset(int a, int b);
/// Bottom, k pairwise incomparable atoms, top.
Poset diamond_poset(int k);
Poset pentagon_poset();
/// Subspaces of GF(2)^dim ordered by inclusion.
Poset binary_subspace_poset(int dim);

/// Chains C1..C6, products Ca x Cb with 2 <= a <= b and ab <= 12, M3, M4, the
/// 16-element subspace lattice of GF(2)^3, and N5.
std::vector<NamedLattice> lattice_catalog();

/// Exhaustive sweep over all labelled posets with 1..max_n elements.
struct LatticeSweep {
  std::uint64_t posets = 0;
  std::uint64_t lattices = 0;
  std::uint64_t modular = 0;
  std::uint64_t distributive = 0;
  Report echelon;       // cover-count preservation on modular lattices
  Report dilworth;      // multiset equality on modular lattices
  Report rowmotion;     // Ech = rowmotion on distributive lattices
  Report bruhat_cross;  // fast Bruhat route = rank-formula route
};

/// Work is split by the poset restricted to its first min(n, 4) elements and
/// merged by summation, so the result is independent of the worker count.
LatticeSweep sweep_labelled_lattices(int max_n, const Executor& exec, int limit = 6);

}  // namespace combicheck
