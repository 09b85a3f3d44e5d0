#include "combicheck/echelon.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace combicheck {

IntMatrix cartan_matrix(const Poset& p, const LinearExtension& sigma) {
  const auto n = static_cast<std::size_t>(p.size());
  IntMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element row_elem = sigma.element_at(static_cast<int>(i) + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      if (p.leq(sigma.element_at(static_cast<int>(j) + 1), row_elem)) w(i, j) = 1;
    }
  }
  return w;
}

namespace {

struct Overflow {};

long long mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

long long abs_gcd(long long a, long long b) { return std::gcd(a, b); }
BigInt abs_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
T convert(const BigInt& v);

template <>
long long convert<long long>(const BigInt& v) {
  // Keep headroom so negation never overflows.
  if (v > std::numeric_limits<long long>::max() || v <= std::numeric_limits<long long>::min()) throw Overflow{};
  return static_cast<long long>(v);
}

template <>
BigInt convert<BigInt>(const BigInt& v) {
  return v;
}

template <class T>
void normalize(std::vector<T>& v, std::size_t from) {
  T g = 0;
  for (std::size_t j = from; j < v.size(); ++j) g = abs_gcd(g, v[j]);
  if (g > 1) {
    for (std::size_t j = from; j < v.size(); ++j) v[j] /= g;
  }
}

template <class T>
std::vector<int> leftmost_pivot_profile(const IntMatrix& w) {
  const std::size_t n = w.rows();
  std::vector<std::vector<T>> basis(n);
  std::vector<int> perm(n);
  for (std::size_t ii = n; ii-- > 0;) {
    std::vector<T> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = convert<T>(w(ii, j));
    int pivot = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == 0) continue;
      if (basis[c].empty()) {
        pivot = static_cast<int>(c);
        break;
      }
      const T a = basis[c][c];
      const T b = v[c];
      for (std::size_t j = c; j < n; ++j) v[j] = sub(mul(a, v[j]), mul(b, basis[c][j]));
      normalize(v, c);
    }
    if (pivot < 0) throw SingularMatrixError("bruhat_permutation: matrix is singular");
    normalize(v, static_cast<std::size_t>(pivot));
    basis[static_cast<std::size_t>(pivot)] = std::move(v);
    perm[ii] = pivot + 1;
  }
  return perm;
}

}  // namespace

Permutation bruhat_permutation(const IntMatrix& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("bruhat_permutation: matrix must be square");
  try {
    return Permutation(leftmost_pivot_profile<long long>(w));
  } catch (const Overflow&) {
    return Permutation(leftmost_pivot_profile<BigInt>(w));
  }
}

Permutation bruhat_permutation_by_ranks(const IntMatrix& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("bruhat_permutation: matrix must be square");
  const std::size_t n = w.rows();
  if (int_matrix_rank(w) != n) throw SingularMatrixError("bruhat_permutation: matrix is singular");
  // r[i][j], i in 1..n+1, j in 0..n (1-based rows, column prefix length j).
  std::vector<std::vector<long long>> r(n + 2, std::vector<long long>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      r[i][j] = static_cast<long long>(int_matrix_rank(w.submatrix(i - 1, n, 0, j)));
    }
  }
  IntMatrix p(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) p(i - 1, j - 1) = r[i][j] - r[i + 1][j] - r[i][j - 1] + r[i + 1][j - 1];
  }
  return permutation_of_matrix(p);
}

std::vector<Element> echelon_mapping(const Poset& p, const LinearExtension& sigma) {
  const Permutation perm = bruhat_permutation(cartan_matrix(p, sigma));
  const Permutation inv = perm.inverse();
  std::vector<Element> mapping(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) mapping[x] = sigma.element_at(inv(sigma.label(x)));
  return mapping;
}

EchelonMap echelonmotion(const Poset& p, const LinearExtension& sigma) {
  if (!sigma.extends(p)) throw std::invalid_argument("echelonmotion: sigma is not a linear extension");
  const Permutation perm = bruhat_permutation(cartan_matrix(p, sigma));
  EchelonMap out;
  out.permutation_matrix = IntMatrix::from_permutation(perm);
  const Permutation inv = perm.inverse();
  out.mapping.resize(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) out.mapping[x] = sigma.element_at(inv(sigma.label(x)));
  return out;
}

std::vector<Element> rowmotion_distributive(const Lattice& l) {
  if (!is_distributive(l)) throw NotDistributiveError("rowmotion_distributive: lattice is not distributive");
  const Poset& p = l.poset();
  const std::vector<Element> ji = join_irreducibles(l);
  ElementMask ji_mask = 0;
  for (Element j : ji) ji_mask |= ElementMask{1} << j;
  std::vector<ElementMask> ideal(static_cast<std::size_t>(l.size()));
  for (Element x = 0; x < l.size(); ++x) ideal[x] = p.down_mask(x) & ji_mask;
  std::vector<Element> out(static_cast<std::size_t>(l.size()));
  for (Element x = 0; x < l.size(); ++x) {
    ElementMask above_max = 0;
    for (ElementMask m = ideal[x]; m != 0; m &= m - 1) {
      const Element j = std::countr_zero(m);
      const bool maximal = (p.up_mask(j) & ideal[x]) == (ElementMask{1} << j);
      if (maximal) above_max |= p.up_mask(j);
    }
    const ElementMask image = ji_mask & ~above_max;
    auto it = std::find(ideal.begin(), ideal.end(), image);
    if (it == ideal.end()) throw NotDistributiveError("rowmotion_distributive: ideal has no lattice element");
    out[x] = static_cast<Element>(it - ideal.begin());
  }
  return out;
}

namespace {

nlohmann::json covers_json(const Poset& p) {
  nlohmann::json c = nlohmann::json::array();
  for (auto [a, b] : p.covers()) c.push_back({a, b});
  return c;
}

bool is_bijection(const std::vector<Element>& m) {
  std::vector<char> seen(m.size(), 0);
  for (Element y : m) {
    if (y < 0 || static_cast<std::size_t>(y) >= m.size() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

// Checks the cover-count identity for one extension; returns a witness or null.
nlohmann::json echelon_violation(const Poset& p, const LinearExtension& sigma, const std::vector<Element>& mapping,
                                 const std::vector<CoverCount>& counts) {
  if (!is_bijection(mapping)) {
    return {{"n", p.size()}, {"covers", covers_json(p)}, {"sigma", sigma.order()}, {"reason", "not a bijection"}};
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (counts[mapping[x]].up != counts[x].down) {
      return {{"n", p.size()},          {"covers", covers_json(p)},         {"sigma", sigma.order()},
              {"x", x},                 {"ech_x", mapping[x]},              {"down_x", counts[x].down},
              {"up_ech_x", counts[mapping[x]].up}};
    }
  }
  return nullptr;
}

}  // namespace

Report verify_echelon_theorem(const Lattice& l, std::uint64_t cap) {
  Report r;
  r.theorem = "echelonmotion-cover-counts";
  const Poset& p = l.poset();
  if (!is_modular(l).modular) {
    r.status = Status::skipped;
    r.details["reason"] = "not modular";
    return r;
  }
  const auto counts = cover_counts(p);
  bool truncated = false;
  r.instances = linear_extensions(
      p, cap,
      [&](const LinearExtension& sigma) {
        if (r.status == Status::counterexample) return;
        auto w = echelon_violation(p, sigma, echelon_mapping(p, sigma), counts);
        if (!w.is_null()) r.fail(std::move(w));
      },
      &truncated);
  r.details["truncated"] = truncated;
  return r;
}

Report verify_dilworth(const Lattice& l) {
  Report r;
  r.theorem = "dilworth-multisets";
  r.instances = 1;
  const auto counts = cover_counts(l.poset());
  std::vector<int> down;
  std::vector<int> up;
  for (const auto& c : counts) {
    down.push_back(c.down);
    up.push_back(c.up);
  }
  std::sort(down.begin(), down.end());
  std::sort(up.begin(), up.end());
  r.details["down"] = down;
  r.details["up"] = up;
  if (!is_modular(l).modular) {
    r.status = Status::skipped;
    r.details["reason"] = "not modular";
    return r;
  }
  if (down != up) r.fail({{"n", l.size()}, {"covers", covers_json(l.poset())}, {"down", down}, {"up", up}});
  return r;
}

bool is_echelon_independent(const Poset& p, std::uint64_t cap) {
  if (cap != 0 && linear_extensions(p, cap + 1, [](const LinearExtension&) {}) > cap) {
    throw ExtensionCapExceeded("more than " + std::to_string(cap) + " linear extensions");
  }
  std::vector<Element> first;
  bool independent = true;
  linear_extensions(p, 0, [&](const LinearExtension& sigma) {
    if (!independent) return;
    auto m = echelon_mapping(p, sigma);
    if (first.empty()) {
      first = std::move(m);
    } else if (m != first) {
      independent = false;
    }
  });
  return independent;
}

Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}

Poset chain_product_poset(int a, int b) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) covers.emplace_back(i * b + j, (i + 1) * b + j);
      if (j + 1 < b) covers.emplace_back(i * b + j, i * b + j + 1);
    }
  }
  return Poset::from_covers(a * b, covers);
}

Poset diamond_poset(int k) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  if (k == 0) covers.emplace_back(0, 1);
  return Poset::from_covers(k + 2, covers);
}

Poset pentagon_poset() { return Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

Poset binary_subspace_poset(int dim) {
  const int vectors = 1 << dim;
  if (vectors > 8) throw std::invalid_argument("binary_subspace_poset: dim <= 3 supported");
  std::vector<std::uint32_t> subspaces;
  for (std::uint32_t s = 1; s < (1U << vectors); ++s) {
    if ((s & 1U) == 0) continue;
    bool closed = true;
    for (int a = 0; a < vectors && closed; ++a) {
      for (int b = 0; b < vectors && closed; ++b) {
        if (((s >> a) & 1U) && ((s >> b) & 1U) && !((s >> (a ^ b)) & 1U)) closed = false;
      }
    }
    if (closed) subspaces.push_back(s);
  }
  std::sort(subspaces.begin(), subspaces.end(), [](std::uint32_t x, std::uint32_t y) {
    return std::popcount(x) != std::popcount(y) ? std::popcount(x) < std::popcount(y) : x < y;
  });
  std::vector<ElementMask> up(subspaces.size(), 0);
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
      if ((subspaces[i] & ~subspaces[j]) == 0) up[i] |= ElementMask{1} << j;
    }
  }
  return Poset::from_up_masks(std::move(up));
}

std::vector<NamedLattice> lattice_catalog() {
  std::vector<NamedLattice> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"C" + std::to_string(n), Lattice::from_poset(chain_poset(n))});
  for (int a = 2; a <= 6; ++a) {
    for (int b = a; a * b <= 12; ++b) {
      out.push_back({"C" + std::to_string(a) + "xC" + std::to_string(b), Lattice::from_poset(chain_product_poset(a, b))});
    }
  }
  out.push_back({"M3", Lattice::from_poset(diamond_poset(3))});
  out.push_back({"M4", Lattice::from_poset(diamond_poset(4))});
  out.push_back({"Sub(GF2^3)", Lattice::from_poset(binary_subspace_poset(3))});
  out.push_back({"N5", Lattice::from_poset(pentagon_poset())});
  return out;
}

namespace {

void merge_into(Report& into, const Report& part) {
  into.instances += part.instances;
  if (part.status == Status::counterexample) into.fail(part.witness);
}

void sweep_one(const Poset& p, LatticeSweep& acc) {
  ++acc.posets;
  auto built = Lattice::build(p);
  auto* l = std::get_if<Lattice>(&built);
  if (l == nullptr) return;
  ++acc.lattices;
  if (!is_modular(*l).modular) return;
  ++acc.modular;
  const bool distributive = is_distributive(*l);
  std::vector<Element> row;
  if (distributive) {
    ++acc.distributive;
    row = rowmotion_distributive(*l);
  }
  const auto counts = cover_counts(p);
  merge_into(acc.dilworth, verify_dilworth(*l));
  linear_extensions(p, 0, [&](const LinearExtension& sigma) {
    const IntMatrix w = cartan_matrix(p, sigma);
    const Permutation fast = bruhat_permutation(w);
    ++acc.bruhat_cross.instances;
    if (fast != bruhat_permutation_by_ranks(w)) {
      acc.bruhat_cross.fail({{"n", p.size()}, {"covers", covers_json(p)}, {"sigma", sigma.order()}});
    }
    const auto mapping = echelon_mapping(p, sigma);
    ++acc.echelon.instances;
    auto witness = echelon_violation(p, sigma, mapping, counts);
    if (!witness.is_null()) acc.echelon.fail(std::move(witness));
    if (distributive) {
      ++acc.rowmotion.instances;
      if (mapping != row) {
        acc.rowmotion.fail({{"n", p.size()}, {"covers", covers_json(p)}, {"sigma", sigma.order()},
                            {"echelon", mapping}, {"rowmotion", row}});
      }
    }
  });
}

}  // namespace

LatticeSweep sweep_labelled_lattices(int max_n, const Executor& exec, int limit) {
  if (max_n > limit) throw LimitExceeded("lattice sweep limited to n <= " + std::to_string(limit));
  struct Task {
    int n;
    Poset prefix;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    for (const Poset& prefix : all_posets(std::min(n, 4))) tasks.push_back({n, prefix});
  }
  auto parts = exec.map<LatticeSweep>(tasks.size(), [&](std::size_t i) {
    LatticeSweep part;
    enumerate_poset_extensions(tasks[i].prefix, tasks[i].n, [&](const Poset& p) { sweep_one(p, part); });
    return part;
  });
  LatticeSweep total;
  total.echelon.theorem = "echelonmotion-cover-counts";
  total.dilworth.theorem = "dilworth-multisets";
  total.rowmotion.theorem = "distributive-rowmotion";
  total.bruhat_cross.theorem = "bruhat-rank-routes";
  for (const auto& part : parts) {
    total.posets += part.posets;
    total.lattices += part.lattices;
    total.modular += part.modular;
    total.distributive += part.distributive;
    merge_into(total.echelon, part.echelon);
    merge_into(total.dilworth, part.dilworth);
    merge_into(total.rowmotion, part.rowmotion);
    merge_into(total.bruhat_cross, part.bruhat_cross);
  }
  for (Report* r : {&total.echelon, &total.dilworth, &total.rowmotion, &total.bruhat_cross}) {
    r->details["max_n"] = max_n;
    r->details["posets"] = total.posets;
    r->details["lattices"] = total.lattices;
    r->details["modular"] = total.modular;
    r->details["distributive"] = total.distributive;
  }
  return total;
}

}  // namespace combicheck
