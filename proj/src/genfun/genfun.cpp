#include "combicheck/genfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "combicheck/parking.hpp"

namespace combicheck {

namespace {

constexpr int kMaxTrees = 7;
constexpr int kMaxParking = 7;
constexpr int kMaxRecurrence = 20;
constexpr int kMaxMinus1 = 30;
constexpr int kMaxSimsunBrute = 9;
constexpr int kMaxZigzag = 10;

void require_range(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

bool reaches_root(const std::vector<int>& parents) {
  const int n = static_cast<int>(parents.size());
  // state: 0 unknown, 1 on the current walk, 2 known to reach 0
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  state[0] = 2;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> walk;
    int x = v;
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      walk.push_back(x);
      x = parents[static_cast<std::size_t>(x - 1)];
    }
    if (state[static_cast<std::size_t>(x)] == 1) return false;
    for (int y : walk) state[static_cast<std::size_t>(y)] = 2;
  }
  return true;
}

// Trees whose part index is `part`: parent(1) for parent functions, the first
// Pruefer letter otherwise.
int tree_parts(int n, TreeEnumeration how) {
  if (n <= 1) return 1;
  return how == TreeEnumeration::parent_functions ? n : n + 1;
}

void for_each_tree_part(int n, TreeEnumeration how, int part, const std::function<void(const RootedTree&)>& f) {
  if (n == 0) {
    f(RootedTree(std::vector<int>{}));
    return;
  }
  if (n == 1) {
    f(RootedTree({0}));
    return;
  }
  if (how == TreeEnumeration::parent_functions) {
    // parent(v) ranges over {0..n} \ {v}; encode the choice as an index 0..n-1.
    auto decode = [](int v, int k) { return k < v ? k : k + 1; };
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    choice[0] = part;
    std::vector<int> parents(static_cast<std::size_t>(n));
    for (;;) {
      for (int v = 1; v <= n; ++v) parents[static_cast<std::size_t>(v - 1)] = decode(v, choice[static_cast<std::size_t>(v - 1)]);
      if (reaches_root(parents)) f(RootedTree(parents));
      std::size_t i = choice.size();
      while (i > 1 && choice[i - 1] == n - 1) choice[--i] = 0;
      if (i == 1) return;
      ++choice[i - 1];
    }
  }
  // Pruefer sequences of length n - 1 over {0..n}.
  std::vector<int> seq(static_cast<std::size_t>(n - 1), 0);
  seq[0] = part;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  std::vector<int> parents(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(degree.begin(), degree.end(), 1);
    for (auto& a : adj) a.clear();
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    for (int x : seq) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      adj[static_cast<std::size_t>(leaf)].push_back(x);
      adj[static_cast<std::size_t>(x)].push_back(leaf);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(x)];
    }
    int u = -1;
    for (int v = 0; v <= n; ++v) {
      if (degree[static_cast<std::size_t>(v)] != 1) continue;
      if (u < 0) {
        u = v;
      } else {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
      }
    }
    // Orient away from the root.
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    seen[0] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        parents[static_cast<std::size_t>(y - 1)] = x;
        stack.push_back(y);
      }
    }
    f(RootedTree(parents));
    std::size_t i = seq.size();
    while (i > 1 && seq[i - 1] == n) seq[--i] = 0;
    if (i == 1) return;
    ++seq[i - 1];
  }
}

// Dense coefficient table indexed [q exponent][t exponent].
struct Grid {
  std::vector<std::vector<std::uint64_t>> c;
  Grid() = default;
  Grid(std::size_t q, std::size_t t) : c(q, std::vector<std::uint64_t>(t, 0)) {}
  void add(const Grid& o) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += o.c[i][j];
    }
  }
  BiPoly poly() const {
    BiPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        p.add_term(BigInt(c[i][j]), static_cast<unsigned>(i), static_cast<unsigned>(j));
      }
    }
    return p;
  }
};

std::size_t max_inversions(int n) { return static_cast<std::size_t>(n * (n - 1) / 2) + 1; }

// One pass over PF(n) filling one grid per statistic; slot 3 is t-free.
std::vector<Grid> parking_grids(int n, const Executor& exec) {
  require_range(n >= 0 && n <= kMaxParking, "parking sums need n <= 7");
  const std::size_t qs = max_inversions(n);
  const auto ts = static_cast<std::size_t>(std::max(n, 1));
  const auto parts = static_cast<std::size_t>(std::max(n, 1));
  auto sweep = [&](std::size_t part) {
    std::vector<Grid> g(4, Grid(qs, ts + 1));
    auto visit = [&](const Word& pi) {
      const auto s = parking_stats(pi);
      const Permutation oc = park(pi);
      const auto q = static_cast<std::size_t>(s.cosum);
      ++g[0].c[q][static_cast<std::size_t>(s.exced)];
      ++g[1].c[q][static_cast<std::size_t>(des(oc))];
      ++g[2].c[q][static_cast<std::size_t>(des(oc.inverse()))];
      ++g[3].c[q][0];
    };
    if (n == 0) {
      if (part == 0) for_each_parking_function(0, visit);
    } else {
      for_each_parking_function(n, visit, static_cast<int>(part) + 1);
    }
    return g;
  };
  const auto pieces = exec.map<std::vector<Grid>>(parts, sweep);
  std::vector<Grid> total(4, Grid(qs, ts + 1));
  for (const auto& piece : pieces) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k].add(piece[k]);
  }
  return total;
}

BiPoly i_recurrence(int n) {
  require_range(n >= 0 && n <= kMaxRecurrence, "recurrence needs n <= 20");
  std::vector<BiPoly> in{BiPoly(1)};
  for (int m = 1; m <= n; ++m) {
    BiPoly next = BiPoly::q_integer(static_cast<unsigned>(m)) * in[static_cast<std::size_t>(m - 1)];
    BiPoly sum;
    for (int i = 0; i <= m - 2; ++i) {
      sum += BiPoly(binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(i))) *
             BiPoly::q_integer(static_cast<unsigned>(i + 1)) * in[static_cast<std::size_t>(i)] *
             in[static_cast<std::size_t>(m - 1 - i)];
    }
    next += BiPoly::t() * sum;
    in.push_back(std::move(next));
  }
  return in[static_cast<std::size_t>(n)];
}

bool has_double_descent(const std::vector<int>& u) {
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (u[i - 1] > u[i] && u[i] > u[i + 1]) return true;
  }
  return false;
}

bool is_alternating(const Permutation& w) {
  for (int i = 1; i < w.size(); ++i) {
    const bool up = (i % 2) == 1;
    if (up != (w(i) < w(i + 1))) return false;
  }
  return true;
}

bool is_jacobi_word(const std::vector<int>& word) {
  if (word.empty()) return true;
  const auto pos = std::min_element(word.begin(), word.end()) - word.begin();
  if (pos % 2 != 0) return false;
  // Recursing on the raw subwords equals recursing on their standardizations:
  // the test only compares letters.
  return is_jacobi_word(std::vector<int>(word.begin(), word.begin() + pos)) &&
         is_jacobi_word(std::vector<int>(word.begin() + pos + 1, word.end()));
}

bool in_o(const Permutation& sigma) {
  const auto ell = ell_values(sigma);
  for (int i = 1; i <= sigma.size(); ++i) {
    if ((sigma(i) - ell[static_cast<std::size_t>(i - 1)]) % 2 != 0) return false;
  }
  return true;
}

bool in_t(const Permutation& tau) {
  for (int p = 1; p <= tau.size(); ++p) {
    int alpha = 0;
    for (int j = 1; j < p; ++j) {
      if (tau(j) > tau(p)) alpha = j;
    }
    if ((p - alpha) % 2 == 0) return false;
  }
  return true;
}

std::set<Permutation> members(int n, PermClass tag) {
  std::set<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    if (class_membership(w, tag)) out.insert(w);
  });
  return out;
}

nlohmann::json poly_pair(const BiPoly& a, const BiPoly& b) { return {{"lhs", to_json(a)}, {"rhs", to_json(b)}}; }

}  // namespace

RootedTree::RootedTree(std::vector<int> parents) : parent_(std::move(parents)) {
  const int n = size();
  for (int v = 1; v <= n; ++v) {
    const int p = parent(v);
    if (p < 0 || p > n || p == v) throw std::invalid_argument("RootedTree: bad parent of " + std::to_string(v));
  }
  if (!reaches_root(parent_)) throw std::invalid_argument("RootedTree: parent pointers contain a cycle");
}

TreeStats tree_stats(const RootedTree& t) {
  const int n = t.size();
  TreeStats s;
  std::vector<bool> has_child(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    has_child[static_cast<std::size_t>(t.parent(i))] = true;
    for (int j = t.parent(i); j != 0; j = t.parent(j)) s.inv += j > i;
  }
  for (bool c : has_child) s.leaves += !c;
  return s;
}

void for_each_tree(int n, TreeEnumeration how, const std::function<void(const RootedTree&)>& f) {
  require_range(n >= 0 && n <= kMaxTrees, "tree enumeration needs n <= 7");
  for (int part = 0; part < tree_parts(n, how); ++part) for_each_tree_part(n, how, part, f);
}

BiPoly i_poly(int n, IMethod method, const Executor& exec) {
  if (method == IMethod::recurrence) return i_recurrence(n);
  require_range(n >= 0 && n <= kMaxTrees, "tree enumeration needs n <= 7");
  const auto how = n <= 6 ? TreeEnumeration::parent_functions : TreeEnumeration::pruefer;
  const auto parts = static_cast<std::size_t>(tree_parts(n, how));
  const auto pieces = exec.map<Grid>(parts, [&](std::size_t part) {
    Grid g(max_inversions(n), static_cast<std::size_t>(n) + 1);
    for_each_tree_part(n, how, static_cast<int>(part), [&](const RootedTree& t) {
      const auto s = tree_stats(t);
      ++g.c[static_cast<std::size_t>(s.inv)][static_cast<std::size_t>(s.leaves - 1)];
    });
    return g;
  });
  Grid total(max_inversions(n), static_cast<std::size_t>(n) + 1);
  for (const auto& g : pieces) total.add(g);
  return total.poly();
}

BiPoly itilde_poly(int n, ParkingStatistic stat, const Executor& exec) {
  return parking_grids(n, exec)[static_cast<std::size_t>(stat)].poly();
}

BiPoly cosum_poly(int n, const Executor& exec) { return parking_grids(n, exec)[3].poly(); }

BiPoly i_minus1(int n) {
  require_range(n >= 0 && n <= kMaxMinus1, "i_minus1 needs n <= 30");
  std::vector<BiPoly> in{BiPoly(1)};
  for (int m = 1; m <= n; ++m) {
    BiPoly next = (m % 2 == 1) ? in[static_cast<std::size_t>(m - 1)] : BiPoly();
    BiPoly sum;
    for (int i = 0; i <= m - 2; i += 2) {
      sum += BiPoly(binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(i))) *
             in[static_cast<std::size_t>(i)] * in[static_cast<std::size_t>(m - 1 - i)];
    }
    next += BiPoly::t() * sum;
    in.push_back(std::move(next));
  }
  return in[static_cast<std::size_t>(n)];
}

bool is_simsun(const Permutation& w) {
  const auto line = w.one_line();
  for (int j = 1; j <= w.size(); ++j) {
    std::vector<int> restricted;
    for (int v : line) {
      if (v <= j) restricted.push_back(v);
    }
    if (has_double_descent(restricted)) return false;
  }
  return true;
}

BiPoly simsun_poly(int m, SimsunMethod method) {
  if (method == SimsunMethod::brute) {
    require_range(m >= 0 && m <= kMaxSimsunBrute, "brute-force simsun needs m <= 9");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(m, 1)), 0);
    for_each_permutation(m, [&](const Permutation& w) {
      if (is_simsun(w)) coeffs[static_cast<std::size_t>(des(w))] += 1;
    });
    return BiPoly::from_t_coeffs(coeffs);
  }
  const BiPoly x = BiPoly::t();
  BiPoly r(1);
  for (int k = 0; k < m; ++k) {
    r = (BiPoly(1) + BiPoly(k) * x) * r + x * (BiPoly(1) - BiPoly(2) * x) * r.derivative_t();
  }
  return r;
}

BiPoly a_poly(int n) {
  if (n < 1) throw std::invalid_argument("a_poly needs n >= 1");
  const BiPoly t = BiPoly::t();
  BiPoly a(1);
  for (int k = 1; k < n; ++k) {
    a = (BiPoly(1) + BiPoly(k) * (t - BiPoly(1))) * a + t * (BiPoly(2) - t) * a.derivative_t();
  }
  return a;
}

std::vector<int> ell_values(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> ell;
  for (int i = 1; i <= n; ++i) {
    int r = sigma(i) - 1;
    while (r > 0 && used[static_cast<std::size_t>(r)]) --r;
    ell.push_back(r + 1);
    used[static_cast<std::size_t>(sigma(i))] = true;
  }
  return ell;
}

bool class_membership(const Permutation& w, PermClass tag) {
  switch (tag) {
    case PermClass::simsun:
      return is_simsun(w);
    case PermClass::alternating:
      return is_alternating(w);
    case PermClass::jacobi: {
      const auto line = w.one_line();
      return is_jacobi_word(std::vector<int>(line.begin(), line.end()));
    }
    case PermClass::O:
      return in_o(w);
    case PermClass::T:
      return in_t(w);
  }
  return false;
}

BiPoly jacobi_poly(int n) {
  require_range(n >= 0 && n <= kMaxZigzag, "jacobi_poly needs n <= 10");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(n, 1)), 0);
  for_each_permutation(n, [&](const Permutation& w) {
    if (class_membership(w, PermClass::jacobi)) coeffs[static_cast<std::size_t>(des(w.inverse()))] += 1;
  });
  return BiPoly::from_t_coeffs(coeffs);
}

BiPoly zigzag_poly(int n) {
  require_range(n >= 0 && n <= kMaxZigzag, "zigzag_poly needs n <= 10");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(n, [&](const Permutation& w) {
    if (is_alternating(w)) coeffs[static_cast<std::size_t>(des1(w.inverse()) + 1)] += 1;
  });
  return BiPoly::from_t_coeffs(coeffs);
}

Report verify_hopkins(int n, const Executor& exec) {
  Report r;
  r.theorem = "hopkins-exced-des";
  const auto grids = parking_grids(n, exec);
  const BiPoly exced = grids[0].poly();
  const BiPoly des_oc = grids[1].poly();
  r.instances = static_cast<std::uint64_t>(exced.evaluate(1, 1));
  r.details["n"] = n;
  r.details["itilde"] = to_json(exced);
  if (exced != des_oc) r.fail({{"n", n}, {"exced", to_json(exced)}, {"des_oc", to_json(des_oc)}});
  return r;
}

Report verify_stanley_yin(int n, const Executor& exec) {
  Report r;
  r.theorem = "stanley-yin";
  r.details["n"] = n;
  const BiPoly rec = i_poly(n, IMethod::recurrence);
  const BiPoly trees = i_poly(n, IMethod::trees, exec);
  const auto grids = parking_grids(n, exec);
  const BiPoly des_inv = grids[2].poly();
  const BiPoly cosum = grids[3].poly();
  r.instances = static_cast<std::uint64_t>(trees.evaluate(1, 1));
  r.details["i_poly"] = to_json(rec);
  if (trees != rec) r.fail({{"n", n}, {"check", "trees-vs-recurrence"}, {"values", poly_pair(trees, rec)}});
  if (des_inv != rec) r.fail({{"n", n}, {"check", "des-oc-inverse"}, {"values", poly_pair(des_inv, rec)}});
  if (rec.substitute_t(1) != cosum) {
    r.fail({{"n", n}, {"check", "kreweras"}, {"values", poly_pair(rec.substitute_t(1), cosum)}});
  }
  BigInt count = 1;
  for (int i = 0; i + 1 < n; ++i) count *= n + 1;
  if (rec.evaluate(1, 1) != count || grids[0].poly().evaluate(1, 1) != count) {
    r.fail({{"n", n}, {"check", "total-count"}, {"expected", count.str()}});
  }
  return r;
}

Report verify_simsun_theorem(int n, const Executor& exec) {
  (void)exec;
  Report r;
  r.theorem = "simsun";
  require_range(n >= 1 && n <= 10, "verify_simsun_theorem needs 1 <= n <= 10");
  r.details["n"] = n;
  const auto d = static_cast<unsigned>(n - 1);
  const BiPoly lhs = i_minus1(n);
  const BiPoly from_i = i_poly(n, IMethod::recurrence).substitute_q(-1);
  const BiPoly r_brute = simsun_poly(n - 1, SimsunMethod::brute);
  const BiPoly r_rec = simsun_poly(n - 1, SimsunMethod::recurrence);
  const BiPoly a = a_poly(n);
  r.instances = static_cast<std::uint64_t>(r_brute.evaluate(1, 1));
  r.details["i_minus1"] = to_json(lhs);
  if (lhs != from_i) r.fail({{"n", n}, {"check", "minus-one-recurrence"}, {"values", poly_pair(lhs, from_i)}});
  if (r_brute != r_rec) r.fail({{"n", n}, {"check", "chow-shiu"}, {"values", poly_pair(r_brute, r_rec)}});
  if (r_brute.reflect_t(d) != a) r.fail({{"n", n}, {"check", "a-recurrence"}, {"values", poly_pair(r_brute.reflect_t(d), a)}});
  if (lhs != r_brute.reflect_t(d)) {
    r.fail({{"n", n}, {"check", "simsun-sum"}, {"values", poly_pair(lhs, r_brute.reflect_t(d))}});
  }
  return r;
}

Report verify_alternating_theorem(int n, const Executor& exec) {
  Report r;
  r.theorem = "alternating";
  require_range(n >= 2 && n <= kMaxParking, "verify_alternating_theorem needs 2 <= n <= 7");
  r.details["n"] = n;
  const BiPoly itilde = itilde_poly(n, ParkingStatistic::exced, exec).substitute_q(-1);
  const BiPoly z = zigzag_poly(n);
  const BiPoly j = jacobi_poly(n);
  r.details["zigzag"] = to_json(z);

  const auto o = members(n, PermClass::O);
  const auto t = members(n, PermClass::T);
  const auto jac = members(n, PermClass::jacobi);
  std::vector<BigInt> o_coeffs(static_cast<std::size_t>(n), 0);
  std::set<Permutation> o_inverses;
  for (const auto& sigma : o) {
    o_coeffs[static_cast<std::size_t>(des(sigma))] += 1;
    o_inverses.insert(sigma.inverse());
  }
  std::set<Permutation> t_complements;
  for (const auto& tau : t) t_complements.insert(tau.complemented());
  const BiPoly o_sum = BiPoly::from_t_coeffs(o_coeffs);
  r.instances = o.size();

  if (itilde != z) r.fail({{"n", n}, {"check", "itilde-vs-zigzag"}, {"values", poly_pair(itilde, z)}});
  if (itilde != o_sum) r.fail({{"n", n}, {"check", "o-descent-sum"}, {"values", poly_pair(itilde, o_sum)}});
  if (o_inverses != t) r.fail({{"n", n}, {"check", "t-is-o-inverse"}});
  if (t_complements != jac) r.fail({{"n", n}, {"check", "complement-t-is-jacobi"}});
  if (z != BiPoly::t() * j) r.fail({{"n", n}, {"check", "z-is-t-times-j"}, {"values", poly_pair(z, BiPoly::t() * j)}});
  if (!j.is_palindromic_t(static_cast<unsigned>(n - 2))) r.fail({{"n", n}, {"check", "j-palindromic"}, {"j", to_json(j)}});
  return r;
}

}  // namespace combicheck
