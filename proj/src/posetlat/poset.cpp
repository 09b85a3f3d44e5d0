#include "combicheck/poset.hpp"

#include <algorithm>
#include <bit>

namespace combicheck {

namespace {

ElementMask bit(int x) { return ElementMask{1} << x; }

ElementMask full_mask(int n) { return n >= 32 ? ~ElementMask{0} : (bit(n) - 1); }

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 0 || n > kMaxPosetSize) throw PosetError(PosetError::Kind::invalid, "poset size out of range");
  std::vector<ElementMask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) up[x] = bit(x);
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw PosetError(PosetError::Kind::invalid, "cover index out of range");
    }
    if (i == j) throw PosetError(PosetError::Kind::cyclic, "cover relation has a loop at " + std::to_string(i));
    up[i] |= bit(j);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if ((up[x] >> k) & 1U) up[x] |= up[k];
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (((up[x] >> y) & 1U) && ((up[y] >> x) & 1U)) {
        throw PosetError(PosetError::Kind::cyclic,
                         "cover relation is cyclic through " + std::to_string(x) + " and " + std::to_string(y));
      }
    }
  }
  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.finish();
  return p;
}

Poset Poset::from_up_masks(std::vector<ElementMask> up) {
  const int n = static_cast<int>(up.size());
  if (n > kMaxPosetSize) throw PosetError(PosetError::Kind::invalid, "poset size out of range");
  const ElementMask all = full_mask(n);
  for (int x = 0; x < n; ++x) {
    if ((up[x] & ~all) != 0) throw PosetError(PosetError::Kind::invalid, "relation mentions unknown elements");
    if (!((up[x] >> x) & 1U)) throw PosetError(PosetError::Kind::invalid, "relation is not reflexive");
    for (int y = 0; y < n; ++y) {
      if (!((up[x] >> y) & 1U)) continue;
      if (y != x && ((up[y] >> x) & 1U)) throw PosetError(PosetError::Kind::cyclic, "relation is not antisymmetric");
      if ((up[y] & ~up[x]) != 0) throw PosetError(PosetError::Kind::invalid, "relation is not transitive");
    }
  }
  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.finish();
  return p;
}

void Poset::finish() {
  const auto n = static_cast<std::size_t>(n_);
  down_.assign(n, 0);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if ((up_[x] >> y) & 1U) down_[y] |= bit(x);
    }
  }
  upper_covers_.assign(n, 0);
  lower_covers_.assign(n, 0);
  covers_.clear();
  for (int x = 0; x < n_; ++x) {
    const ElementMask strict_up = up_[x] & ~bit(x);
    for (int y = 0; y < n_; ++y) {
      if (!((strict_up >> y) & 1U)) continue;
      const ElementMask strict_down = down_[y] & ~bit(y);
      if ((strict_up & strict_down) == 0) {
        upper_covers_[x] |= bit(y);
        lower_covers_[y] |= bit(x);
        covers_.emplace_back(x, y);
      }
    }
  }
}

Poset Poset::prefix(int k) const {
  std::vector<ElementMask> up(up_.begin(), up_.begin() + k);
  for (auto& m : up) m &= full_mask(k);
  return from_up_masks(std::move(up));
}

std::vector<CoverCount> cover_counts(const Poset& p) {
  std::vector<CoverCount> out(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    out[x].down = std::popcount(p.lower_covers_mask(x));
    out[x].up = std::popcount(p.upper_covers_mask(x));
  }
  return out;
}

std::variant<Lattice, NotALattice> Lattice::build(const Poset& p) {
  const int n = p.size();
  if (n == 0) return NotALattice{-1, -1, "empty poset"};
  Lattice l;
  l.poset_ = p;
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const ElementMask lower = p.down_mask(a) & p.down_mask(b);
      const ElementMask upper = p.up_mask(a) & p.up_mask(b);
      int glb = -1;
      for (ElementMask m = lower; m != 0; m &= m - 1) {
        const int g = std::countr_zero(m);
        if ((lower & ~p.down_mask(g)) == 0) {
          glb = g;
          break;
        }
      }
      if (glb < 0) return NotALattice{a, b, lower == 0 ? "no common lower bound" : "no greatest lower bound"};
      int lub = -1;
      for (ElementMask m = upper; m != 0; m &= m - 1) {
        const int u = std::countr_zero(m);
        if ((upper & ~p.up_mask(u)) == 0) {
          lub = u;
          break;
        }
      }
      if (lub < 0) return NotALattice{a, b, upper == 0 ? "no common upper bound" : "no least upper bound"};
      l.meet_[l.index(a, b)] = l.meet_[l.index(b, a)] = glb;
      l.join_[l.index(a, b)] = l.join_[l.index(b, a)] = lub;
    }
  }
  l.bottom_ = 0;
  l.top_ = 0;
  for (int x = 1; x < n; ++x) {
    l.bottom_ = l.meet(l.bottom_, x);
    l.top_ = l.join(l.top_, x);
  }
  return l;
}

Lattice Lattice::from_poset(const Poset& p) {
  auto r = build(p);
  if (auto* failure = std::get_if<NotALattice>(&r)) throw NotALatticeError(*failure);
  return std::get<Lattice>(std::move(r));
}

ModularityResult is_modular(const Lattice& l) {
  const Poset& p = l.poset();
  const int n = l.size();
  ModularityResult result;
  for (int a = 0; a < n && result.modular; ++a) {
    for (int b = 0; b < n && result.modular; ++b) {
      if (!p.leq(a, b)) continue;
      for (int x = 0; x < n; ++x) {
        if (l.join(a, l.meet(x, b)) != l.meet(l.join(a, x), b)) {
          result.modular = false;
          result.witness = std::array<Element, 3>{a, b, x};
          break;
        }
      }
    }
  }
  bool cover_form = true;
  for (int a = 0; a < n && cover_form; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p.is_cover(l.meet(a, b), a) != p.is_cover(b, l.join(a, b))) {
        cover_form = false;
        break;
      }
    }
  }
  if (cover_form != result.modular) throw std::logic_error("modular law and its cover form disagree");
  return result;
}

std::optional<std::array<Element, 3>> find_m3_sublattice(const Lattice& l) {
  const Poset& p = l.poset();
  const int n = l.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      const int m = l.meet(a, b);
      const int j = l.join(a, b);
      for (int c = b + 1; c < n; ++c) {
        if (p.comparable(a, c) || p.comparable(b, c)) continue;
        if (l.meet(a, c) == m && l.meet(b, c) == m && l.join(a, c) == j && l.join(b, c) == j) {
          return std::array<Element, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Element> join_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (int x = 0; x < l.size(); ++x) {
    if (std::popcount(l.poset().lower_covers_mask(x)) == 1) out.push_back(x);
  }
  return out;
}

namespace {

// Counts order ideals of the subposet on `elems` (listed in a linear extension
// order), stopping once the count exceeds `stop_after`.
std::uint64_t count_ideals(const Poset& p, const std::vector<Element>& elems, std::uint64_t stop_after) {
  std::uint64_t count = 0;
  std::vector<char> in(elems.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (count > stop_after) return;
    if (k == elems.size()) {
      ++count;
      return;
    }
    in[k] = 0;
    rec(k + 1);
    // Including elems[k] requires everything below it (among elems) included.
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!in[i] && p.less(elems[i], elems[k])) ok = false;
    }
    if (ok) {
      in[k] = 1;
      rec(k + 1);
      in[k] = 0;
    }
  };
  rec(0);
  return count;
}

}  // namespace

bool is_distributive(const Lattice& l) {
  const bool forbidden_route = is_modular(l).modular && !find_m3_sublattice(l).has_value();
  std::vector<Element> ji = join_irreducibles(l);
  // Order the join-irreducibles compatibly with the poset.
  std::sort(ji.begin(), ji.end(), [&](Element a, Element b) {
    const int ra = std::popcount(l.poset().down_mask(a));
    const int rb = std::popcount(l.poset().down_mask(b));
    return ra != rb ? ra < rb : a < b;
  });
  const auto n = static_cast<std::uint64_t>(l.size());
  const bool ideal_route = count_ideals(l.poset(), ji, n) == n;
  if (forbidden_route != ideal_route) throw std::logic_error("distributivity routes disagree");
  return forbidden_route;
}

LinearExtension LinearExtension::from_order(std::vector<Element> order) {
  LinearExtension e;
  const int n = static_cast<int>(order.size());
  e.label_.assign(order.size(), 0);
  for (int i = 0; i < n; ++i) {
    const Element x = order[i];
    if (x < 0 || x >= n || e.label_[x] != 0) throw std::invalid_argument("linear extension is not a bijection");
    e.label_[x] = i + 1;
  }
  e.order_ = std::move(order);
  return e;
}

bool LinearExtension::extends(const Poset& p) const {
  if (p.size() != size()) return false;
  for (auto [x, y] : p.covers()) {
    if (label(x) > label(y)) return false;
  }
  return true;
}

std::uint64_t linear_extensions(const Poset& p, std::uint64_t cap,
                                const std::function<void(const LinearExtension&)>& f, bool* truncated) {
  const int n = p.size();
  std::uint64_t emitted = 0;
  bool stopped = false;
  std::vector<Element> order;
  order.reserve(static_cast<std::size_t>(n));
  ElementMask placed = 0;
  std::function<void()> rec = [&] {
    if (stopped) return;
    if (static_cast<int>(order.size()) == n) {
      if (cap != 0 && emitted == cap) {
        stopped = true;
        return;
      }
      ++emitted;
      f(LinearExtension::from_order(order));
      return;
    }
    for (int x = 0; x < n && !stopped; ++x) {
      if ((placed >> x) & 1U) continue;
      const ElementMask below = p.down_mask(x) & ~bit(x);
      if ((below & ~placed) != 0) continue;
      placed |= bit(x);
      order.push_back(x);
      rec();
      order.pop_back();
      placed &= ~bit(x);
    }
  };
  rec();
  if (truncated != nullptr) *truncated = stopped;
  return emitted;
}

std::vector<LinearExtension> all_linear_extensions(const Poset& p, std::uint64_t cap) {
  std::vector<LinearExtension> out;
  linear_extensions(p, cap, [&](const LinearExtension& e) { out.push_back(e); });
  return out;
}

namespace {

void extend_rec(std::vector<ElementMask>& up, int n, const std::function<void(const Poset&)>& f) {
  const int k = static_cast<int>(up.size());
  if (k == n) {
    f(Poset::from_up_masks(up));
    return;
  }
  std::vector<ElementMask> down(static_cast<std::size_t>(k), 0);
  for (int x = 0; x < k; ++x) {
    for (ElementMask m = up[x]; m != 0; m &= m - 1) down[std::countr_zero(m)] |= bit(x);
  }
  const ElementMask all = full_mask(k);
  for (ElementMask d = 0; d <= all; ++d) {
    // d must be an order ideal.
    bool ideal = true;
    for (ElementMask m = d; m != 0 && ideal; m &= m - 1) {
      if ((down[std::countr_zero(m)] & ~d) != 0) ideal = false;
    }
    if (!ideal) continue;
    ElementMask allowed = all;
    for (ElementMask m = d; m != 0; m &= m - 1) allowed &= up[std::countr_zero(m)] & ~bit(std::countr_zero(m));
    // u ranges over order filters inside `allowed`.
    for (ElementMask u = allowed;; u = (u - 1) & allowed) {
      bool filter = true;
      for (ElementMask m = u; m != 0 && filter; m &= m - 1) {
        if ((up[std::countr_zero(m)] & ~u) != 0) filter = false;
      }
      if (filter) {
        std::vector<ElementMask> next = up;
        for (ElementMask m = d; m != 0; m &= m - 1) next[std::countr_zero(m)] |= bit(k) | u;
        next.push_back(bit(k) | u);
        extend_rec(next, n, f);
      }
      if (u == 0) break;
    }
    if (d == all) break;
  }
}

}  // namespace

void enumerate_poset_extensions(const Poset& prefix, int n, const std::function<void(const Poset&)>& f) {
  if (n < prefix.size()) throw std::invalid_argument("target size below prefix size");
  if (n > kMaxPosetSize) throw LimitExceeded("poset size above 32");
  std::vector<ElementMask> up;
  for (int x = 0; x < prefix.size(); ++x) up.push_back(prefix.up_mask(x));
  extend_rec(up, n, f);
}

void enumerate_posets(int n, const std::function<void(const Poset&)>& f, int limit) {
  if (n > limit) {
    throw LimitExceeded("poset enumeration limited to n <= " + std::to_string(limit) + ", requested " +
                        std::to_string(n));
  }
  if (n < 0) throw std::invalid_argument("negative poset size");
  std::vector<ElementMask> up;
  extend_rec(up, n, f);
}

std::vector<Poset> all_posets(int n) {
  std::vector<Poset> out;
  enumerate_posets(n, [&](const Poset& p) { out.push_back(p); }, kMaxPosetSize);
  return out;
}

}  // namespace combicheck
