#include "combicheck/battery.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "combicheck/echelon.hpp"
#include "combicheck/genfun.hpp"
#include "combicheck/parking.hpp"
#include "combicheck/plactic.hpp"

namespace combicheck {

namespace {

// Labelled posets on 1..6 elements.
constexpr std::uint64_t kLabelledPosets[] = {1, 3, 19, 219, 4231, 130023};

constexpr std::uint64_t kCatalogCap = 100'000;

Report summary(const std::string& theorem) {
  Report r;
  r.theorem = theorem;
  return r;
}

// Folds a per-instance report into an aggregate: instances add up and the
// first counterexample wins.
void absorb(Report& total, const Report& part, const nlohmann::json& label) {
  total.instances += part.instances;
  if (part.status == Status::counterexample) total.fail({{"instance", label}, {"witness", part.witness}});
}

std::vector<Word> words_up_to(int alphabet, int max_len, bool nonempty) {
  std::vector<Word> out;
  if (!nonempty) out.emplace_back();
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (int a = 1; a <= alphabet; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

IntMatrix random_unit_upper(std::size_t n, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = static_cast<long long>(rng() % 5) - 2;
  }
  return u;
}

}  // namespace

bool CriterionResult::passed() const {
  std::uint64_t instances = 0;
  for (const auto& r : reports) {
    if (r.status == Status::counterexample) return false;
    instances += r.instances;
  }
  return instances > 0;
}

nlohmann::json to_json(const CriterionResult& c) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : c.reports) reports.push_back(to_json(r));
  return {{"criterion", c.id}, {"title", c.title}, {"passed", c.passed()}, {"reports", reports}};
}

Report verify_greene(int alphabet, int max_len) {
  Report r = summary("greene-shape");
  r.details["alphabet"] = alphabet;
  r.details["max_len"] = max_len;
  for (const auto& w : words_up_to(alphabet, max_len, false)) {
    ++r.instances;
    const Tableau p = rsk_p(w);
    const auto shape = p.shape();
    const auto conj = p.conjugate_shape();
    int rows = 0;
    int cols = 0;
    for (int k = 1; k <= std::max<int>(1, static_cast<int>(w.size())); ++k) {
      if (k <= static_cast<int>(shape.size())) rows += shape[static_cast<std::size_t>(k - 1)];
      if (k <= static_cast<int>(conj.size())) cols += conj[static_cast<std::size_t>(k - 1)];
      const int inc = greene_oracle(w, k, GreeneMode::increasing);
      const int dec = greene_oracle(w, k, GreeneMode::decreasing);
      if (inc != rows || dec != cols) {
        r.fail({{"word", w}, {"k", k}, {"increasing", inc}, {"decreasing", dec}, {"shape", shape}});
      }
    }
  }
  return r;
}

Report verify_bruhat_consistency(int max_n, int trials, std::uint64_t seed) {
  Report r = summary("bruhat-consistency");
  r.details["max_n"] = max_n;
  r.details["trials"] = trials;
  r.details["seed"] = seed;
  std::uint64_t permutations = 0;
  for (int n = 1; n <= max_n; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      ++permutations;
      const IntMatrix m = IntMatrix::from_permutation(w);
      if (bruhat_permutation(m) != w || bruhat_permutation_by_ranks(m) != w) {
        r.fail({{"check", "permutation-matrix"}, {"w", w.one_line()}});
      }
    });
  }
  std::uint64_t perturbations = 0;
  std::mt19937_64 rng(seed);
  for (const auto& [name, lattice] : lattice_catalog()) {
    const Poset& p = lattice.poset();
    const auto sigma = all_linear_extensions(p, 1).front();
    const IntMatrix w = cartan_matrix(p, sigma);
    const Permutation base = bruhat_permutation(w);
    if (bruhat_permutation_by_ranks(w) != base) r.fail({{"check", "rank-formula"}, {"lattice", name}});
    for (int t = 0; t < trials; ++t) {
      ++perturbations;
      const auto n = w.rows();
      const IntMatrix u1 = random_unit_upper(n, rng);
      const IntMatrix u2 = random_unit_upper(n, rng);
      if (bruhat_permutation(u1 * w * u2) != base) {
        r.fail({{"check", "perturbation"}, {"lattice", name}, {"trial", t}, {"seed", seed}});
      }
    }
  }
  r.details["permutation_matrices"] = permutations;
  r.details["perturbations"] = perturbations;
  r.instances = permutations + perturbations;
  return r;
}

struct Battery::Cache {
  std::optional<LatticeSweep> sweep;
  std::optional<std::vector<NamedLattice>> catalog;
};

Battery::Battery(BatteryOptions options, Executor exec)
    : options_(options), exec_(exec), cache_(std::make_unique<Cache>()) {}

Battery::~Battery() = default;

std::vector<CriterionResult> Battery::run_all(const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = kFirst; id <= kLast; ++id) {
    out.push_back(run(id));
    if (progress) progress(out.back());
  }
  return out;
}

CriterionResult Battery::run(int id) {
  const int shrink = options_.quick ? 1 : 0;
  const std::uint64_t cap = options_.quick ? kCatalogCap / 10 : kCatalogCap;
  auto sweep = [&]() -> const LatticeSweep& {
    if (!cache_->sweep) cache_->sweep = sweep_labelled_lattices(6 - shrink, exec_);
    return *cache_->sweep;
  };
  auto catalog = [&]() -> const std::vector<NamedLattice>& {
    if (!cache_->catalog) cache_->catalog = lattice_catalog();
    return *cache_->catalog;
  };
  auto sweep_counts = [&](Report& r) {
    const auto& s = sweep();
    r.details["max_n"] = 6 - shrink;
    r.details["posets"] = s.posets;
    r.details["lattices"] = s.lattices;
    r.details["modular"] = s.modular;
    r.details["distributive"] = s.distributive;
    std::uint64_t expected = 0;
    for (int n = 1; n <= 6 - shrink; ++n) expected += kLabelledPosets[n - 1];
    if (s.posets != expected) r.fail({{"check", "poset-count"}, {"posets", s.posets}, {"expected", expected}});
  };

  CriterionResult c;
  c.id = id;
  switch (id) {
    case 1: {
      c.title = "echelonmotion preserves cover counts on modular lattices";
      Report s = sweep().echelon;
      sweep_counts(s);
      c.reports.push_back(s);
      Report cat = summary("echelonmotion-cover-counts-catalog");
      for (const auto& [name, l] : catalog()) {
        if (!is_modular(l).modular) continue;
        const Report r = verify_echelon_theorem(l, cap);
        absorb(cat, r, name);
        cat.details["lattices"][name] = {{"extensions", r.instances}, {"truncated", r.details["truncated"]}};
      }
      c.reports.push_back(cat);
      break;
    }
    case 2: {
      c.title = "Dilworth multiset equality on modular lattices";
      c.reports.push_back(sweep().dilworth);
      Report cat = summary("dilworth-multisets-catalog");
      for (const auto& [name, l] : catalog()) {
        if (!is_modular(l).modular) continue;
        absorb(cat, verify_dilworth(l), name);
      }
      c.reports.push_back(cat);
      break;
    }
    case 3: {
      c.title = "echelonmotion equals rowmotion on distributive lattices";
      c.reports.push_back(sweep().rowmotion);
      c.reports.push_back(sweep().bruhat_cross);
      Report cat = summary("distributive-rowmotion-catalog");
      for (const auto& [name, l] : catalog()) {
        if (!is_distributive(l)) continue;
        const auto row = rowmotion_distributive(l);
        cat.instances += linear_extensions(l.poset(), cap, [&](const LinearExtension& sigma) {
          const auto ech = echelon_mapping(l.poset(), sigma);
          if (ech != row) cat.fail({{"lattice", name}, {"sigma", sigma.order()}, {"echelon", ech}, {"rowmotion", row}});
        });
      }
      c.reports.push_back(cat);
      break;
    }
    case 4:
      c.title = "Bruhat decomposition self-consistency";
      c.reports.push_back(verify_bruhat_consistency(6 - shrink, 100, options_.seed));
      break;
    case 5: {
      c.title = "fixed-content excedance and descent sums agree";
      for (int n = 1; n <= 6 - shrink; ++n) c.reports.push_back(verify_fixed_content(n, exec_));
      Report ex = summary("fixed-content-worked-example");
      ex.instances = 1;
      const ParkingContent b({1, 1, 2, 4, 5, 6});
      const RookPlacement rooks{{1, 3}, {2, 6}, {4, 5}};
      const Word u0{2, 4, 1};
      const auto ins = insert_forward(b, rooks, u0);
      const auto expected_w = parse_permutation("632541");
      const std::vector<int> expected_a{1, 2, 4};
      if (ins.w != expected_w || ins.a != expected_a || phi(b, ins.w, ins.a) != rooks ||
          insert_inverse(b, rooks, ins.w, ins.a) != u0) {
        ex.fail({{"w", ins.w.one_line()}, {"a", ins.a}});
      }
      ex.details["w"] = to_string(ins.w);
      ex.details["a"] = ins.a;
      c.reports.push_back(ex);
      break;
    }
    case 6:
      c.title = "Itilde via excedances equals Itilde via descents of the outcome";
      for (int n = 1; n <= 7 - shrink; ++n) c.reports.push_back(verify_hopkins(n, exec_));
      break;
    case 7:
      c.title = "tree inversion enumerator: trees, recurrence and parking sums";
      for (int n = 1; n <= 7 - shrink; ++n) c.reports.push_back(verify_stanley_yin(n, exec_));
      break;
    case 8:
      c.title = "I_n(-1, t) is the simsun descent polynomial";
      for (int n = 1; n <= 9 - shrink; ++n) c.reports.push_back(verify_simsun_theorem(n, exec_));
      break;
    case 9:
      c.title = "Itilde_n(-1, t) is the alternating descent polynomial";
      for (int n = 2; n <= 7 - shrink; ++n) c.reports.push_back(verify_alternating_theorem(n, exec_));
      break;
    case 10:
      c.title = "Greene invariants match the shape of P(w)";
      c.reports.push_back(verify_greene(3, 7 - shrink));
      break;
    case 11: {
      c.title = "plactic centralizer first-rows bound and no-bump property";
      const int len = 7 - shrink;
      std::vector<Word> us = words_up_to(2, 4, true);
      for (const auto& u : words_up_to(3, 3, true)) {
        if (std::find(u.begin(), u.end(), 3) != u.end()) us.push_back(u);
      }
      for (const auto& u : us) {
        const int m = *std::max_element(u.begin(), u.end());
        c.reports.push_back(verify_first_rows_theorem(u, m + 2, len, exec_));
      }
      break;
    }
    case 12: {
      c.title = "tau_m maps restricted centralizer tableaux of u onto those of RC_m(u)";
      const int len = 6 - shrink;
      for (int m = 1; m <= 3; ++m) {
        std::map<Word, CentralizerSet> sets;
        auto get = [&](const Word& u) -> const CentralizerSet& {
          auto it = sets.find(u);
          if (it == sets.end()) it = sets.emplace(u, centralizer_search(u, m + 2, len, exec_)).first;
          return it->second;
        };
        for (const auto& u : words_up_to(m, 4, false)) {
          const Word rc = rc_m(u, m);
          c.reports.push_back(compare_rc_sets(u, m, get(u), get(rc)));
        }
      }
      break;
    }
    default:
      throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
  return c;
}

}  // namespace combicheck
