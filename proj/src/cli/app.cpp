#include "combicheck/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "combicheck/battery.hpp"
#include "combicheck/echelon.hpp"
#include "combicheck/genfun.hpp"
#include "combicheck/parking.hpp"
#include "combicheck/plactic.hpp"

namespace combicheck {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("COMBICHECK_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("COMBICHECK_THREADS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

RookPlacement parse_rooks(const std::string& text) {
  RookPlacement out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--rooks: expected row:col pairs, got '" + item + "'");
    try {
      out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("--rooks: bad pair '" + item + "'");
    }
  }
  return out;
}

nlohmann::json rooks_json(const RookPlacement& r) {
  auto j = nlohmann::json::array();
  for (const auto& rook : r) j.push_back({rook.row, rook.col});
  return j;
}

std::string word_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i > 0 ? "," : "") + std::to_string(w[i]);
  return s;
}

// Shared state of one invocation.
struct Session {
  std::ostream& out;
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 1;

  // Option values bound by CLI11; they live as long as the session.
  std::vector<std::shared_ptr<void>> storage;

  template <class T, class... A>
  T* keep(A&&... init) {
    auto p = std::make_shared<T>(std::forward<A>(init)...);
    storage.push_back(p);
    return p.get();
  }

  Executor exec() const { return Executor(threads > 0 ? static_cast<unsigned>(threads) : default_threads()); }

  int emit(const std::vector<Report>& reports) {
    bool failed = false;
    for (const auto& r : reports) failed = failed || r.status == Status::counterexample;
    if (json) {
      if (reports.size() == 1) {
        out << to_json(reports.front()).dump(2) << '\n';
      } else {
        auto j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        out << j.dump(2) << '\n';
      }
    } else {
      for (const auto& r : reports) {
        out << r.theorem << ": " << to_string(r.status) << " (" << r.instances << " instances)\n";
        if (r.status == Status::counterexample) out << "  witness: " << r.witness.dump() << '\n';
      }
    }
    return failed ? kExitCounterexample : kExitOk;
  }

  int emit_poly(const std::string& label, const BiPoly& p) {
    if (json) {
      out << nlohmann::json{{"name", label}, {"polynomial", to_json(p)}, {"text", to_string(p)}}.dump(2) << '\n';
    } else {
      out << label << " = " << to_string(p) << '\n';
    }
    return kExitOk;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PosetError(PosetError::Kind::parse, "cannot open poset file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearExtension parse_sigma(const Poset& p, const std::vector<int>& order) {
  LinearExtension sigma;
  try {
    sigma = LinearExtension::from_order(order);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--sigma: ") + e.what());
  }
  if (sigma.size() != p.size() || !sigma.extends(p)) throw UsageError("--sigma is not a linear extension of the poset");
  return sigma;
}

void add_echelon(CLI::App& app, Session& s, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("echelon", "Echelonmotion on finite posets and lattices");
  cmd->require_subcommand(1);

  auto* map = cmd->add_subcommand("map", "Print Ech_sigma for one linear extension");
  auto* path = s.keep<std::string>();
  auto* order = s.keep<std::vector<int>>();
  map->add_option("--poset", *path, "Poset JSON file")->required();
  map->add_option("--sigma", *order, "Elements in label order, comma separated")->delimiter(',');
  map->callback([&s, &action, path, order] {
    action = [&s, path = *path, order = *order] {
      const Poset p = load_poset(path);
      const LinearExtension sigma = order.empty() ? all_linear_extensions(p, 1).front() : parse_sigma(p, order);
      const auto ech = echelonmotion(p, sigma);
      if (s.json) {
        s.out << nlohmann::json{{"sigma", sigma.order()}, {"ech", ech.mapping}}.dump(2) << '\n';
      } else {
        s.out << "x\tEch(x)\n";
        for (int x = 0; x < p.size(); ++x) s.out << x << '\t' << ech.mapping[static_cast<std::size_t>(x)] << '\n';
      }
      return kExitOk;
    };
  });

  auto* verify = cmd->add_subcommand("verify", "Check cover-count preservation over all linear extensions");
  auto* vpath = s.keep<std::string>();
  auto* cap = s.keep<std::uint64_t>(100'000);
  verify->add_option("--poset", *vpath, "Poset JSON file")->required();
  verify->add_option("--cap", *cap, "Maximum number of linear extensions (0 = all)");
  verify->callback([&s, &action, vpath, cap] {
    action = [&s, path = *vpath, cap = *cap] {
      const Poset p = load_poset(path);
      auto built = Lattice::build(p);
      if (const auto* bad = std::get_if<NotALattice>(&built)) {
        Report r;
        r.theorem = "echelonmotion-cover-counts";
        r.status = Status::skipped;
        r.details = {{"reason", "not a lattice: " + bad->reason}, {"a", bad->a}, {"b", bad->b}};
        return s.emit({r});
      }
      const auto& l = std::get<Lattice>(built);
      std::vector<Report> reports{verify_echelon_theorem(l, cap), verify_dilworth(l)};
      if (is_distributive(l)) {
        Report row;
        row.theorem = "distributive-rowmotion";
        const auto target = rowmotion_distributive(l);
        row.instances = linear_extensions(p, cap, [&](const LinearExtension& sigma) {
          const auto ech = echelon_mapping(p, sigma);
          if (ech != target) row.fail({{"sigma", sigma.order()}, {"echelon", ech}, {"rowmotion", target}});
        });
        reports.push_back(row);
      }
      return s.emit(reports);
    };
  });

  auto* sweep = cmd->add_subcommand("sweep", "Exhaustive sweep over labelled posets");
  auto* max_n = s.keep<int>(5);
  sweep->add_option("--max-n", *max_n, "Largest poset size (at most 6)")->check(CLI::Range(1, 6));
  sweep->callback([&s, &action, max_n] {
    action = [&s, n = *max_n] {
      const auto r = sweep_labelled_lattices(n, s.exec());
      return s.emit({r.echelon, r.dilworth, r.rowmotion, r.bruhat_cross});
    };
  });
}

void add_parking(CLI::App& app, Session& s, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("parking", "Parking functions, rook placements and the insertion bijection");
  cmd->require_subcommand(1);

  auto* fixed = cmd->add_subcommand("verify-fixed-content", "Excedance sum = descent sum for every content");
  auto* n = s.keep<int>(4);
  fixed->add_option("--n", *n, "Length")->required()->check(CLI::Range(1, 8));
  fixed->callback([&s, &action, n] { action = [&s, n = *n] { return s.emit({verify_fixed_content(n, s.exec())}); }; });

  auto* phi_cmd = cmd->add_subcommand("phi", "Rook placement Phi(w, A)");
  auto* b = s.keep<std::vector<int>>();
  auto* w = s.keep<std::vector<int>>();
  auto* a = s.keep<std::vector<int>>();
  phi_cmd->add_option("--b", *b, "Parking content")->required()->delimiter(',');
  phi_cmd->add_option("--w", *w, "Permutation in one-line notation")->required()->delimiter(',');
  phi_cmd->add_option("--A", *a, "Subset of the descent set")->delimiter(',');
  phi_cmd->callback([&s, &action, b, w, a] {
    action = [&s, b = *b, w = *w, a = *a] {
      const ParkingContent content(b);
      const Permutation perm(w);
      const auto ind = induced_pf(content, perm);
      const auto rooks = phi(content, perm, a);
      if (s.json) {
        s.out << nlohmann::json{{"pi", ind.pi}, {"sigma", ind.sigma.one_line()}, {"rooks", rooks_json(rooks)}}.dump(2)
              << '\n';
      } else {
        s.out << "pi = " << word_string(ind.pi) << "\nsigma = " << to_string(ind.sigma) << "\nrooks =";
        for (const auto& r : rooks) s.out << ' ' << r.row << ':' << r.col;
        s.out << '\n';
      }
      return kExitOk;
    };
  });

  auto* ins = cmd->add_subcommand("insert", "Insertion bijection from (R, u0) to (w, A)");
  auto* ib = s.keep<std::vector<int>>();
  auto* rooks = s.keep<std::string>();
  auto* u0 = s.keep<std::vector<int>>();
  ins->add_option("--b", *ib, "Parking content")->required()->delimiter(',');
  ins->add_option("--rooks", *rooks, "Rooks as row:col pairs, comma separated")->required();
  ins->add_option("--u0", *u0, "Ordering of the free columns")->delimiter(',');
  ins->callback([&s, &action, ib, rooks, u0] {
    action = [&s, b = *ib, text = *rooks, u0 = *u0] {
      const ParkingContent content(b);
      const RookPlacement r = parse_rooks(text);
      const auto res = insert_forward(content, r, u0);
      const Word back = insert_inverse(content, r, res.w, res.a);
      if (s.json) {
        s.out << nlohmann::json{{"w", res.w.one_line()}, {"A", res.a}, {"u0", back}}.dump(2) << '\n';
      } else {
        s.out << "w = " << to_string(res.w) << "\nA = " << word_string(res.a) << '\n';
      }
      return back == u0 ? kExitOk : kExitCounterexample;
    };
  });
}

void add_genfun(CLI::App& app, Session& s, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("genfun", "Tree inversion enumerators and their q = -1 specializations");
  cmd->require_subcommand(1);

  auto* ip = cmd->add_subcommand("i-poly", "I_n(q, t)");
  auto* n = s.keep<int>(4);
  auto* method = s.keep<std::string>("rec");
  ip->add_option("--n", *n, "Number of vertices minus one")->required()->check(CLI::Range(0, 20));
  ip->add_option("--method", *method, "trees or rec")->check(CLI::IsMember({"trees", "rec"}));
  ip->callback([&s, &action, n, method] {
    action = [&s, n = *n, m = *method] {
      return s.emit_poly("I_" + std::to_string(n), i_poly(n, m == "trees" ? IMethod::trees : IMethod::recurrence, s.exec()));
    };
  });

  auto* it = cmd->add_subcommand("itilde", "Itilde_n(q, t) as a parking function sum");
  auto* tn = s.keep<int>(4);
  auto* stat = s.keep<std::string>("exced");
  it->add_option("--n", *tn, "Length")->required()->check(CLI::Range(1, 7));
  it->add_option("--stat", *stat, "exced, des-oc or des-oc-inv")->check(CLI::IsMember({"exced", "des-oc", "des-oc-inv"}));
  it->callback([&s, &action, tn, stat] {
    action = [&s, n = *tn, st = *stat] {
      const auto which = st == "exced"    ? ParkingStatistic::exced
                         : st == "des-oc" ? ParkingStatistic::des_oc
                                          : ParkingStatistic::des_oc_inv;
      return s.emit_poly("Itilde_" + std::to_string(n), itilde_poly(n, which, s.exec()));
    };
  });

  struct Check {
    const char* name;
    const char* help;
    Report (*run)(int, const Executor&);
  };
  for (const Check c : {Check{"verify-simsun", "I_n(-1, t) against simsun descents", verify_simsun_theorem},
                        Check{"verify-alternating", "Itilde_n(-1, t) against alternating permutations",
                              verify_alternating_theorem},
                        Check{"verify-hopkins", "Itilde_n via exced and via des(oc)", verify_hopkins},
                        Check{"verify-stanley-yin", "I_n by trees, recurrence and parking sums", verify_stanley_yin}}) {
    auto* sub = cmd->add_subcommand(c.name, c.help);
    auto* vn = s.keep<int>(4);
    sub->add_option("--n", *vn, "Size")->required();
    sub->callback([&s, &action, vn, run = c.run] { action = [&s, n = *vn, run] { return s.emit({run(n, s.exec())}); }; });
  }
}

void add_plactic(CLI::App& app, Session& s, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("plactic", "RSK, plactic centralizers and evacuation");
  cmd->require_subcommand(1);

  auto* p = cmd->add_subcommand("p", "Insertion tableau P(w)");
  auto* word = s.keep<std::vector<int>>();
  p->add_option("--word", *word, "Word, comma separated")->required()->delimiter(',');
  p->callback([&s, &action, word] {
    action = [&s, w = *word] {
      const Tableau t = rsk_p(w);
      if (s.json) {
        s.out << to_json(t).dump() << '\n';
      } else {
        s.out << to_string(t);
      }
      return kExitOk;
    };
  });

  auto* cent = cmd->add_subcommand("centralizer", "Tableaux of C(u) among words over [M] of length <= L");
  auto* cu = s.keep<std::vector<int>>();
  auto* cm = s.keep<int>(4);
  auto* cl = s.keep<int>(6);
  cent->add_option("--u", *cu, "Word u")->required()->delimiter(',');
  cent->add_option("--alphabet", *cm, "Alphabet size M")->check(CLI::PositiveNumber);
  cent->add_option("--max-len", *cl, "Length cap L")->check(CLI::NonNegativeNumber);
  cent->callback([&s, &action, cu, cm, cl] {
    action = [&s, u = *cu, m = *cm, l = *cl] {
      const auto set = centralizer_search(u, m, l, s.exec());
      if (s.json) {
        auto members = nlohmann::json::array();
        for (const auto& t : set.members) members.push_back(to_json(t));
        s.out << nlohmann::json{{"u", u},
                                {"alphabet", m},
                                {"max_len", l},
                                {"words_tested", set.words_tested},
                                {"members", members}}
                     .dump(2)
              << '\n';
      } else {
        s.out << set.members.size() << " tableaux from " << set.words_tested << " words\n";
        for (const auto& t : set.members) s.out << to_json(t).dump() << '\n';
      }
      return kExitOk;
    };
  });

  auto* fr = cmd->add_subcommand("verify-first-rows", "First rows of every centralizer tableau are bounded by max(u)");
  auto* fu = s.keep<std::vector<int>>();
  auto* fm = s.keep<int>(4);
  auto* fl = s.keep<int>(6);
  fr->add_option("--u", *fu, "Word u")->required()->delimiter(',');
  fr->add_option("--alphabet", *fm, "Alphabet size M")->check(CLI::PositiveNumber);
  fr->add_option("--max-len", *fl, "Length cap L")->check(CLI::NonNegativeNumber);
  fr->callback([&s, &action, fu, fm, fl] {
    action = [&s, u = *fu, m = *fm, l = *fl] { return s.emit({verify_first_rows_theorem(u, m, l, s.exec())}); };
  });

  auto* rc = cmd->add_subcommand("verify-rc", "tau_m maps C(u) onto C(RC_m(u)) within (M, L)");
  auto* ru = s.keep<std::vector<int>>();
  auto* rm = s.keep<int>(0);
  auto* ra = s.keep<int>(4);
  auto* rl = s.keep<int>(6);
  rc->add_option("--u", *ru, "Word u")->required()->delimiter(',');
  rc->add_option("--m", *rm, "Threshold m")->required()->check(CLI::PositiveNumber);
  rc->add_option("--alphabet", *ra, "Alphabet size M")->check(CLI::PositiveNumber);
  rc->add_option("--max-len", *rl, "Length cap L")->check(CLI::NonNegativeNumber);
  rc->callback([&s, &action, ru, rm, ra, rl] {
    action = [&s, u = *ru, m = *rm, a = *ra, l = *rl] { return s.emit({verify_rc_theorem(u, m, a, l, s.exec())}); };
  });
}

void add_verify(CLI::App& app, Session& s, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("verify", "Acceptance battery");
  cmd->require_subcommand(1);

  auto* all = cmd->add_subcommand("all", "Run every acceptance criterion in order");
  auto* quick = s.keep<bool>(false);
  all->add_flag("--quick", *quick, "Reduce every size by one");
  auto* one = cmd->add_subcommand("criterion", "Run one acceptance criterion");
  auto* id = s.keep<int>(1);
  auto* one_quick = s.keep<bool>(false);
  one->add_option("--id", *id, "Criterion number")->required()->check(CLI::Range(Battery::kFirst, Battery::kLast));
  one->add_flag("--quick", *one_quick, "Reduce every size by one");

  auto run = [&s](bool q, int first, int last) {
    Battery battery({q, s.seed}, s.exec());
    bool failed = false;
    auto j = nlohmann::json::array();
    for (int i = first; i <= last; ++i) {
      const auto c = battery.run(i);
      failed = failed || !c.passed();
      if (s.json) {
        j.push_back(to_json(c));
      } else {
        s.out << "criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << '\n';
        for (const auto& r : c.reports) {
          if (r.status == Status::counterexample) s.out << "  " << r.theorem << " witness: " << r.witness.dump() << '\n';
        }
      }
    }
    if (s.json) {
      s.out << nlohmann::json{{"quick", q}, {"seed", s.seed}, {"criteria", j}}.dump(2) << '\n';
    }
    return failed ? kExitCounterexample : kExitOk;
  };
  all->callback([&action, run, quick] { action = [run, q = *quick] { return run(q, Battery::kFirst, Battery::kLast); }; });
  one->callback([&action, run, id, one_quick] { action = [run, q = *one_quick, i = *id] { return run(q, i, i); }; });
}

}  // namespace

Poset poset_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(PosetError::Kind::parse, std::string("poset JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw PosetError(PosetError::Kind::parse, "poset JSON: covers must be pairs");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Poset::from_covers(n, covers);
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(PosetError::Kind::parse, std::string("poset JSON: ") + e.what());
  }
}

Poset load_poset(const std::string& path) { return poset_from_json_text(read_file(path)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session{out, false, 0, 1, {}};
  std::function<int()> action;
  CLI::App app("Exhaustive checks of echelonmotion, parking function and plactic centralizer identities",
               "combicheck");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", session.json, "Print JSON instead of text");
  app.add_option("--threads", session.threads, "Worker count (default: COMBICHECK_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", session.seed, "Seed for randomized checks");

  add_echelon(app, session, action);
  add_parking(app, session, action);
  add_genfun(app, session, action);
  add_plactic(app, session, action);
  add_verify(app, session, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << "error: no command given\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PosetError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParkingFailure& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace combicheck
