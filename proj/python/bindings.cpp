#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "combicheck/battery.hpp"
#include "combicheck/cli.hpp"
#include "combicheck/echelon.hpp"
#include "combicheck/genfun.hpp"
#include "combicheck/parking.hpp"
#include "combicheck/plactic.hpp"

namespace py = pybind11;
using namespace combicheck;

namespace {

using Rows = std::vector<std::vector<int>>;

// Reports and polynomials cross the boundary as plain JSON values.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object poly(const BiPoly& p) { return to_py(to_json(p)); }

py::object report(const Report& r) { return to_py(to_json(r)); }

Poset make_poset(int n, const std::vector<std::pair<int, int>>& covers) { return Poset::from_covers(n, covers); }

RookPlacement rooks_from(const std::vector<std::pair<int, int>>& pairs) {
  RookPlacement r;
  for (const auto& [row, col] : pairs) r.push_back({row, col});
  return r;
}

std::vector<std::pair<int, int>> rooks_to(const RookPlacement& r) {
  std::vector<std::pair<int, int>> out;
  for (const auto& rook : r) out.emplace_back(rook.row, rook.col);
  return out;
}

GreeneMode greene_mode(const std::string& s) {
  if (s == "increasing") return GreeneMode::increasing;
  if (s == "decreasing") return GreeneMode::decreasing;
  throw py::value_error("mode must be 'increasing' or 'decreasing'");
}

ParkingStatistic parking_stat(const std::string& s) {
  if (s == "exced") return ParkingStatistic::exced;
  if (s == "des-oc") return ParkingStatistic::des_oc;
  if (s == "des-oc-inv") return ParkingStatistic::des_oc_inv;
  throw py::value_error("stat must be 'exced', 'des-oc' or 'des-oc-inv'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exhaustive checks of echelonmotion, parking function and plactic centralizer identities";

  py::register_exception<PosetError>(m, "PosetError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParkingFailure>(m, "ParkingFailure", PyExc_ValueError);

  // posets and echelonmotion
  m.def(
      "echelon_map",
      [](int n, const std::vector<std::pair<int, int>>& covers, const std::vector<int>& sigma) {
        const Poset p = make_poset(n, covers);
        const auto ext = LinearExtension::from_order(sigma);
        if (ext.size() != p.size() || !ext.extends(p)) throw py::value_error("sigma is not a linear extension");
        return echelon_mapping(p, ext);
      },
      py::arg("n"), py::arg("covers"), py::arg("sigma"),
      "Ech_sigma as a list: element x maps to result[x]. sigma lists elements in label order.");
  m.def(
      "verify_echelon",
      [](int n, const std::vector<std::pair<int, int>>& covers, std::uint64_t cap) {
        return report(verify_echelon_theorem(Lattice::from_poset(make_poset(n, covers)), cap));
      },
      py::arg("n"), py::arg("covers"), py::arg("cap") = 100'000);
  m.def(
      "bruhat_permutation",
      [](const std::vector<std::vector<long long>>& rows) {
        IntMatrix w(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != w.cols()) throw py::value_error("ragged matrix");
          for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = rows[i][j];
        }
        const Permutation p = bruhat_permutation(w);
        return std::vector<int>(p.one_line().begin(), p.one_line().end());
      },
      py::arg("matrix"));

  // parking functions
  m.def("is_parking_function", [](const std::vector<int>& p) { return is_parking_function(p); });
  m.def("park", [](const std::vector<int>& p) {
    const Permutation oc = park(p);
    return std::vector<int>(oc.one_line().begin(), oc.one_line().end());
  });
  m.def("phi", [](const std::vector<int>& b, const std::vector<int>& w, const std::vector<int>& a) {
    return rooks_to(phi(ParkingContent(b), Permutation(w), a));
  });
  m.def(
      "insert_forward",
      [](const std::vector<int>& b, const std::vector<std::pair<int, int>>& rooks, const std::vector<int>& u0) {
        const auto ins = insert_forward(ParkingContent(b), rooks_from(rooks), u0);
        return py::make_tuple(std::vector<int>(ins.w.one_line().begin(), ins.w.one_line().end()), ins.a);
      },
      py::arg("b"), py::arg("rooks"), py::arg("u0"), "Returns (w, A).");
  m.def(
      "insert_inverse",
      [](const std::vector<int>& b, const std::vector<std::pair<int, int>>& rooks, const std::vector<int>& w,
         const std::vector<int>& a) { return insert_inverse(ParkingContent(b), rooks_from(rooks), Permutation(w), a); },
      py::arg("b"), py::arg("rooks"), py::arg("w"), py::arg("a"));
  m.def("rook_numbers", [](const std::vector<int>& heights) { return rook_numbers(Board{heights}); });
  m.def("verify_fixed_content", [](int n, unsigned threads) { return report(verify_fixed_content(n, Executor(threads))); },
        py::arg("n"), py::arg("threads") = 1);

  // generating functions
  m.def(
      "i_poly",
      [](int n, const std::string& method) {
        if (method != "trees" && method != "rec") throw py::value_error("method must be 'trees' or 'rec'");
        return poly(i_poly(n, method == "trees" ? IMethod::trees : IMethod::recurrence));
      },
      py::arg("n"), py::arg("method") = "rec");
  m.def(
      "itilde_poly", [](int n, const std::string& stat) { return poly(itilde_poly(n, parking_stat(stat))); },
      py::arg("n"), py::arg("stat") = "exced");
  m.def("i_minus1", [](int n) { return poly(i_minus1(n)); });
  m.def("zigzag_poly", [](int n) { return poly(zigzag_poly(n)); });
  m.def("verify_hopkins", [](int n) { return report(verify_hopkins(n)); });
  m.def("verify_stanley_yin", [](int n) { return report(verify_stanley_yin(n)); });
  m.def("verify_simsun", [](int n) { return report(verify_simsun_theorem(n)); });
  m.def("verify_alternating", [](int n) { return report(verify_alternating_theorem(n)); });

  // plactic monoid
  m.def("rsk_p", [](const std::vector<int>& w) { return rsk_p(w).rows(); });
  m.def("row_word", [](const Rows& t) { return row_word(Tableau(t)); });
  m.def("knuth_equiv", [](const std::vector<int>& u, const std::vector<int>& v) { return knuth_equiv(u, v); });
  m.def(
      "greene_oracle",
      [](const std::vector<int>& w, int k, const std::string& mode) { return greene_oracle(w, k, greene_mode(mode)); },
      py::arg("word"), py::arg("k"), py::arg("mode") = "increasing");
  m.def("rc_m", [](const std::vector<int>& w, int mm) { return rc_m(w, mm); });
  m.def("evac_m", [](const Rows& t, int mm) { return evac_m(Tableau(t), mm).rows(); });
  m.def("tau_m", [](const Rows& t, int mm) { return tau_m(Tableau(t), mm).rows(); });
  m.def(
      "centralizer",
      [](const std::vector<int>& u, int alphabet, int max_len, unsigned threads) {
        std::vector<Rows> out;
        for (const auto& t : centralizer_search(u, alphabet, max_len, Executor(threads)).members) out.push_back(t.rows());
        return out;
      },
      py::arg("u"), py::arg("alphabet"), py::arg("max_len"), py::arg("threads") = 1);
  m.def(
      "verify_first_rows",
      [](const std::vector<int>& u, int alphabet, int max_len) {
        return report(verify_first_rows_theorem(u, alphabet, max_len));
      },
      py::arg("u"), py::arg("alphabet"), py::arg("max_len"));
  m.def(
      "verify_rc",
      [](const std::vector<int>& u, int mm, int alphabet, int max_len) {
        return report(verify_rc_theorem(u, mm, alphabet, max_len));
      },
      py::arg("u"), py::arg("m"), py::arg("alphabet"), py::arg("max_len"));

  // acceptance battery and command line
  m.def(
      "run_criterion",
      [](int id, bool quick, std::uint64_t seed, unsigned threads) {
        Battery battery({quick, seed}, Executor(threads));
        return to_py(to_json(battery.run(id)));
      },
      py::arg("id"), py::arg("quick") = false, py::arg("seed") = 1, py::arg("threads") = 1);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
