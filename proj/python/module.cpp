#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permav/automaton.hpp"
#include "permav/cli.hpp"
#include "permav/oracle.hpp"
#include "permav/survey.hpp"

namespace py = pybind11;
using namespace permav;

namespace {

Permutation perm_from_list(const std::vector<int>& entries) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(entries.size());
    for (int v : entries) {
        if (v < 1 || v > 255) throw InvalidArgumentError("permutation entry out of range");
        bytes.push_back(static_cast<std::uint8_t>(v));
    }
    return Permutation(std::move(bytes));
}

std::vector<int> perm_to_list(const Permutation& p) {
    return {p.entries().begin(), p.entries().end()};
}

py::int_ to_pyint(const mpz_class& v) {
    const std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list series_to_pylist(const Series& s) {
    py::list out;
    for (const auto& v : s) out.append(to_pyint(v));
    return out;
}

py::list poly_to_pylist(const Poly& p) {
    py::list out;
    for (const auto& v : p.coeffs()) out.append(to_pyint(v));
    return out;
}

py::dict report_to_dict(const RegularityReport& report) {
    py::dict checks;
    for (const auto& chk : report.checks) {
        py::dict entry;
        entry["passed"] = chk.passed;
        if (chk.witness)
            entry["witness"] = to_string(*chk.witness);
        else
            entry["witness"] = py::none();
        checks[chk.name.c_str()] = entry;
    }
    py::dict out;
    out["regular"] = report.regular;
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_permav, m) {
    m.doc() = "insertion-encoding automata and exact generating functions for "
              "finitely based permutation classes";

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<NotRegularError>(m, "NotRegularError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", PyExc_ValueError);

    m.def("standardize",
          [](const std::vector<int>& w) { return perm_to_list(standardize(w)); },
          py::arg("values"), "Rank a duplicate-free sequence into a permutation.");
    m.def("contains",
          [](const std::vector<int>& pi, const std::vector<int>& beta) {
              return contains(perm_from_list(pi), perm_from_list(beta));
          },
          py::arg("pi"), py::arg("beta"));
    m.def("avoids",
          [](const std::vector<int>& pi, const std::string& basis) {
              return avoids(perm_from_list(pi), parse_basis(basis));
          },
          py::arg("pi"), py::arg("basis"));
    m.def("symmetry",
          [](const std::vector<int>& pi, const std::string& which) {
              const Permutation p = perm_from_list(pi);
              if (which == "inverse") return perm_to_list(inverse(p));
              if (which == "reverse") return perm_to_list(reverse(p));
              if (which == "complement") return perm_to_list(complement(p));
              throw InvalidArgumentError("symmetry must be inverse, reverse or complement");
          },
          py::arg("pi"), py::arg("which"));
    m.def("encode",
          [](const std::vector<int>& pi) { return to_string(encode(perm_from_list(pi))); },
          py::arg("pi"), "The insertion word of a permutation, e.g. 'm1 f2 f1'.");
    m.def("decode",
          [](const std::string& word) { return to_string(decode(parse_word(word))); },
          py::arg("word"), "Apply a word to the initial configuration; '*' marks slots.");
    m.def("check_regular",
          [](const std::string& basis) { return report_to_dict(check_regular(parse_basis(basis))); },
          py::arg("basis"));
    m.def("oracle_counts",
          [](const std::string& basis, int n) {
              const OracleCounts counts = enumerate_class(parse_basis(basis), n);
              return py::make_tuple(series_to_pylist(counts.class_counts),
                                    series_to_pylist(counts.indecomposable_counts));
          },
          py::arg("basis"), py::arg("n"),
          "Brute-force (class, indecomposable) counting sequences.");
    m.def("compare",
          [](const std::string& basis, int n) {
              const CompareReport r = compare(parse_basis(basis), n);
              py::dict out;
              out["regular"] = r.regular;
              out["checked"] = r.checked;
              out["ok"] = r.ok;
              return out;
          },
          py::arg("basis"), py::arg("n"));

    py::class_<Automaton>(m, "Automaton")
        .def_property_readonly("n_states", &Automaton::state_count)
        .def_property_readonly("n_transitions", &Automaton::transition_count)
        .def_property_readonly("slot_bound", [](const Automaton& a) { return a.slot_bound; })
        .def("series",
             [](const Automaton& a, int n) { return series_to_pylist(series_from_automaton(a, n)); },
             py::arg("n"))
        .def("gf",
             [](const Automaton& a) { return to_string(gf_from_automaton(minimize(a))); },
             "Canonical generating function as '(num) / (den)'.")
        .def("gf_coeffs",
             [](const Automaton& a) {
                 const RationalFunction f = gf_from_automaton(minimize(a));
                 return py::make_tuple(poly_to_pylist(f.num()), poly_to_pylist(f.den()));
             },
             "Ascending numerator and denominator coefficient lists.")
        .def("minimized", [](const Automaton& a) { return minimize(a); })
        .def("accepts_word",
             [](const Automaton& a, const std::string& w) { return a.accepts_word(parse_word(w)); },
             py::arg("word"))
        .def("to_json", [](const Automaton& a) { return to_json(a); })
        .def("to_dot", [](const Automaton& a) { return to_dot(a); });

    m.def("build",
          [](const std::string& basis, bool indecomposable, bool force, long guard_states,
             int guard_slots) {
              BuildOptions options;
              options.force = force;
              options.guards.max_states = guard_states;
              options.guards.max_slots = guard_slots;
              return build_automaton(parse_basis(basis),
                                     indecomposable ? Automaton::Kind::SumIndecomposable
                                                    : Automaton::Kind::Class,
                                     options);
          },
          py::arg("basis"), py::arg("indecomposable") = false, py::arg("force") = false,
          py::arg("guard_states") = BuildGuards{}.max_states,
          py::arg("guard_slots") = BuildGuards{}.max_slots,
          "Construct the accepting automaton of the insertion encoding of Av(basis).");

    m.def("gf",
          [](const std::string& basis, bool indecomposable) {
              const Automaton a = build_automaton(
                  parse_basis(basis),
                  indecomposable ? Automaton::Kind::SumIndecomposable : Automaton::Kind::Class,
                  {});
              return to_string(gf_from_automaton(minimize(a)));
          },
          py::arg("basis"), py::arg("indecomposable") = false);

    m.def("survey",
          [](int length, int size, int n, bool verify_members) {
              SurveyOptions options;
              options.series_length = n;
              options.verify_members = verify_members;
              const SurveyResult res = survey(length, size, options);
              py::list rows;
              for (const auto& row : res.rows) {
                  py::dict d;
                  d["id"] = row.symmetry_class_id;
                  d["basis"] = to_string(row.representative);
                  d["members"] = static_cast<int>(row.members.size());
                  d["regular"] = row.regular;
                  if (row.regular) {
                      d["gf"] = to_string(*row.gf);
                      d["series"] = series_to_pylist(row.series);
                  }
                  rows.append(d);
              }
              py::dict out;
              out["bases"] = res.basis_count;
              out["symmetry_classes"] = static_cast<int>(res.rows.size());
              out["regular_classes"] = res.regular_class_count;
              out["distinct_gfs"] = res.distinct_gf_count;
              out["rows"] = rows;
              return out;
          },
          py::arg("length"), py::arg("size"), py::arg("n") = 8,
          py::arg("verify_members") = true);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr).");
}
