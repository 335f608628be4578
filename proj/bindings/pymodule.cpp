#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fcech/cli.hpp"
#include "fcech/errors.hpp"
#include "fcech/lattice.hpp"

namespace py = pybind11;
using namespace fcech;

namespace {

// Exact integer bridging: big values travel as base-10 strings.
py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int from_py(py::handle h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an integer");
  return Int(py::str(h).cast<std::string>());
}

IntMatrix matrix_from(py::sequence rows) {
  int r = static_cast<int>(py::len(rows));
  int c = r == 0 ? 0 : static_cast<int>(py::len(rows[0]));
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    py::sequence row = rows[static_cast<std::size_t>(i)].cast<py::sequence>();
    if (static_cast<int>(py::len(row)) != c) throw py::value_error("ragged matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = from_py(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

py::list matrix_to(const IntMatrix& m) {
  py::list rows;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

// Coefficients are given as (free_rank, factors), e.g. (1, []) for Z and
// (0, [2]) for Z/2.
FgAbGroup group_from(py::handle spec) {
  if (py::isinstance<py::tuple>(spec) || py::isinstance<py::list>(spec)) {
    py::sequence s = spec.cast<py::sequence>();
    if (py::len(s) == 2) {
      int rank = s[0].cast<int>();
      std::vector<Int> factors;
      for (py::handle f : s[1].cast<py::sequence>()) factors.push_back(from_py(f));
      return FgAbGroup::from_parts(rank, std::move(factors));
    }
  }
  throw py::type_error("coefficients are a pair (free_rank, factors)");
}

py::dict group_to(const FgAbGroup& g) {
  py::dict d;
  d["group"] = g.to_string();
  d["free_rank"] = g.free_rank();
  py::list factors;
  for (const Int& f : g.invariant_factors()) factors.append(to_py(f));
  d["factors"] = factors;
  return d;
}

py::dict limit_to(const LimitReport& r) {
  py::dict d = group_to(r.limit);
  d["stabilized"] = r.stabilized;
  py::list stages;
  for (const FgAbGroup& s : r.stages) stages.append(s.to_string());
  d["stages"] = stages;
  return d;
}

std::vector<Simplex> simplices_from(py::sequence seq) {
  std::vector<Simplex> out;
  for (py::handle s : seq) {
    Simplex simplex;
    for (py::handle v : s.cast<py::sequence>()) simplex.push_back(v.cast<int>());
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    out.push_back(std::move(simplex));
  }
  return out;
}

SimplicialPair pair_from(py::sequence simplices, py::sequence sub) {
  return SimplicialPair(Complex::from_simplices(simplices_from(simplices)),
                        Complex::from_simplices(simplices_from(sub)));
}

CoverSystem build_fixture(const std::string& name, py::object depth) {
  const Fixture& f = fixture(name);
  return f.build(depth.is_none() ? f.default_depth : depth.cast<int>());
}

}  // namespace

PYBIND11_MODULE(fcech, m) {
  m.doc() = "Exact functional Cech (co)homology of spaces presented as finite cover systems";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "snf",
      [](py::sequence matrix) {
        SnfResult r = smith_normal_form(matrix_from(matrix));
        py::dict d;
        d["s"] = matrix_to(r.s);
        d["u"] = matrix_to(r.u);
        d["v"] = matrix_to(r.v);
        return d;
      },
      py::arg("matrix"),
      "Smith normal form: returns s, u, v with s = u * matrix * v, u and v unimodular.");

  m.def(
      "homology",
      [](py::sequence simplices, py::sequence sub, int degree, py::handle coefficients) {
        return group_to(homology(pair_from(simplices, sub), group_from(coefficients), degree));
      },
      py::arg("simplices"), py::arg("sub") = py::list(), py::arg("degree") = 0,
      py::arg("coefficients") = py::make_tuple(1, py::list()),
      "Relative simplicial homology of the pair generated by the given simplices.");

  m.def(
      "cohomology",
      [](py::sequence simplices, py::sequence sub, int degree, py::handle coefficients) {
        return group_to(cohomology(pair_from(simplices, sub), group_from(coefficients), degree));
      },
      py::arg("simplices"), py::arg("sub") = py::list(), py::arg("degree") = 0,
      py::arg("coefficients") = py::make_tuple(1, py::list()),
      "Relative simplicial cohomology of the pair generated by the given simplices.");

  m.def("list_fixtures", []() {
    py::list out;
    for (const Fixture& f : fixtures()) {
      py::dict d;
      d["name"] = f.name;
      d["summary"] = f.summary;
      d["compact"] = f.compact;
      d["default_depth"] = f.default_depth;
      d["table_source"] = f.table_source;
      out.append(d);
    }
    return out;
  });

  m.def(
      "functional_homology",
      [](const std::string& fixture_name, int degree, py::handle coefficients, py::object depth,
         int window) {
        return limit_to(functional_homology(build_fixture(fixture_name, depth),
                                            group_from(coefficients), degree, window));
      },
      py::arg("fixture"), py::arg("degree"),
      py::arg("coefficients") = py::make_tuple(1, py::list()), py::arg("depth") = py::none(),
      py::arg("window") = 2,
      "Functional homology limit of a bundled fixture's cover chain.");

  m.def(
      "functional_cohomology",
      [](const std::string& fixture_name, int degree, py::handle coefficients, py::object depth,
         int window) {
        return limit_to(functional_cohomology(build_fixture(fixture_name, depth),
                                              group_from(coefficients), degree, window));
      },
      py::arg("fixture"), py::arg("degree"),
      py::arg("coefficients") = py::make_tuple(1, py::list()), py::arg("depth") = py::none(),
      py::arg("window") = 2,
      "Functional cohomology limit of a bundled fixture's cover chain.");

  m.def(
      "eta",
      [](const std::string& fixture_name, py::handle coefficients, py::object depth, int window) {
        EtaResult e = eta(build_fixture(fixture_name, depth), group_from(coefficients), window);
        py::dict d;
        d["value"] = e.value;
        d["dimension_bound"] = e.dimension_bound;
        d["stabilized"] = e.stabilized;
        d["note"] = e.note;
        return d;
      },
      py::arg("fixture"), py::arg("coefficients") = py::make_tuple(1, py::list()),
      py::arg("depth") = py::none(), py::arg("window") = 2,
      "Functional coefficient of cyclicity of a bundled fixture.");

  m.def(
      "pair_check",
      [](const std::string& fixture_name, int lo, int hi, py::handle coefficients,
         py::object depth, int window) {
        PairSequenceVerdict v = pair_sequence_check(build_fixture(fixture_name, depth),
                                                    group_from(coefficients), lo, hi, window);
        py::dict d;
        d["pass"] = v.pass;
        d["homology_order_two"] = v.homology.order_two;
        d["cohomology_exact"] = v.cohomology.exact;
        d["all_stabilized"] = v.all_stabilized;
        py::list failures;
        for (const std::string& f : v.homology.failures) failures.append("homology: " + f);
        for (const std::string& f : v.cohomology.failures) failures.append("cohomology: " + f);
        d["failures"] = failures;
        return d;
      },
      py::arg("fixture"), py::arg("lo") = 0, py::arg("hi") = 2,
      py::arg("coefficients") = py::make_tuple(1, py::list()), py::arg("depth") = py::none(),
      py::arg("window") = 2,
      "Long-sequence check of the pair on a bundled fixture's chain.");

  m.def(
      "beta_check",
      [](const std::string& fixture_name, py::handle coefficients, py::object depth, int window) {
        const Fixture& f = fixture(fixture_name);
        FgAbGroup g = group_from(coefficients);
        BetaVerdict v = compact_beta_check(f.build(depth.is_none() ? f.default_depth
                                                                   : depth.cast<int>()),
                                           g, f.expected(g), window);
        py::dict d;
        d["pass"] = v.pass;
        py::list rows;
        for (const BetaRow& r : v.rows) {
          py::dict row;
          row["kind"] = r.kind;
          row["degree"] = r.degree;
          row["expected"] = r.expected.to_string();
          row["computed"] = r.computed.to_string();
          row["stabilized"] = r.stabilized;
          row["match"] = r.match;
          rows.append(row);
        }
        d["rows"] = rows;
        py::list notes;
        for (const std::string& n : v.notes) notes.append(n);
        d["notes"] = notes;
        return d;
      },
      py::arg("fixture"), py::arg("coefficients") = py::make_tuple(1, py::list()),
      py::arg("depth") = py::none(), py::arg("window") = 2,
      "Compares a compact fixture's functional groups with its registered table.");

  m.def(
      "run_job",
      [](const std::string& job_json) {
        cli::Json doc;
        try {
          doc = cli::Json::parse(job_json);
        } catch (const cli::Json::exception& e) {
          throw ParseError(std::string("job document: ") + e.what());
        }
        cli::Outcome res = cli::run(cli::parse_job(doc, "job"));
        py::dict d;
        d["exit_code"] = res.exit_code;
        d["report"] = res.machine.dump(2);
        d["text"] = res.text;
        return d;
      },
      py::arg("job_json"),
      "Runs a JSON job document (same schema as the command-line tool); returns the "
      "machine-readable report as a JSON string plus the exit code.");
}
