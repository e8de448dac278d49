#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cboom/boomerang.hpp"
#include "cboom/cli.hpp"
#include "cboom/dickson.hpp"
#include "cboom/io.hpp"
#include "cboom/tightness.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Round-trips through nlohmann so Python receives plain dicts and lists.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict uniformity(const std::string& field, const std::string& f, const std::string& c, const std::string& modulus,
                    std::uint64_t budget, unsigned threads, bool full_grid) {
  const cboom::FieldCtx ctx = cboom::parse_field(field, modulus);
  const cboom::UniPoly poly = cboom::parse_unipoly(ctx, f);
  cboom::UniformityReport rep;
  {
    py::gil_scoped_release release;
    rep = cboom::uniformity(poly, cboom::parse_element(ctx, c), {budget, threads, full_grid});
  }
  py::list wit;
  for (const cboom::Witness& w : rep.witnesses) wit.append(py::make_tuple(ctx.to_string(w.a), ctx.to_string(w.b)));
  py::dict d("beta"_a = rep.beta, "pass"_a = rep.pass, "witnesses"_a = wit);
  d["bound"] = rep.bound ? py::cast(rep.bound->value) : py::none();
  d["bound_source"] = rep.bound ? py::cast(rep.bound->source) : py::none();
  return d;
}

std::uint64_t bct_entry(const std::string& field, const std::string& f, const std::string& c, const std::string& a,
                        const std::string& b, const std::string& modulus) {
  const cboom::FieldCtx ctx = cboom::parse_field(field, modulus);
  return cboom::bct_entry(cboom::parse_unipoly(ctx, f), cboom::parse_element(ctx, c), cboom::parse_element(ctx, a),
                          cboom::parse_element(ctx, b));
}

std::vector<int> factor_degrees(const std::string& field, const std::string& f, const std::string& modulus,
                                std::uint64_t seed) {
  const cboom::FieldCtx ctx = cboom::parse_field(field, modulus);
  return cboom::factor(cboom::parse_unipoly(ctx, f), seed).degree_multiset();
}

std::string dickson(const std::string& field, unsigned n, const std::string& a, const std::string& modulus) {
  const cboom::FieldCtx ctx = cboom::parse_field(field, modulus);
  return cboom::dickson(n, cboom::parse_element(ctx, a), ctx).to_string();
}

py::tuple run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cboom");
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cboom::cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<cboom::Error>(m, "CboomError", PyExc_ValueError);

  m.def("uniformity", &uniformity, "field"_a, "f"_a, "c"_a, "modulus"_a = "", "budget"_a = 512, "threads"_a = 0,
        "full_grid"_a = false);
  m.def("bct_entry", &bct_entry, "field"_a, "f"_a, "c"_a, "a"_a, "b"_a, "modulus"_a = "");
  m.def("factor_degrees", &factor_degrees, "field"_a, "f"_a, "modulus"_a = "", "seed"_a = 0);
  m.def("dickson", &dickson, "field"_a, "n"_a, "a"_a = "0", "modulus"_a = "");
  m.def("applicable_bound", [](int d, const std::string& field, const std::string& c) -> py::object {
    const cboom::FieldCtx ctx = cboom::parse_field(field, "");
    try {
      const cboom::Bound b = cboom::applicable_bound(d, cboom::parse_element(ctx, c), ctx);
      return py::make_tuple(b.value, b.source);
    } catch (const cboom::Error& e) {
      if (e.kind() != cboom::ErrorKind::NoBound) throw;
      return py::none();
    }
  }, "d"_a, "field"_a, "c"_a);
  m.def("fixture_names", &cboom::fixture_names);
  m.def("verify_fixture", [](const std::string& name, std::uint64_t seed) {
    cboom::FixtureReport rep;
    {
      py::gil_scoped_release release;
      rep = cboom::run_fixture(name, seed);
    }
    return to_py(rep.to_json());
  }, "name"_a, "seed"_a = 0);
  m.def("run_cli", &run_cli, "args"_a, "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
