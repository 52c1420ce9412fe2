#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qfam/cli.hpp"
#include "qfam/corpus.hpp"
#include "qfam/errors.hpp"
#include "qfam/io.hpp"
#include "qfam/representation.hpp"
#include "qfam/suites.hpp"

namespace py = pybind11;
using namespace qfam;

namespace {

// Reports and documents cross the boundary as JSON text; the Python side
// turns them into dicts.
std::string dump(const nlohmann::json& j) { return j.dump(); }

std::string check(const std::string& command, const std::vector<std::string>& inputs, double tol,
                  std::uint64_t seed, const std::string& suite) {
  cli::CheckRequest req;
  req.command = command;
  req.inputs = inputs;
  req.tol = tol;
  req.seed = seed;
  req.suite = suite;
  return dump(report_to_json(cli::run_command(req)));
}

py::dict defects_of(const StarMorphism& phi) {
  const DefectReport& d = phi.defects();
  py::dict out;
  out["mult"] = d.mult;
  out["star"] = d.star;
  out["unit"] = d.unit;
  out["max"] = d.max();
  return out;
}

py::dict magic_dict(const MagicReport& m) {
  py::dict out;
  out["pass"] = m.pass;
  out["idempotent"] = m.idempotent;
  out["selfadjoint"] = m.selfadjoint;
  out["row_sum"] = m.row_sum;
  out["column_sum"] = m.column_sum;
  out["max_commutator"] = m.max_commutator;
  return out;
}

py::dict rank_dict(const RankReport& r) {
  py::dict out;
  out["rank"] = r.rank;
  out["ambient"] = r.ambient;
  out["full"] = r.full;
  return out;
}

Side side_from(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("side: expected left or right, got '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_qfam, m) {
  m.doc() = "Finite-dimensional quantum families of maps: checks and examples.";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::register_exception<Error>(m, "QfamError", PyExc_ValueError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line front-end; returns (exit_code, stdout, stderr).");

  m.def("check_json", &check, py::arg("command"), py::arg("inputs") = std::vector<std::string>{},
        py::arg("tol") = kDefaultTol, py::arg("seed") = 0, py::arg("suite") = "all");

  m.def("run_suite_json", [](const std::string& name, std::uint64_t seed) {
    return dump(report_to_json(suites::run_suite(name, seed)));
  }, py::arg("name") = "all", py::arg("seed") = 0);

  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (const auto& s : suites::registry()) names.push_back(s.name);
    return names;
  });

  m.def("parse_json", [](const std::string& text) {
    return dump(io::to_json(io::parse_document(nlohmann::json::parse(text))));
  }, py::arg("text"), "Parse a document and return its canonical serialization.");

  m.def("morphism_defects", [](const std::vector<int>& domain, const std::vector<int>& codomain,
                               const Matrix& matrix) {
    return defects_of(StarMorphism(Algebra(domain), Algebra(codomain), matrix));
  }, py::arg("domain_blocks"), py::arg("codomain_blocks"), py::arg("matrix"));

  m.def("set_map_tables", [](int n) { return enumerate_set_map_tables(n); }, py::arg("n"));

  m.def("magic_check", [](double theta) {
    return magic_dict(magic_unitary_check(nonclassical_magic_4x4(theta).unitary));
  }, py::arg("theta"));

  m.def("permutation_magic_check", [](const std::vector<int>& perm) {
    return magic_dict(magic_unitary_check(permutation_magic(perm)));
  }, py::arg("perm"));

  m.def("cancellation_rank", [](const MultiplicationTable& table, const std::string& side) {
    return rank_dict(cancellation_rank(classical_semigroup_algebra(table), side_from(side)));
  }, py::arg("table"), py::arg("side") = "left");

  m.def("coassociativity_defect", [](const MultiplicationTable& table) {
    return coassociativity_defect(classical_semigroup_algebra(table));
  }, py::arg("table"));

  m.def("wang_podles_rank", [](double theta) {
    return rank_dict(podles_rank(wang_family(nonclassical_magic_4x4(theta).unitary)));
  }, py::arg("theta"));
}
