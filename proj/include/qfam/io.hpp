#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "qfam/algebra_matrix.hpp"
#include "qfam/family.hpp"
#include "qfam/semigroup.hpp"

// JSON documents for every object the command line consumes.
//
//   algebra     {"blocks": [2, 1]}
//   element     {"blocks": [[[[re, im], ...], ...], ...]}
//   functional  {"density": <element>}
//   morphism    {"domain": <algebra>, "codomain": <algebra>, "matrix": [[[re, im], ...], ...]}
//   family      {"source", "target_factor", "label", "morphism": <matrix>}
//               or {"classical_table": [[1, 1], [1, 2], ...]}  (lookup tables, 1-based)
//   semigroup   {"algebra", "delta_matrix", "counit"?: <1×d matrix>}
//               or {"kind": "semigroup", "classical_table": n×n table, 1-based}
//   magic       {"ambient": <algebra>, "entries": [[<element>, ...], ...]}
//
// Any document may carry "kind" to remove ambiguity; it is required for a
// semigroup given as a classical table, since a list of lookup tables and a
// multiplication table have the same shape.
namespace qfam::io {

using json = nlohmann::json;

enum class DocumentKind { algebra, element, functional, morphism, family, semigroup, magic };

std::string to_string(DocumentKind kind);

using Document = std::variant<Algebra, Element, LinearFunctional, StarMorphism, QuantumFamily,
                              QuantumSemigroup, AlgebraMatrix>;

DocumentKind kind_of(const Document& doc);

// Reads a JSON file. Syntax errors become ParseError with line and column.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

// Guesses the kind from "kind" or the fields present.
DocumentKind detect_kind(const json& doc);

Document parse_document(const json& doc);
Document parse_spec_file(const std::filesystem::path& path);

// Typed loaders. Each throws ParseError naming the offending field or row,
// or the library's own error when a structural invariant fails.
Algebra algebra_from_json(const json& doc);
Element element_from_json(const json& doc);
LinearFunctional functional_from_json(const json& doc);
StarMorphism morphism_from_json(const json& doc);
QuantumFamily family_from_json(const json& doc, double tol = kDefaultTol);
QuantumSemigroup semigroup_from_json(const json& doc);
AlgebraMatrix magic_from_json(const json& doc);
Matrix matrix_from_json(const json& doc, const std::string& field);

json to_json(const Algebra& algebra);
json to_json(const Element& x);
json to_json(const LinearFunctional& omega);
json to_json(const StarMorphism& phi);
json to_json(const QuantumFamily& psi);
json to_json(const QuantumSemigroup& s);
json to_json(const AlgebraMatrix& u);
json to_json(const Document& doc);
json matrix_to_json(const Matrix& m);
// Lookup or multiplication table as 1-based rows.
json table_to_json(const std::vector<std::vector<int>>& table);

}  // namespace qfam::io
