#include "qfam/io.hpp"

#include <fstream>
#include <sstream>

namespace qfam::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& doc, const char* name, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  const auto it = doc.find(name);
  if (it == doc.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

std::string sub(const std::string& where, const std::string& name) {
  return where.empty() ? name : where + "." + name;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

Complex complex_from_json(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(where, "expected a number or a [re, im] pair");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Matrix matrix_at(const json& doc, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected an array of rows");
  const std::size_t rows = doc.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!doc[r].is_array()) fail(at(where, r), "row is not an array");
    if (r == 0) cols = doc[r].size();
    if (doc[r].size() != cols) {
      fail(at(where, r), "row has " + std::to_string(doc[r].size()) + " entries, expected " +
                             std::to_string(cols));
    }
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(doc[r][c], at(at(where, r), c));
    }
  }
  return m;
}

Algebra algebra_at(const json& doc, const std::string& where) {
  const json& blocks = field(doc, "blocks", where);
  if (!blocks.is_array()) fail(sub(where, "blocks"), "expected a list of block sizes");
  std::vector<int> dims;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_number_integer()) fail(at(sub(where, "blocks"), i), "expected an integer");
    dims.push_back(blocks[i].get<int>());
  }
  return make_algebra(std::move(dims));
}

Element element_at(const json& doc, const std::string& where) {
  const json& blocks = field(doc, "blocks", where);
  if (!blocks.is_array() || blocks.empty()) fail(sub(where, "blocks"), "expected a list of matrices");
  std::vector<int> dims;
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string here = at(sub(where, "blocks"), k);
    Matrix m = matrix_at(blocks[k], here);
    if (m.rows() != m.cols() || m.rows() == 0) fail(here, "block is not a nonempty square matrix");
    dims.push_back(static_cast<int>(m.rows()));
    mats.push_back(std::move(m));
  }
  Algebra alg(std::move(dims));
  if (doc.contains("algebra")) {
    const Algebra declared = algebra_at(doc["algebra"], sub(where, "algebra"));
    if (!(declared == alg)) fail(sub(where, "algebra"), "does not match the block shapes");
  }
  return Element(std::move(alg), std::move(mats));
}

StarMorphism morphism_at(const json& doc, const std::string& where) {
  Algebra domain = algebra_at(field(doc, "domain", where), sub(where, "domain"));
  Algebra codomain = algebra_at(field(doc, "codomain", where), sub(where, "codomain"));
  Matrix m = matrix_at(field(doc, "matrix", where), sub(where, "matrix"));
  return StarMorphism(std::move(domain), std::move(codomain), std::move(m));
}

std::vector<std::vector<int>> table_at(const json& doc, const std::string& where) {
  if (!doc.is_array() || doc.empty()) fail(where, "expected a nonempty list of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const std::string here = at(where, r);
    if (!doc[r].is_array()) fail(here, "row is not an array");
    std::vector<int> row;
    for (std::size_t c = 0; c < doc[r].size(); ++c) {
      if (!doc[r][c].is_number_integer()) fail(at(here, c), "expected a positive integer");
      const int v = doc[r][c].get<int>();
      if (v < 1) fail(at(here, c), "entries are 1-based");
      row.push_back(v - 1);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::algebra: return "algebra";
    case DocumentKind::element: return "element";
    case DocumentKind::functional: return "functional";
    case DocumentKind::morphism: return "morphism";
    case DocumentKind::family: return "family";
    case DocumentKind::semigroup: return "semigroup";
    case DocumentKind::magic: return "magic";
  }
  return "unknown";
}

DocumentKind kind_of(const Document& doc) { return static_cast<DocumentKind>(doc.index()); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON");
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
}

DocumentKind detect_kind(const json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected an object");
  if (const auto it = doc.find("kind"); it != doc.end()) {
    const std::string k = it->is_string() ? it->get<std::string>() : "";
    for (auto kind : {DocumentKind::algebra, DocumentKind::element, DocumentKind::functional,
                      DocumentKind::morphism, DocumentKind::family, DocumentKind::semigroup,
                      DocumentKind::magic}) {
      if (k == to_string(kind)) return kind;
    }
    throw ParseError("kind: unknown document kind \"" + k + "\"");
  }
  if (doc.contains("density")) return DocumentKind::functional;
  if (doc.contains("delta_matrix")) return DocumentKind::semigroup;
  if (doc.contains("ambient") || doc.contains("entries")) return DocumentKind::magic;
  if (doc.contains("classical_table") || doc.contains("source")) return DocumentKind::family;
  if (doc.contains("matrix") || doc.contains("domain")) return DocumentKind::morphism;
  if (const auto it = doc.find("blocks"); it != doc.end()) {
    if (it->is_array() && !it->empty() && (*it)[0].is_array()) return DocumentKind::element;
    return DocumentKind::algebra;
  }
  throw ParseError("document: cannot tell what kind of object this is; add a \"kind\" field");
}

Document parse_document(const json& doc) {
  switch (detect_kind(doc)) {
    case DocumentKind::algebra: return algebra_from_json(doc);
    case DocumentKind::element: return element_from_json(doc);
    case DocumentKind::functional: return functional_from_json(doc);
    case DocumentKind::morphism: return morphism_from_json(doc);
    case DocumentKind::family: return family_from_json(doc);
    case DocumentKind::semigroup: return semigroup_from_json(doc);
    case DocumentKind::magic: return magic_from_json(doc);
  }
  throw ParseError("document: unreachable kind");
}

Document parse_spec_file(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return parse_document(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Algebra algebra_from_json(const json& doc) { return algebra_at(doc, ""); }
Element element_from_json(const json& doc) { return element_at(doc, ""); }

LinearFunctional functional_from_json(const json& doc) {
  return LinearFunctional(element_at(field(doc, "density", ""), "density"));
}

StarMorphism morphism_from_json(const json& doc) { return morphism_at(doc, ""); }

Matrix matrix_from_json(const json& doc, const std::string& where) { return matrix_at(doc, where); }

QuantumFamily family_from_json(const json& doc, double tol) {
  if (doc.is_object() && doc.contains("classical_table")) {
    return classical_family(table_at(doc["classical_table"], "classical_table"));
  }
  Algebra source = algebra_at(field(doc, "source", ""), "source");
  Algebra target = algebra_at(field(doc, "target_factor", ""), "target_factor");
  Algebra label = algebra_at(field(doc, "label", ""), "label");
  Matrix m = matrix_at(field(doc, "morphism", ""), "morphism");
  const TensorLayout layout(target, label);
  return make_family(source, target, label, StarMorphism(source, layout.product(), std::move(m)),
                     tol);
}

QuantumSemigroup semigroup_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("classical_table")) {
    return classical_semigroup_algebra(table_at(doc["classical_table"], "classical_table"));
  }
  Algebra alg = algebra_at(field(doc, "algebra", ""), "algebra");
  const TensorLayout aa(alg, alg);
  Matrix delta = matrix_at(field(doc, "delta_matrix", ""), "delta_matrix");
  std::optional<StarMorphism> counit;
  if (doc.contains("counit")) {
    counit = StarMorphism(alg, scalars(), matrix_at(doc["counit"], "counit"));
  }
  return QuantumSemigroup(alg, StarMorphism(alg, aa.product(), std::move(delta)),
                          std::move(counit));
}

AlgebraMatrix magic_from_json(const json& doc) {
  Algebra ambient = algebra_at(field(doc, "ambient", ""), "ambient");
  const json& rows = field(doc, "entries", "");
  if (!rows.is_array() || rows.empty()) fail("entries", "expected a nonempty list of rows");
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string here = at("entries", i);
    if (!rows[i].is_array()) fail(here, "row is not an array");
    if (rows[i].size() != n) {
      fail(here, "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                     std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      Element x = element_at(rows[i][j], at(here, j));
      if (!(x.algebra() == ambient)) fail(at(here, j), "entry does not live in the ambient algebra");
      entries.push_back(std::move(x));
    }
  }
  return AlgebraMatrix(std::move(ambient), static_cast<int>(n), std::move(entries));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json table_to_json(const std::vector<std::vector<int>>& t) {
  json rows = json::array();
  for (const auto& r : t) {
    json row = json::array();
    for (int v : r) row.push_back(v + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Algebra& algebra) { return json{{"blocks", algebra.block_dims()}}; }

json to_json(const Element& x) {
  json blocks = json::array();
  for (const auto& b : x.blocks()) blocks.push_back(matrix_to_json(b));
  return json{{"blocks", std::move(blocks)}};
}

json to_json(const LinearFunctional& omega) {
  return json{{"kind", "functional"}, {"density", to_json(omega.density())}};
}

json to_json(const StarMorphism& phi) {
  return json{{"kind", "morphism"},
              {"domain", to_json(phi.domain())},
              {"codomain", to_json(phi.codomain())},
              {"matrix", matrix_to_json(phi.matrix())}};
}

json to_json(const QuantumFamily& psi) {
  return json{{"kind", "family"},
              {"source", to_json(psi.source())},
              {"target_factor", to_json(psi.target_factor())},
              {"label", to_json(psi.label())},
              {"morphism", matrix_to_json(psi.morphism().matrix())}};
}

json to_json(const QuantumSemigroup& s) {
  json doc{{"kind", "semigroup"},
           {"algebra", to_json(s.algebra())},
           {"delta_matrix", matrix_to_json(s.comultiplication().matrix())}};
  if (s.counit()) doc["counit"] = matrix_to_json(s.counit()->matrix());
  return doc;
}

json to_json(const AlgebraMatrix& u) {
  json rows = json::array();
  for (int i = 0; i < u.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < u.size(); ++j) row.push_back(to_json(u(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "magic"}, {"ambient", to_json(u.algebra())}, {"entries", std::move(rows)}};
}

json to_json(const Document& doc) {
  return std::visit([](const auto& x) { return to_json(x); }, doc);
}

}  // namespace qfam::io
