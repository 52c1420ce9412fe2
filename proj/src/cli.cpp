#include "qfam/cli.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "qfam/corpus.hpp"
#include "qfam/io.hpp"
#include "qfam/representation.hpp"
#include "qfam/suites.hpp"

namespace qfam::cli {

namespace {

using io::json;

void require_inputs(const CheckRequest& req, std::size_t lo, std::size_t hi) {
  const auto n = req.inputs.size();
  if (n < lo || n > hi) {
    std::string want = std::to_string(lo);
    if (hi != lo) want += hi == static_cast<std::size_t>(-1) ? " or more" : "-" + std::to_string(hi);
    throw ParseError(req.command + ": expected " + want + " input document(s), got " +
                     std::to_string(n));
  }
}

json load(const std::string& path) { return io::read_json_file(path); }

// Loader errors other than ParseError keep their own kind but gain the path.
template <typename F>
auto load_as(const std::string& path, F&& loader) {
  const json doc = load(path);
  try {
    return loader(doc);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

QuantumFamily load_family(const std::string& path, double tol) {
  return load_as(path, [&](const json& d) { return io::family_from_json(d, tol); });
}
QuantumSemigroup load_semigroup(const std::string& path) {
  return load_as(path, [](const json& d) { return io::semigroup_from_json(d); });
}
LinearFunctional load_functional(const std::string& path) {
  return load_as(path, [](const json& d) { return io::functional_from_json(d); });
}

void morphism_checks(CheckReport& r, const StarMorphism& phi, double tol, const std::string& prefix) {
  const DefectReport& d = phi.defects();
  r.checks.push_back(defect_check(prefix + "multiplicativity", d.mult, tol));
  r.checks.push_back(defect_check(prefix + "star", d.star, tol));
  r.checks.push_back(defect_check(prefix + "unit", d.unit, tol));
}

CheckReport verify_hom(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const StarMorphism phi =
      load_as(req.inputs[0], [](const json& d) { return io::morphism_from_json(d); });
  morphism_checks(r, phi, req.tol, "");
  return r;
}

CheckReport compose(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 2, 3);
  std::vector<QuantumFamily> fs;
  for (const auto& p : req.inputs) fs.push_back(load_family(p, req.tol));
  const QuantumFamily composite = compose_families(fs[0], fs[1]);
  morphism_checks(r, composite.morphism(), req.tol, "composite-");
  CheckResult shape = verdict("composite-shape", true,
                              composite.source().to_string() + " -> " +
                                  composite.target_factor().to_string() + " (x) " +
                                  composite.label().to_string());
  r.checks.push_back(std::move(shape));
  if (fs.size() == 3) {
    const QuantumFamily left = compose_families(composite, fs[2]);
    const QuantumFamily right = compose_families(fs[0], compose_families(fs[1], fs[2]));
    const double d =
        basis_defect(left.morphism(), with_codomain(right.morphism(), left.morphism().codomain()));
    r.checks.push_back(defect_check("associativity", d, req.tol));
  }
  if (!req.out.empty()) io::write_json_file(req.out, io::to_json(composite));
  return r;
}

CheckReport check_invariant(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 2, 2);
  const QuantumFamily psi = load_family(req.inputs[0], req.tol);
  const LinearFunctional omega = load_functional(req.inputs[1]);
  require_same_algebra(omega.algebra(), psi.source(), "functional");
  if (!psi.is_self_map()) throw IncompatibleAlgebra("check-invariant needs a self-map family");
  const bool state = omega.is_state(req.tol);
  r.checks.push_back(verdict("hypothesis-state", state,
                             state ? "functional is a state"
                                   : "hypothesis violated: functional is not a state"));
  const InvarianceReport inv = invariance_defects(psi, omega);
  CheckResult c = defect_check("invariance", inv.defect, req.tol);
  c.details["generators_basis"] = inv.orthonormal_basis ? "orthonormal" : "canonical";
  r.checks.push_back(std::move(c));
  return r;
}

CheckReport check_commute(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 2, 2);
  const QuantumFamily b = load_family(req.inputs[0], req.tol);
  const QuantumFamily c = load_family(req.inputs[1], req.tol);
  r.checks.push_back(defect_check("commutation", commutation_defect(b, c), req.tol));
  return r;
}

CheckReport check_coassoc(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const QuantumSemigroup s = load_semigroup(req.inputs[0]);
  r.checks.push_back(defect_check("coassociativity", coassociativity_defect(s), req.tol));
  return r;
}

CheckReport check_counit(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const QuantumSemigroup s = load_semigroup(req.inputs[0]);
  r.checks.push_back(defect_check("counit", counit_defect(s), req.tol));
  return r;
}

CheckReport check_action(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 2, 2);
  const QuantumFamily psi = load_family(req.inputs[0], req.tol);
  const QuantumSemigroup s = load_semigroup(req.inputs[1]);
  r.checks.push_back(defect_check("action", action_defect(psi, s), req.tol));
  return r;
}

CheckReport check_magic(const CheckRequest& req, CheckReport r) {
  AlgebraMatrix u = [&] {
    if (req.theta) {
      require_inputs(req, 0, 0);
      const NonclassicalMagic nc = nonclassical_magic_4x4(*req.theta);
      r.provenance.push_back("builtin:nonclassical-magic-4x4");
      if (nc.degenerate) {
        r.checks.push_back(verdict("theta-interior", true,
                                   "warning: theta outside (0, pi/2), entries commute"));
      }
      return nc.unitary;
    }
    require_inputs(req, 1, 1);
    return load_as(req.inputs[0], [](const json& d) { return io::magic_from_json(d); });
  }();
  const MagicReport m = magic_unitary_check(u, req.tol);
  r.checks.push_back(defect_check("idempotent", m.idempotent, req.tol));
  r.checks.push_back(defect_check("selfadjoint", m.selfadjoint, req.tol));
  r.checks.push_back(defect_check("row-sums", m.row_sum, req.tol));
  r.checks.push_back(defect_check("column-sums", m.column_sum, req.tol));
  CheckResult comm = verdict("max-commutator", true, format_defect(m.max_commutator));
  comm.details["max_commutator"] = m.max_commutator;
  r.checks.push_back(std::move(comm));
  return r;
}

CheckReport check_cancellation(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const QuantumSemigroup s = load_semigroup(req.inputs[0]);
  std::vector<Side> sides;
  if (req.side == "left" || req.side == "both") sides.push_back(Side::left);
  if (req.side == "right" || req.side == "both") sides.push_back(Side::right);
  if (sides.empty()) throw ParseError("--side: expected left, right or both");
  for (Side side : sides) {
    const RankReport rank = cancellation_rank(s, side);
    const std::string name = side == Side::left ? "left" : "right";
    CheckResult c = verdict(name + "-cancellation", rank.full,
                            "rank " + std::to_string(rank.rank) + "/" + std::to_string(rank.ambient));
    c.details["rank"] = rank.rank;
    c.details["ambient"] = rank.ambient;
    r.checks.push_back(std::move(c));
  }
  return r;
}

CheckReport check_modular(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 2, 2);
  const QuantumFamily phi = load_family(req.inputs[0], req.tol);
  const LinearFunctional omega = load_functional(req.inputs[1]);
  require_same_algebra(omega.algebra(), phi.source(), "functional");
  try {
    const ModularReport m = modular_compatibility(phi, omega, req.tol);
    r.checks.push_back(verdict("hypotheses", true, "faithful invariant state"));
    r.checks.push_back(defect_check("modular-identity", m.defect, req.tol));
    r.checks.push_back(defect_check("left-invertibility", m.left_inverse_defect,
                                    std::max(req.tol, 1e-8)));
  } catch (const PreconditionViolated& e) {
    r.checks.push_back(verdict("hypotheses", false, std::string("hypothesis violated: ") + e.what()));
  }
  return r;
}

CheckReport check_podles(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const QuantumFamily phi = load_family(req.inputs[0], req.tol);
  const RankReport rank = podles_rank(phi);
  CheckResult c = verdict("density", rank.full,
                          "rank " + std::to_string(rank.rank) + "/" + std::to_string(rank.ambient));
  c.details["rank"] = rank.rank;
  c.details["ambient"] = rank.ambient;
  r.checks.push_back(std::move(c));
  return r;
}

CheckReport enumerate_classical(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 0, 0);
  const auto tables = enumerate_set_map_tables(req.n);
  long long expected = 1;
  long long factorial = 1;
  for (int i = 1; i <= req.n; ++i) {
    expected *= req.n;
    factorial *= i;
  }
  r.checks.push_back(value_check("count", static_cast<long long>(tables.size()), expected));
  double worst = 0.0;
  long long automorphisms = 0;
  json listing = json::array();
  for (const auto& t : tables) {
    const StarMorphism phi = set_map_morphism(t);
    worst = std::max(worst, phi.defects().max());
    std::vector<bool> seen(t.size(), false);
    bool bijective = true;
    for (int v : t) {
      bijective = bijective && !seen[static_cast<std::size_t>(v)];
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (bijective) ++automorphisms;
    json row = json::array();
    for (int v : t) row.push_back(v + 1);
    listing.push_back(std::move(row));
  }
  r.checks.push_back(defect_check("max-morphism-defect", worst, req.tol));
  CheckResult autos = value_check("automorphisms", automorphisms, factorial);
  autos.details["lookup_tables"] = std::move(listing);
  r.checks.push_back(std::move(autos));
  if (!req.out.empty()) {
    io::write_json_file(req.out, json{{"kind", "family"}, {"classical_table", io::table_to_json(tables)}});
  }
  return r;
}

CheckReport export_command(const CheckRequest& req, CheckReport r) {
  require_inputs(req, 1, 1);
  const auto files = export_corpus(req.inputs[0]);
  r.checks.push_back(verdict("written", true, std::to_string(files.size()) + " documents"));
  for (const auto& f : files) r.provenance.push_back(f);
  return r;
}

using Handler = CheckReport (*)(const CheckRequest&, CheckReport);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"verify-hom", verify_hom},
      {"compose", compose},
      {"check-invariant", check_invariant},
      {"check-commute", check_commute},
      {"check-coassoc", check_coassoc},
      {"check-counit", check_counit},
      {"check-action", check_action},
      {"check-magic", check_magic},
      {"check-cancellation", check_cancellation},
      {"check-modular", check_modular},
      {"check-podles", check_podles},
      {"enumerate-classical", enumerate_classical},
      {"export-corpus", export_command},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "verify-hom",    "compose",          "check-invariant", "check-commute",
      "check-coassoc", "check-counit",     "check-action",    "check-magic",
      "check-cancellation", "check-modular", "check-podles",  "enumerate-classical",
      "run-suite",     "export-corpus"};
  return names;
}

CheckReport run_command(const CheckRequest& request) {
  if (!(request.tol > 0.0) || !std::isfinite(request.tol)) {
    throw ParseError("--tol: must be a positive real");
  }
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  if (request.command == "run-suite") {
    r = suites::run_suite(request.suite, request.seed);
  } else {
    const auto it = handlers().find(request.command);
    if (it == handlers().end()) throw ParseError("unknown command \"" + request.command + "\"");
    CheckReport base;
    base.command = request.command;
    base.inputs = request.inputs;
    base.tol = request.tol;
    r = it->second(request, std::move(base));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::string> export_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, json>> docs;
  const Algebra m2({2});
  const Algebra c2 = commutative_algebra(2);

  docs.emplace_back("algebra-M2+C.json", io::to_json(Algebra({2, 1})));
  docs.emplace_back("state-rho-third.json",
                    io::to_json(corpus::diagonal_state(m2, {1.0 / 3.0, 2.0 / 3.0})));
  docs.emplace_back("state-trace-M2.json", io::to_json(normalized_trace(m2)));
  docs.emplace_back("state-uniform-C2.json", io::to_json(normalized_trace(c2)));
  docs.emplace_back("state-uniform-C4.json", io::to_json(normalized_trace(commutative_algebra(4))));
  docs.emplace_back("functional-not-state-C2.json",
                    io::to_json(corpus::diagonal_state(c2, {1.5, -0.5})));

  Matrix transpose = Matrix::Zero(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) transpose(m2.basis_index(0, s, r), m2.basis_index(0, r, s)) = 1.0;
  docs.emplace_back("morphism-transpose-M2.json", io::to_json(StarMorphism(m2, m2, transpose)));
  Matrix diag = Matrix::Zero(4, 2);
  diag(m2.basis_index(0, 0, 0), 0) = 1.0;
  diag(m2.basis_index(0, 1, 1), 1) = 1.0;
  docs.emplace_back("morphism-diagonal-C2-M2.json", io::to_json(StarMorphism(c2, m2, diag)));

  docs.emplace_back("family-all-maps-C2.json",
                    json{{"kind", "family"},
                         {"classical_table", io::table_to_json(enumerate_set_map_tables(2))}});
  docs.emplace_back("family-z2-conjugation.json", io::to_json(corpus::z2_conjugation_family()));
  docs.emplace_back("family-translations-C3.json", io::to_json(corpus::translation_family(3)));
  docs.emplace_back("family-trivial-M2.json", io::to_json(trivial_family(m2, c2)));
  docs.emplace_back("family-wang-nonclassical.json",
                    io::to_json(wang_family(nonclassical_magic_4x4(0.7).unitary)));

  docs.emplace_back("semigroup-map2.json",
                    json{{"kind", "semigroup"},
                         {"classical_table", io::table_to_json(corpus::map_monoid_table(2))}});
  docs.emplace_back("semigroup-Z2.json",
                    json{{"kind", "semigroup"},
                         {"classical_table", io::table_to_json(corpus::cyclic_group_table(2))}});
  docs.emplace_back("semigroup-Z3.json",
                    json{{"kind", "semigroup"},
                         {"classical_table", io::table_to_json(corpus::cyclic_group_table(3))}});
  docs.emplace_back("semigroup-left-zero-2.json",
                    json{{"kind", "semigroup"},
                         {"classical_table", io::table_to_json(corpus::left_zero_table(2))}});

  docs.emplace_back("magic-nonclassical-0.7.json", io::to_json(nonclassical_magic_4x4(0.7).unitary));
  docs.emplace_back("magic-permutation-231.json", io::to_json(permutation_magic({1, 2, 0})));
  const Element p = Element::matrix_unit(c2, 0);
  const Element q = Element::identity(c2) - p;
  docs.emplace_back("magic-column-fault.json", io::to_json(AlgebraMatrix(c2, 2, {p, q, p, q})));

  std::vector<std::string> names;
  for (const auto& [name, doc] : docs) {
    io::write_json_file(dir / name, doc);
    names.push_back(name);
  }
  return names;
}

namespace {

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> text = {
      {"verify-hom", "MORPHISM: multiplicativity, star and unit defects"},
      {"compose", "FAMILY FAMILY [FAMILY]: compose, with an associativity check for three"},
      {"check-invariant", "FAMILY FUNCTIONAL: invariance of a state"},
      {"check-commute", "FAMILY FAMILY: commutation of two families"},
      {"check-coassoc", "SEMIGROUP: coassociativity of the comultiplication"},
      {"check-counit", "SEMIGROUP: counit laws"},
      {"check-action", "FAMILY SEMIGROUP: action equation"},
      {"check-magic", "MAGIC | --theta T: magic unitary axioms and commutator size"},
      {"check-cancellation", "SEMIGROUP: left/right cancellation ranks"},
      {"check-modular", "FAMILY STATE: modular compatibility of the action matrix"},
      {"check-podles", "FAMILY: density of the span of Phi(M)(I (x) B)"},
      {"enumerate-classical", "list every self-map of an n-point set"},
      {"run-suite", "run a named verification battery"},
      {"export-corpus", "DIR: write the built-in example documents"},
  };
  return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for quantum families of maps on finite quantum spaces", "qfam"};
  app.require_subcommand(1);
  CheckRequest req;
  std::string format = "text";
  app.add_option("--tol", req.tol, "absolute tolerance for pass/fail")->capture_default_str();
  app.add_option("--seed", req.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, descriptions().at(name));
    sub->fallthrough();
    if (name == "run-suite") {
      sub->add_option("--suite", req.suite, "suite name or 'all'")->capture_default_str();
    } else if (name == "enumerate-classical") {
      sub->add_option("--n", req.n, "number of points")->capture_default_str();
      sub->add_option("--out", req.out, "write the all-maps family document here");
    } else {
      sub->add_option("inputs", req.inputs, "input documents");
    }
    if (name == "check-magic") sub->add_option("--theta", req.theta, "use nonclassical_magic_4x4(theta)");
    if (name == "check-cancellation") {
      sub->add_option("--side", req.side, "left, right or both")
          ->check(CLI::IsMember({"left", "right", "both"}))
          ->capture_default_str();
    }
    if (name == "compose") sub->add_option("--out", req.out, "write the composite family here");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  for (const auto* sub : app.get_subcommands()) req.command = sub->get_name();
  req.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;

  try {
    const CheckReport report = run_command(req);
    emit_report(report, req.format, out);
    return report.exit_code();
  } catch (const Error& e) {
    err << "error [" << e.kind() << "]: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace qfam::cli
