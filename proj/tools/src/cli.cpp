#include "wittorders_tools/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wittorders/errors.hpp"
#include "wittorders/lifting.hpp"
#include "wittorders_tools/fixtures.hpp"
#include "wittorders_tools/io.hpp"

namespace wittorders::cli {

namespace {

using io::Json;

struct Outcome {
  int code = kOk;
  std::string status = "ok";
  Json result = Json::object();
};

Outcome rejected(Json result) { return {kRejected, "rejected", std::move(result)}; }

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return io::parse(buffer.str());
}

Outcome witt_command(std::uint64_t p, std::size_t n, std::size_t deg,
                     const std::vector<std::uint64_t>& modulus, const std::string& op,
                     const Guards& guards) {
  const FiniteField field(p, deg, modulus);
  const WittRing ring(field, n, guards.max_monomials);
  const CoefficientRing scalars(field, n);
  Outcome out;
  out.result["ring"] = io::ring_to_json(scalars);
  out.result["op"] = op;
  if (op == "polys") {
    out.result["polynomials"] = io::witt_table_to_json(ring.polynomials());
    return out;
  }
  const std::uint64_t size = ring.cardinality();
  if (size * size > guards.max_candidates) {
    throw CostGuardExceeded("table size exceeds max-candidates");
  }
  auto witt_json = [&](const WittVector& w) { return io::scalar_to_json(scalars, scalars.from_witt(w)); };
  Json rows = Json::array();
  for (std::uint64_t a = 0; a < size; ++a) {
    const WittVector u = ring.element(a);
    if (op == "inverse") {
      if (ring.is_unit(u)) rows.push_back({witt_json(u), witt_json(ring.inv(u))});
    } else if (op == "oracle") {
      rows.push_back({witt_json(u), ring.padic_oracle(u)});
    } else {
      for (std::uint64_t b = 0; b < size; ++b) {
        const WittVector v = ring.element(b);
        const WittVector w = op == "add" ? ring.add(u, v) : ring.mul(u, v);
        rows.push_back({witt_json(u), witt_json(v), witt_json(w)});
      }
    }
  }
  out.result["table"] = rows;
  return out;
}

Outcome algebra_validate(const Json& doc, const Guards& guards) {
  Outcome out;
  try {
    const AlgebraPtr a = io::algebra_from_json(doc, guards);
    out.result = {{"valid", true},
                  {"rank", a->rank()},
                  {"commutative", a->is_commutative()},
                  {"centre_generators", a->center_generators().size()},
                  {"separable_ambient", a->separable_ambient()}};
  } catch (const AssociativityViolation& e) {
    return rejected({{"valid", false}, {"reason", e.what()}, {"witness", e.witness}});
  } catch (const IdentityViolation& e) {
    return rejected({{"valid", false}, {"reason", e.what()}, {"witness", e.index}});
  }
  return out;
}

Outcome morphism_check(const Json& doc, const Guards& guards) {
  const Morphism m = io::morphism_from_json(doc, guards);
  const MapCheck check = check_automorphism(*m.algebra, m.matrix);
  Json result = {{"certified", check.ok() ? "automorphism" : "rejected"},
                 {"check", io::map_check_to_json(check)}};
  if (doc.contains("o_linearity")) {
    OLinearityData o;
    const std::size_t r = m.algebra->rank();
    for (const auto& g : doc.at("o_linearity")) {
      o.generators.push_back(io::matrix_from_json(m.algebra->ring(), g, r, r));
    }
    const OLinearityCheck linear = check_o_linear(m.algebra->ring(), m.matrix, o);
    result["o_linear"] = {{"ok", linear.ok}};
    if (linear.witness) result["o_linear"]["witness"] = *linear.witness;
    if (!linear.ok) return rejected(result);
  }
  if (!check.ok()) return rejected(result);
  return {kOk, "ok", result};
}

Outcome lift_command(const Json& doc, std::size_t s, std::size_t target, const Guards& guards) {
  const Morphism beta = io::morphism_from_json(doc, guards);
  try {
    const LiftTrace trace = higman_lift(beta, {s, target, 64});
    Outcome out;
    out.result = io::lift_trace_to_json(trace);
    if (!trace.certified || !trace.agrees_with_beta) {
      out.code = kRejected;
      out.status = "rejected";
    }
    return out;
  } catch (const DepthViolation& e) {
    return rejected({{"reason", e.what()}, {"error", "DepthViolation"}});
  }
}

Outcome crossed_build(const Json& doc, const Guards& guards) {
  const ParameterSet p = io::parameter_set_from_json(doc, guards);
  const ParameterCheck check = validate_parameter_set(p);
  if (!check.ok()) return rejected({{"validation", io::parameter_check_to_json(check)}});
  const CrossedProduct cp = build_crossed_product(p, guards);
  const CoefficientRing& ring = p.ring->ring();
  Json units = Json::array();
  for (const auto& u : cp.units) units.push_back(io::vector_to_json(ring, u));
  Outcome out;
  out.result = {{"validation", io::parameter_check_to_json(check)},
                {"algebra", io::algebra_to_json(*cp.algebra)},
                {"degree", cp.degree},
                {"units", units}};
  return out;
}

Outcome crossed_normalize(const Json& doc, const Guards& guards) {
  const ParameterSet p = io::parameter_set_from_json(doc, guards);
  const ParameterCheck check = validate_parameter_set(p);
  if (!check.ok()) return rejected({{"validation", io::parameter_check_to_json(check)}});
  const Normalization n = normalize(p);
  const CoefficientRing& ring = p.ring->ring();
  Json witness = Json::array();
  for (const auto& r : n.witness) witness.push_back(io::vector_to_json(ring, r));
  Outcome out;
  out.result = {{"parameter_set", io::parameter_set_to_json(n.parameters)},
                {"witness", witness},
                {"normalized", is_normalized(n.parameters)}};
  return out;
}

Outcome crossed_condense(const Json& doc, const Guards& guards) {
  const fixtures::CondenseCase c = fixtures::condense_case_from_json(doc, guards);
  const ParameterCheck check = validate_parameter_set(c.parameters);
  if (!check.ok()) return rejected({{"validation", io::parameter_check_to_json(check)}});
  const CrossedProduct gamma = build_crossed_product(c.parameters, guards);
  const CondensedCrossedProduct condensed = condense_crossed(gamma, c.idempotent, guards);
  const CoefficientRing& ring = c.parameters.ring->ring();
  Json conjugators = Json::array();
  for (const auto& x : condensed.conjugators) conjugators.push_back(io::vector_to_json(ring, x));
  Outcome out;
  out.result = {{"parameter_set", io::parameter_set_to_json(condensed.product.parameters)},
                {"conjugators", conjugators},
                {"corner_rank", condensed.corner.corner->rank()}};
  if (!c.column_units.empty()) {
    const Decondensation d = decondense(gamma, condensed, c.column_units, c.row_units, guards);
    const MapCheck iso = check_algebra_map(*d.matrices.algebra, *gamma.algebra, d.map);
    const std::vector<std::size_t> grading = matrix_grading(d, condensed.product);
    bool graded = true;
    for (std::size_t a = 0; a < d.map.rows; ++a) {
      for (std::size_t b = 0; b < d.map.cols; ++b) {
        if (!ring.is_zero(d.map.at(a, b)) && grading[a] != gamma.degree[b]) graded = false;
      }
    }
    out.result["decondensation"] = {{"isomorphism", io::map_check_to_json(iso)}, {"graded", graded}};
    if (!iso.ok() || !graded) {
      out.code = kRejected;
      out.status = "rejected";
    }
  }
  return out;
}

Outcome enumerate_command(const Json& doc, const Guards& guards) {
  if (!doc.is_object() || !doc.contains("R") || !doc.contains("group")) {
    throw InvalidInput("enumerate document needs \"R\" and \"group\"");
  }
  const AlgebraPtr R = io::algebra_from_json(doc.at("R"), guards);
  const GroupTable g = io::group_from_json(doc.at("group"));
  EnumerationOptions options;
  if (doc.contains("exhaustive")) options.exhaustive = doc.at("exhaustive").get<bool>();
  if (doc.contains("automorphisms_complete")) {
    options.automorphisms_complete = doc.at("automorphisms_complete").get<bool>();
  }
  if (doc.contains("automorphisms")) {
    for (const auto& m : doc.at("automorphisms")) {
      options.automorphisms.push_back(io::matrix_from_json(R->ring(), m, R->rank(), R->rank()));
    }
  }
  const EnumerationReport report = enumerate_crossed_products(R, g, options, guards);
  Outcome out;
  out.result = io::enumeration_to_json(report);
  if (!report.pairwise_inequivalent || !report.coverage_certified) {
    out.code = kUndecided;
    out.status = "inconclusive";
  }
  return out;
}

Json header(const Guards& guards, const std::string& command) {
  return {{"tool", kToolName},
          {"version", kVersion},
          {"schema_version", kSchemaVersion},
          {"seed", guards.seed},
          {"command", command},
          {"guards",
           {{"max_rank", guards.max_rank},
            {"max_candidates", guards.max_candidates},
            {"max_monomials", guards.max_monomials},
            {"random_draws", guards.random_draws}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for truncated Witt rings, orders and crossed products"};
  app.require_subcommand(1);
  app.fallthrough();

  Guards guards;
  std::string output;
  app.add_option("--seed", guards.seed, "Seed for randomized searches");
  app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
  app.add_option("--max-rank", guards.max_rank, "Largest algebra rank")->check(CLI::PositiveNumber);
  app.add_option("--max-candidates", guards.max_candidates, "Largest exhaustive search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-monomials", guards.max_monomials, "Largest Witt polynomial")
      ->check(CLI::PositiveNumber);

  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t deg = 1;
  std::vector<std::uint64_t> modulus;
  std::string op;
  auto* witt = app.add_subcommand("witt", "Witt polynomials and operation tables");
  witt->add_option("--p", p, "Prime")->required();
  witt->add_option("--n", n, "Length")->required()->check(CLI::PositiveNumber);
  witt->add_option("--deg", deg, "Degree of F_q over F_p");
  witt->add_option("--modulus", modulus, "Coefficients of the modulus of F_q, constant term first");
  witt->add_option("--op", op, "polys, add, mul, inverse or oracle")
      ->required()
      ->check(CLI::IsMember({"polys", "add", "mul", "inverse", "oracle"}));

  std::string file;
  auto* algebra = app.add_subcommand("algebra", "Structure-constant algebras");
  algebra->require_subcommand(1);
  auto* validate = algebra->add_subcommand("validate", "Validate an algebra document");
  validate->add_option("file", file, "Algebra JSON")->required();

  auto* morphism = app.add_subcommand("morphism", "Algebra morphisms");
  morphism->require_subcommand(1);
  auto* check = morphism->add_subcommand("check", "Certify an automorphism");
  check->add_option("file", file, "Morphism JSON")->required();

  std::size_t s = 0;
  std::size_t target = 0;
  auto* lift = app.add_subcommand("lift", "Lift an automorphism to higher precision");
  lift->add_option("--s", s, "Depth parameter")->required();
  lift->add_option("--target-precision", target, "Target length N")->required();
  lift->add_option("file", file, "Morphism JSON")->required();

  auto* crossed = app.add_subcommand("crossed", "Parameter sets and crossed products");
  crossed->require_subcommand(1);
  auto* build = crossed->add_subcommand("build", "Build the crossed product");
  build->add_option("file", file, "Parameter-set JSON")->required();
  auto* condense_cmd = crossed->add_subcommand("condense", "Condense at an idempotent");
  condense_cmd->add_option("file", file, "Condense JSON")->required();
  auto* normalize_cmd = crossed->add_subcommand("normalize", "Normalize a parameter set");
  normalize_cmd->add_option("file", file, "Parameter-set JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Classify crossed products");
  enumerate->add_option("file", file, "Enumeration JSON")->required();

  std::string fixture_name;
  bool list = false;
  auto* fixture = app.add_subcommand("fixture", "Emit a bundled fixture");
  fixture->add_option("name", fixture_name, "Fixture name");
  fixture->add_flag("--list", list, "List fixture names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  std::string command;
  Outcome outcome;
  Json report_guards;
  try {
    guards = guards_from_environment(guards);
    if (*witt) {
      command = "witt";
      outcome = witt_command(p, n, deg, modulus, op, guards);
    } else if (*validate) {
      command = "algebra validate";
      outcome = algebra_validate(read_document(file), guards);
    } else if (*check) {
      command = "morphism check";
      outcome = morphism_check(read_document(file), guards);
    } else if (*lift) {
      command = "lift";
      outcome = lift_command(read_document(file), s, target, guards);
    } else if (*build) {
      command = "crossed build";
      outcome = crossed_build(read_document(file), guards);
    } else if (*condense_cmd) {
      command = "crossed condense";
      outcome = crossed_condense(read_document(file), guards);
    } else if (*normalize_cmd) {
      command = "crossed normalize";
      outcome = crossed_normalize(read_document(file), guards);
    } else if (*enumerate) {
      command = "enumerate";
      outcome = enumerate_command(read_document(file), guards);
    } else if (*fixture) {
      command = "fixture";
      if (list) {
        outcome.result = fixtures::fixture_names();
      } else {
        outcome.result = fixtures::fixture(fixture_name);
      }
    }
  } catch (const CostGuardExceeded& e) {
    outcome = {kUndecided, "guard", {{"error", "CostGuardExceeded"}, {"message", e.what()}}};
  } catch (const IncompleteAutList& e) {
    outcome = {kUndecided, "inconclusive", {{"error", "IncompleteAutList"}, {"message", e.what()}}};
  } catch (const AssociativityViolation& e) {
    outcome = rejected({{"error", "AssociativityViolation"}, {"message", e.what()}, {"witness", e.witness}});
  } catch (const IdentityViolation& e) {
    outcome = rejected({{"error", "IdentityViolation"}, {"message", e.what()}, {"witness", e.index}});
  } catch (const InvalidInput& e) {
    outcome = {kInputError, "input_error", {{"error", "InvalidInput"}, {"message", e.what()}}};
  } catch (const PrecisionExhausted& e) {
    outcome = {kInputError, "input_error", {{"error", "PrecisionExhausted"}, {"message", e.what()}}};
  } catch (const Error& e) {
    outcome = rejected({{"error", "Rejected"}, {"message", e.what()}});
  } catch (const Json::exception& e) {
    outcome = {kInputError, "input_error", {{"error", "InvalidInput"}, {"message", e.what()}}};
  }

  Json report = header(guards, command);
  report["status"] = outcome.status;
  report["exit_code"] = outcome.code;
  report["result"] = outcome.result;
  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file_out(output);
    if (!file_out) {
      err << "cannot write " << output << "\n";
      return kInputError;
    }
    file_out << text;
  }
  if (outcome.code != kOk && outcome.result.contains("message")) {
    err << outcome.result["message"].get<std::string>() << "\n";
  }
  return outcome.code;
}

}  // namespace wittorders::cli
