#include "wittorders_tools/io.hpp"

#include "wittorders/errors.hpp"

namespace wittorders::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::uint64_t unsigned_of(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InvalidInput(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

const Json& array_of(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    throw InvalidInput(std::string(what) + " must be an array of length " + std::to_string(size));
  }
  return j;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json ring_to_json(const CoefficientRing& ring) {
  return {{"p", ring.p()},
          {"deg", ring.degree()},
          {"modulus", ring.field().modulus()},
          {"n", ring.length()}};
}

CoefficientRing ring_from_json(const Json& j) {
  const std::uint64_t p = unsigned_of(field(j, "p"), "p");
  const std::uint64_t n = unsigned_of(field(j, "n"), "n");
  std::uint64_t deg = 1;
  if (j.contains("deg")) deg = unsigned_of(j.at("deg"), "deg");
  std::vector<std::uint64_t> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) throw InvalidInput("modulus must be an array");
    for (const auto& c : j.at("modulus")) modulus.push_back(unsigned_of(c, "modulus coefficient"));
  }
  if (n == 0) throw InvalidInput("n must be positive");
  if (deg == 0 || deg > kMaxDegree) throw InvalidInput("deg out of range");
  return CoefficientRing(FiniteField(p, deg, modulus), n);
}

Json scalar_to_json(const CoefficientRing& ring, const Scalar& s) {
  const WittVector w = ring.to_witt(s);
  Json out = Json::array();
  for (const auto& component : w.components) {
    Json coords = Json::array();
    for (std::size_t k = 0; k < ring.degree(); ++k) coords.push_back(component.c[k]);
    out.push_back(coords);
  }
  return out;
}

Scalar scalar_from_json(const CoefficientRing& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  array_of(j, ring.length(), "scalar");
  WittVector w;
  for (const auto& component : j) {
    array_of(component, ring.degree(), "Witt component");
    FieldElement e;
    for (std::size_t k = 0; k < ring.degree(); ++k) {
      const std::uint64_t value = unsigned_of(component[k], "field coordinate");
      if (value >= ring.p()) throw InvalidInput("field coordinate must be below p");
      e.c[k] = value;
    }
    w.components.push_back(e);
  }
  return ring.from_witt(w);
}

Json vector_to_json(const CoefficientRing& ring, const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(ring, s));
  return out;
}

Vector vector_from_json(const CoefficientRing& ring, const Json& j, std::size_t expected) {
  array_of(j, expected, "element");
  Vector v;
  for (const auto& s : j) v.push_back(scalar_from_json(ring, s));
  return v;
}

Json matrix_to_json(const CoefficientRing& ring, const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) out.push_back(vector_to_json(ring, m.row(i)));
  return out;
}

Matrix matrix_from_json(const CoefficientRing& ring, const Json& j, std::size_t rows,
                        std::size_t cols) {
  array_of(j, rows, "matrix");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, vector_from_json(ring, j[i], cols));
  return m;
}

Json group_to_json(const GroupTable& g) { return {{"order", g.order()}, {"mult", g.table()}}; }

GroupTable group_from_json(const Json& j) {
  const std::uint64_t order = unsigned_of(field(j, "order"), "order");
  const Json& mult = array_of(field(j, "mult"), order, "mult");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : mult) {
    array_of(row, order, "mult row");
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      const std::uint64_t v = unsigned_of(x, "mult entry");
      if (v >= order) throw InvalidInput("mult entry out of range");
      r.push_back(v);
    }
    table.push_back(std::move(r));
  }
  return GroupTable(std::move(table));
}

Json algebra_to_json(const Algebra& a) {
  const CoefficientRing& ring = a.ring();
  const std::size_t r = a.rank();
  Json constants = Json::array();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t v = 0; v < r; ++v) {
        const Scalar& c = a.constant(i, j, v);
        if (!ring.is_zero(c)) constants.push_back({i, j, v, scalar_to_json(ring, c)});
      }
    }
  }
  Json out = {{"ring", ring_to_json(ring)},
              {"rank", r},
              {"constants", constants},
              {"identity", vector_to_json(ring, a.identity())}};
  if (a.separable_ambient()) out["separable_ambient"] = true;
  return out;
}

AlgebraPtr algebra_from_json(const Json& j, const Guards& guards) {
  const CoefficientRing ring = ring_from_json(field(j, "ring"));
  const std::uint64_t rank = unsigned_of(field(j, "rank"), "rank");
  if (rank == 0) throw InvalidInput("rank must be positive");
  if (rank > guards.max_rank) throw CostGuardExceeded("rank exceeds max-rank");
  const Json& constants = field(j, "constants");
  if (!constants.is_array()) throw InvalidInput("constants must be an array");
  std::vector<Algebra::SparseConstant> sparse;
  for (const auto& entry : constants) {
    array_of(entry, 4, "constant entry [i, j, v, scalar]");
    sparse.push_back({unsigned_of(entry[0], "i"), unsigned_of(entry[1], "j"),
                      unsigned_of(entry[2], "v"), scalar_from_json(ring, entry[3])});
  }
  const Vector identity = vector_from_json(ring, field(j, "identity"), rank);
  AlgebraPtr a = Algebra::make_sparse(ring, rank, sparse, identity, guards);
  if (j.contains("separable_ambient") && j.at("separable_ambient").is_boolean() &&
      j.at("separable_ambient").get<bool>()) {
    a = a->with_separable_ambient(true);
  }
  return a;
}

Json morphism_to_json(const Morphism& m) {
  return {{"algebra", algebra_to_json(*m.algebra)},
          {"matrix", matrix_to_json(m.algebra->ring(), m.matrix)},
          {"certified", to_string(m.certified)}};
}

Morphism morphism_from_json(const Json& j, const Guards& guards) {
  Morphism m;
  m.algebra = algebra_from_json(field(j, "algebra"), guards);
  const std::size_t r = m.algebra->rank();
  m.matrix = matrix_from_json(m.algebra->ring(), field(j, "matrix"), r, r);
  // Certification is never trusted from input.
  m.certified = Certification::unchecked;
  return m;
}

Json parameter_set_to_json(const ParameterSet& p) {
  const CoefficientRing& ring = p.ring->ring();
  Json alpha = Json::object();
  Json gamma = Json::object();
  const std::size_t m = p.group.order();
  for (std::size_t g = 0; g < m; ++g) alpha[std::to_string(g)] = matrix_to_json(ring, p.alpha[g]);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      gamma[std::to_string(g) + "," + std::to_string(h)] = vector_to_json(ring, p.gamma_at(g, h));
    }
  }
  return {{"group", group_to_json(p.group)},
          {"R", algebra_to_json(*p.ring)},
          {"alpha", alpha},
          {"gamma", gamma}};
}

ParameterSet parameter_set_from_json(const Json& j, const Guards& guards) {
  ParameterSet p;
  p.group = group_from_json(field(j, "group"));
  p.ring = algebra_from_json(field(j, "R"), guards);
  const CoefficientRing& ring = p.ring->ring();
  const std::size_t m = p.group.order();
  const std::size_t r = p.ring->rank();
  const Json& alpha = field(j, "alpha");
  const Json& gamma = field(j, "gamma");
  for (std::size_t g = 0; g < m; ++g) {
    const std::string key = std::to_string(g);
    if (!alpha.contains(key)) throw InvalidInput("alpha is missing group element " + key);
    p.alpha.push_back(matrix_from_json(ring, alpha.at(key), r, r));
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const std::string key = std::to_string(g) + "," + std::to_string(h);
      if (!gamma.contains(key)) throw InvalidInput("gamma is missing pair " + key);
      p.gamma.push_back(vector_from_json(ring, gamma.at(key), r));
    }
  }
  return p;
}

Json map_check_to_json(const MapCheck& c) {
  Json out = {{"ok", c.ok()}, {"detail", c.describe()}};
  if (c.witness) out["witness"] = *c.witness;
  if (c.identity_coordinate) out["identity_coordinate"] = *c.identity_coordinate;
  return out;
}

Json parameter_check_to_json(const ParameterCheck& c) {
  return {{"ok", c.ok()}, {"detail", c.describe()}, {"witness", c.witness}};
}

Json unit_search_to_json(const CoefficientRing& ring, const UnitSearch& s) {
  Json out = {{"outcome", to_string(s.outcome)},
              {"candidates_tested", s.candidates_tested},
              {"residue_dimension", s.residue_dimension}};
  if (s.unit) out["unit"] = vector_to_json(ring, *s.unit);
  return out;
}

Json lift_trace_to_json(const LiftTrace& t) {
  const CoefficientRing& ring = t.result.algebra->ring();
  Json steps = Json::array();
  for (const auto& step : t.steps) {
    steps.push_back({{"index", step.index},
                     {"before", matrix_to_json(ring, step.before)},
                     {"after", matrix_to_json(ring, step.after)},
                     {"defect_valuation", step.defect_valuation},
                     {"certified", step.certified},
                     {"certified_precision", step.certified_precision},
                     {"congruent", step.congruent}});
  }
  return {{"s", t.s},
          {"target_precision", t.target_precision},
          {"steps", steps},
          {"result", matrix_to_json(ring, t.result.matrix)},
          {"certified", t.certified},
          {"agrees_with_beta", t.agrees_with_beta}};
}

Json witt_table_to_json(const WittPolynomialTable& t) {
  auto polys = [&](const std::vector<WittPolynomial>& list) {
    Json out = Json::array();
    for (const auto& poly : list) {
      Json terms = Json::array();
      for (const auto& term : poly.terms) {
        terms.push_back({{"exponents", term.exponents}, {"coefficient", term.coefficient}});
      }
      out.push_back(terms);
    }
    return out;
  };
  return {{"p", t.p}, {"n", t.n}, {"sigma", polys(t.sigma)}, {"mu", polys(t.mu)}};
}

Json enumeration_to_json(const EnumerationReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back(
        {{"representative", parameter_set_to_json(c.representative)}, {"orbit_size", c.orbit_size}});
  }
  Json certificates = Json::array();
  for (const auto& c : r.certificates) {
    certificates.push_back({{"pair", {c.first, c.second}},
                            {"equivalent", to_string(c.outcome)},
                            {"candidates_tested", c.candidates_tested}});
  }
  Json out = {{"classes", r.classes.size()},
              {"representatives", classes},
              {"certificates", certificates},
              {"candidates", r.candidates},
              {"valid", r.valid},
              {"coverage_certified", r.coverage_certified},
              {"pairwise_inequivalent", r.pairwise_inequivalent}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace wittorders::io
