#include "wittorders_tools/fixtures.hpp"

#include "wittorders/errors.hpp"

namespace wittorders::fixtures {

AlgebraPtr c3_group_algebra() { return group_algebra(cyclic_group(3), CoefficientRing(3, 2)); }

namespace {

// Matrix of the algebra map induced by g -> image on a cyclic group algebra.
Matrix power_map(const Algebra& a, const Element& image) {
  Matrix m(a.rank(), a.rank());
  Element power = a.identity();
  for (std::size_t k = 0; k < a.rank(); ++k) {
    m.set_row(k, power);
    power = a.multiply(power, image);
  }
  return m;
}

}  // namespace

Morphism c3_inversion() {
  const AlgebraPtr a = c3_group_algebra();
  return {a, power_map(*a, a->basis(2)), Certification::unchecked};
}

Morphism z81_c3_beta() {
  const AlgebraPtr a = group_algebra(cyclic_group(3), CoefficientRing(3, 4));
  Matrix m = power_map(*a, a->basis(2));
  m.at(1, 1) = a->ring().from_int(27);
  return {a, m, Certification::unchecked};
}

Morphism z16_c2_beta() {
  const AlgebraPtr a = group_algebra(cyclic_group(2), CoefficientRing(2, 4));
  const Element image = a->add(a->scale(a->ring().from_int(4), a->identity()), a->basis(1));
  return {a, power_map(*a, image), Certification::unchecked};
}

CondenseCase m2_c2_condense() {
  const CoefficientRing ring(3, 2);
  const AlgebraPtr base = group_algebra(GroupTable(), ring);
  const MatrixRing m2 = matrix_ring(base, 2);
  const AlgebraPtr& R = m2.algebra;
  const Element one = base->identity();
  const Element swap = R->add(m2.unit(0, 1, one), m2.unit(1, 0, one));
  ParameterSet p = trivial_parameter_set(cyclic_group(2), R);
  p.alpha[1] = inner_from_unit(R, swap).matrix;
  p.gamma_at(1, 1) = R->scale(ring.from_int(2), R->identity());
  return {p, m2.diagonal_idempotents[0], {m2.unit(0, 0, one), m2.unit(1, 0, one)},
          {m2.unit(0, 0, one), m2.unit(0, 1, one)}};
}

io::Json condense_case_to_json(const CondenseCase& c) {
  const CoefficientRing& ring = c.parameters.ring->ring();
  io::Json columns = io::Json::array();
  io::Json rows = io::Json::array();
  for (const auto& x : c.column_units) columns.push_back(io::vector_to_json(ring, x));
  for (const auto& x : c.row_units) rows.push_back(io::vector_to_json(ring, x));
  return {{"parameter_set", io::parameter_set_to_json(c.parameters)},
          {"idempotent", io::vector_to_json(ring, c.idempotent)},
          {"column_units", columns},
          {"row_units", rows}};
}

CondenseCase condense_case_from_json(const io::Json& j, const Guards& guards) {
  if (!j.is_object() || !j.contains("parameter_set") || !j.contains("idempotent")) {
    throw InvalidInput("condense document needs \"parameter_set\" and \"idempotent\"");
  }
  CondenseCase c;
  c.parameters = io::parameter_set_from_json(j.at("parameter_set"), guards);
  const CoefficientRing& ring = c.parameters.ring->ring();
  const std::size_t r = c.parameters.ring->rank();
  c.idempotent = io::vector_from_json(ring, j.at("idempotent"), r);
  for (const char* key : {"column_units", "row_units"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_array()) throw InvalidInput(std::string(key) + " must be an array");
    auto& target = std::string(key) == "column_units" ? c.column_units : c.row_units;
    for (const auto& x : j.at(key)) target.push_back(io::vector_from_json(ring, x, r));
  }
  return c;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "c2", "c3", "c4", "c2xc2", "s3", "trivial-ring", "c3-algebra", "c3-inversion",
      "s3-a3-crossed", "c4-c2-crossed", "z81-c3-lift", "z16-c2-lift", "w2f3-c2-enumerate",
      "m2-c2-condense"};
  return names;
}

io::Json fixture(const std::string& name) {
  using io::Json;
  if (name == "c2") return io::group_to_json(cyclic_group(2));
  if (name == "c3") return io::group_to_json(cyclic_group(3));
  if (name == "c4") return io::group_to_json(cyclic_group(4));
  if (name == "c2xc2") return io::group_to_json(direct_product(cyclic_group(2), cyclic_group(2)));
  if (name == "s3") return io::group_to_json(symmetric_group_3());
  if (name == "trivial-ring") {
    return io::algebra_to_json(*group_algebra(GroupTable(), CoefficientRing(3, 2)));
  }
  if (name == "c3-algebra") return io::algebra_to_json(*c3_group_algebra());
  if (name == "c3-inversion") return io::morphism_to_json(c3_inversion());
  if (name == "s3-a3-crossed") {
    return io::parameter_set_to_json(
        group_algebra_parameter_set(symmetric_group_3(), {0, 3, 4}, CoefficientRing(3, 2))
            .parameters);
  }
  if (name == "c4-c2-crossed") {
    return io::parameter_set_to_json(
        group_algebra_parameter_set(cyclic_group(4), {0, 2}, CoefficientRing(2, 2)).parameters);
  }
  if (name == "z81-c3-lift") return io::morphism_to_json(z81_c3_beta());
  if (name == "z16-c2-lift") return io::morphism_to_json(z16_c2_beta());
  if (name == "w2f3-c2-enumerate") {
    return {{"R", io::algebra_to_json(*group_algebra(GroupTable(), CoefficientRing(3, 2)))},
            {"group", io::group_to_json(cyclic_group(2))},
            {"exhaustive", true}};
  }
  if (name == "m2-c2-condense") return condense_case_to_json(m2_c2_condense());
  throw InvalidInput("unknown fixture \"" + name + "\"");
}

}  // namespace wittorders::fixtures
