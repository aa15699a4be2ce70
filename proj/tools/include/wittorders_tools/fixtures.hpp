#pragma once

#include <string>
#include <vector>

#include "wittorders/crossed.hpp"
#include "wittorders_tools/io.hpp"

namespace wittorders::fixtures {

// W_2(F_3)[C_3] and the automorphism g -> g^2.
AlgebraPtr c3_group_algebra();
Morphism c3_inversion();

// beta over (Z/81)C_3: g -> g^2 plus 27 g in the row of g. An automorphism
// modulo 27 only.
Morphism z81_c3_beta();
// beta over (Z/16)C_2: g -> 4 + g. An automorphism modulo 8 only.
Morphism z16_c2_beta();

// Crossed product data over M_2(Z/9) with G = C_2: alpha_g is conjugation by
// the swap matrix and gamma(g,g) = 2.
struct CondenseCase {
  ParameterSet parameters;
  Element idempotent;
  std::vector<Element> column_units;
  std::vector<Element> row_units;
};
CondenseCase m2_c2_condense();

io::Json condense_case_to_json(const CondenseCase& c);
CondenseCase condense_case_from_json(const io::Json& j, const Guards& guards = {});

const std::vector<std::string>& fixture_names();
// Throws InvalidInput for unknown names.
io::Json fixture(const std::string& name);

}  // namespace wittorders::fixtures
