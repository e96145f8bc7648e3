#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qhd::verify {

// One named comparison: the value the pipeline computed and the value it
// had to match. Kept JSON-typed so reports can embed them directly.
struct Check {
  std::string name;
  bool ok = false;
  nlohmann::json got;
  nlohmann::json want;
};

bool all_ok(const std::vector<Check>& checks);
nlohmann::json checks_json(const std::vector<Check>& checks);
void append(std::vector<Check>& out, std::vector<Check> more);

// Seven-line arrangement, its sweep presentation, the derived meridians and
// the quotient killing the six chosen exceptional classes. Checks the
// quotient order 4(p+2)(p+3) and the abelianization order 4(p+3).
std::vector<Check> seven_line_pipeline(int p, const std::string& data_dir);

// The closed two-generator presentation of the same group: order, index of
// the cyclic subgroup generated by a, and generator maps in both directions
// between it and the arrangement quotient, verified relator by relator in
// the regular permutation action and shown mutually inverse.
std::vector<Check> two_generator_equivalence(int p, const std::string& data_dir);

// Invariants of the monomial matrix group at m: order, center, abelianization,
// fixed-point freeness, the square identity for the reflections and the
// Sylow decomposition. For odd m also exhibits the primed variant's failure
// of freeness through an order two element with a fixed direction.
std::vector<Check> matrix_group_structure(long m);

// The two-generator presentation at p = m-2 maps onto the matrix group by
// a -> S, l -> T S^-1, with equal orders, so the finite groups agree.
std::vector<Check> matrix_presentation_match(long m);

// The monomial action fixes xw + yz and rescales zw + x^2m + zeta y^2m by
// omega^-2m under S and by zeta under T; the group order matches the Euler
// characteristic constant 4m(m+1).
std::vector<Check> invariant_polynomials(long m);

// Resolution graph discriminants of the three families at p, plus the
// continued-fraction identity for the long arm of the star.
std::vector<Check> family_discriminants(long p);

// Seifert star with undetermined central weight: the discriminant target
// 16(m+1)^2 forces d = 2 and the resulting star is the family graph.
std::vector<Check> seifert_central_weight(long m);

// Blow-up models at p: self-intersections and adjacency of the divisor at
// infinity match the published graphs, and the class cokernels give the
// expected first homology of the complements.
std::vector<Check> surface_models(long p, const std::string& data_dir);

// Pencil pipeline for the conic plus cubic curve: kill the tangent line
// meridian, eliminate the redundant generators, compare with the reference
// three-relator presentation through the stored certificates, and check the
// free abelianization and the two stored commutator certificates.
std::vector<Check> pencil_equivalence(const std::string& data_dir);

// Exact polynomial facts about the sextic: tangent cone at the tangency,
// vanishing at the two marked points, divisibility of the pullback.
std::vector<Check> plane_sextic();

// Property suites: Artin relations acting on free generators, coset
// enumeration against Lagrange, continued fraction round trip, and matrix
// abelianizations computed independently by SNF and by enumeration.
std::vector<Check> braid_action_properties();
std::vector<Check> lagrange_consistency(int p);
std::vector<Check> continued_fraction_roundtrip(long max_n);
std::vector<Check> abelianization_agreement(long m);

// The matgroup CLI report body.
nlohmann::json matgroup_report(long m);

// CLI report envelope. Serializes with sorted keys; the timing field is
// attached only when requested so default output is reproducible.
struct Report {
  std::string command;
  nlohmann::json inputs;
  nlohmann::json results;
  bool ok = true;
  std::optional<double> seconds;
};

nlohmann::json report_json(const Report& r);

// Flat key/value rendering of a JSON document for terminal reading.
std::string render_pretty(const nlohmann::json& j);

}  // namespace qhd::verify
