// JSON encodings of elements, lattices, field descriptions and verdicts.
// Emission is canonical (digit lists start at the valuation and drop
// trailing zeros) so that parse followed by emit is the identity on emitted
// values; parsing is lenient about leading and trailing zero digits.
#pragma once

#include <string>

#include "json.hpp"

#include "dyadic/universal.h"

namespace dyadic {

nlohmann::json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldContext& ctx, const nlohmann::json& j);

// Lattices are written as {"kind": "bong_literal", "a": [...], "R": [...]}
// and read from any of the block kinds H, A22rho, piA22rho, unary,
// bong_literal and concat (nestable).
nlohmann::json lattice_to_json(const BongLattice& L);
BongLattice lattice_from_json(const FieldContext& ctx, const nlohmann::json& j);

// Field description {"e", "f", "unram_poly", "eis_poly", "prec", "rho"};
// only e and f are required.
std::unique_ptr<FieldContext> field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldContext& ctx);

nlohmann::json val_to_json(const Val& v);  // integer, "k/2", or "inf"
nlohmann::json space_to_json(const SpaceInv& s);
nlohmann::json invariants_to_json(const BongLattice& L);
nlohmann::json uni_verdict_to_json(const UniVerdict& v);
nlohmann::json rep_verdict_to_json(const RepVerdict& v);
nlohmann::json testing_set_to_json(const FieldContext& ctx,
                                   const std::vector<TestingEntry>& set);
nlohmann::json crosscheck_to_json(const CrosscheckReport& r);

}  // namespace dyadic
