#pragma once

#include <string>
#include <vector>

#include "graphlogic/formula.hpp"

namespace graphlogic::logic {

// Named formula assets: the ten node/edge deletion formulas, vertex cover,
// the domination family, connectedness, and the chordal sentences.
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
const std::string& catalog_text(const std::string& name);  // InputError when unknown
Formula catalog_formula(const std::string& name);

// Coloring predicates are instantiated per color count: classes become k free
// set variables C1..Ck (vertices) / T1..Tk (edges).
// Variants: proper, star, cd, edge, rainbow, total, equitable.
std::vector<std::string> coloring_variant_names();
std::string coloring_formula_text(const std::string& variant, int k);
Formula coloring_formula(const std::string& variant, int k);

}  // namespace graphlogic::logic
