#pragma once

#include <json.hpp>

#include "ytab/coeff_graph.hpp"
#include "ytab/straighten.hpp"

namespace ytab {

using Json = nlohmann::ordered_json;

// Integers that fit emit as JSON numbers; anything wider as a decimal
// string.
Json int_json(const Int& value);

Json filling_json(const Filling& f);              // [[row], ...]
Json basis_json(const SsytBasis& basis);
Json matrix_json(const RearrangementMatrix& m);
Json straightening_json(const Straightening& s, const SsytBasis& basis);
Json graph_json(const CoeffGraph& g);

} // namespace ytab
