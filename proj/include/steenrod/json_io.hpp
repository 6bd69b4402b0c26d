#pragma once

// JSON wire format for presentations, elements, group elements and reports.

#include "json.hpp"

#include "steenrod/algebra.hpp"
#include "steenrod/group.hpp"
#include "steenrod/grouptheory.hpp"
#include "steenrod/hopf.hpp"
#include "steenrod/kernels.hpp"
#include "steenrod/partitions.hpp"

namespace steenrod {

using Json = nlohmann::ordered_json;

/// {"p": 2, "generators": [{"name": "z1", "degree": 1, "cap": 4}, ...]};
/// a missing or null cap means no cap.
Json to_json(const Presentation& a);
PresentationPtr presentation_from_json(const Json& j);

/// [{"coeff": c, "exponents": [...]}, ...]
Json to_json(const Element& x);
Element element_from_json(const Json& j, const PresentationPtr& a);

/// {"p", "k", "flavor", "algebra", "coeffs"}
Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

Json to_json(const Composition& c);
Json to_json(const Tensor& t);
Json to_json(const CheckReport& r);
Json to_json(const SeriesReport& r, bool with_members = false);
Json to_json(const kernels::SweepResult& r);
Json to_json(const FiltrationLevel& l);

}  // namespace steenrod
