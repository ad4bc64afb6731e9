#pragma once

// JSON encodings shared by verification reports and session files.

#include <json.hpp>

#include "semimod/module.hpp"
#include "semimod/monoid.hpp"
#include "semimod/ring.hpp"
#include "semimod/series.hpp"
#include "semimod/window.hpp"

namespace semimod {

using Json = nlohmann::ordered_json;

// Integer for one-coordinate elements, array otherwise.
Json monoid_element_to_json(const MonoidElement& e);
MonoidElement monoid_element_from_json(const Json& j, const Monoid& monoid);

// [{"exponent": e, "coefficient": c}, ...] with coefficient indices.
Json series_terms_to_json(const Series& s);
Json series_to_json(const Series& s);  // {"terms": [...], "text": "..."}

std::vector<Term> series_terms_from_json(const Json& terms, const Monoid& monoid,
                                         const std::function<Index(const Json&)>& coefficient);

// Sorted member indices.
Json element_set_to_json(const ElementSet& s);
Json ideal_to_json(const Ideal& ideal);  // {"members": [...], "names": [...]}
Json submodule_to_json(const Submodule& sub);

Json window_to_json(const SupportWindow& w);

}  // namespace semimod
