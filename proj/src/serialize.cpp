#include "semimod/serialize.hpp"

#include "semimod/errors.hpp"

namespace semimod {

Json monoid_element_to_json(const MonoidElement& e) {
    if (e.dim() == 1) return e[0];
    Json arr = Json::array();
    for (auto c : e.coords()) arr.push_back(c);
    return arr;
}

MonoidElement monoid_element_from_json(const Json& j, const Monoid& monoid) {
    MonoidElement e;
    if (j.is_number_integer()) {
        e = MonoidElement{j.get<std::int64_t>()};
    } else if (j.is_array()) {
        MonoidElement::Coords c;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw ValidationError("exponent coordinates must be integers");
            c.push_back(x.get<std::int64_t>());
        }
        e = MonoidElement(std::move(c));
    } else {
        throw ValidationError("exponent must be an integer or an array of integers");
    }
    if (!monoid.contains(e))
        throw ValidationError("exponent " + to_string(e) + " is not an element of monoid '" +
                              monoid.label() + "'");
    return e;
}

Json series_terms_to_json(const Series& s) {
    Json arr = Json::array();
    for (const Term& t : s.terms())
        arr.push_back(Json{{"exponent", monoid_element_to_json(t.exponent)},
                           {"coefficient", t.coefficient}});
    return arr;
}

Json series_to_json(const Series& s) {
    return Json{{"terms", series_terms_to_json(s)}, {"text", s.to_string()}};
}

std::vector<Term> series_terms_from_json(const Json& terms, const Monoid& monoid,
                                         const std::function<Index(const Json&)>& coefficient) {
    if (!terms.is_array()) throw ValidationError("series terms must be an array");
    std::vector<Term> out;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("exponent") || !t.contains("coefficient"))
            throw ValidationError("series term needs \"exponent\" and \"coefficient\"");
        out.push_back(Term{monoid_element_from_json(t["exponent"], monoid), coefficient(t["coefficient"])});
    }
    return out;
}

Json element_set_to_json(const ElementSet& s) {
    Json arr = Json::array();
    for (Index i : s.members()) arr.push_back(i);
    return arr;
}

Json ideal_to_json(const Ideal& ideal) {
    Json names = Json::array();
    for (Index i : ideal.members().members()) names.push_back(ideal.ring().name(i));
    return Json{{"members", element_set_to_json(ideal.members())}, {"names", names}};
}

Json submodule_to_json(const Submodule& sub) {
    Json names = Json::array();
    for (Index i : sub.members().members()) names.push_back(sub.module().name(i));
    return Json{{"members", element_set_to_json(sub.members())}, {"names", names}};
}

Json window_to_json(const SupportWindow& w) {
    Json exps = Json::array();
    for (const auto& e : w.exponents) exps.push_back(monoid_element_to_json(e));
    Json j{{"exponents", exps}};
    j["max_support"] = w.max_support ? Json(*w.max_support) : Json(nullptr);
    return j;
}

}  // namespace semimod
