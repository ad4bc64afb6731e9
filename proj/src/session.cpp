#include "semimod/session.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "semimod/verify.hpp"
#include "semimod/window.hpp"
#include "semimod/zd_analysis.hpp"

namespace semimod {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

std::uint64_t budget_from_environment() {
    const char* raw = std::getenv(kBudgetEnv);
    if (!raw || !*raw) return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || raw[0] == '-') throw ValidationError(std::string(kBudgetEnv) + " is not a non-negative integer");
    return v;
}

namespace {

const char* const kKinds[] = {"rings", "monoids", "modules", "submodules", "series"};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// Re-throws an Error with `context` prepended, keeping its type.
template <typename Fn>
auto in_context(const std::string& context, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const ReferenceError&) {
        throw;
    } catch (const SizeError& e) {
        throw SizeError(context + ": " + e.what());
    } catch (const MismatchError& e) {
        throw MismatchError(context + ": " + e.what());
    } catch (const DegenerateInputError& e) {
        throw DegenerateInputError(context + ": " + e.what());
    } catch (const HypothesisError& e) {
        throw HypothesisError(context + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    } catch (const Json::exception& e) {
        throw ValidationError(context + ": " + e.what());
    }
}

const Json& field(const Json& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(ctx + ": missing field \"" + key + "\"");
    return obj[key];
}

std::string string_field(const Json& obj, const char* key, const std::string& ctx) {
    const Json& v = field(obj, key, ctx);
    if (!v.is_string()) throw ValidationError(ctx + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::uint64_t as_uint(const Json& v, const std::string& what) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ValidationError(what + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::uint64_t uint_field(const Json& obj, const char* key, const std::string& ctx) {
    return as_uint(field(obj, key, ctx), ctx + ": field \"" + key + "\"");
}

Table table_field(const Json& obj, const char* key, const std::string& ctx) {
    const Json& v = field(obj, key, ctx);
    const std::string what = ctx + ": table \"" + key + "\"";
    if (!v.is_array()) throw ValidationError(what + " must be an array of arrays");
    std::vector<std::vector<Index>> rows;
    for (const Json& row : v) {
        if (!row.is_array()) throw ValidationError(what + " must be an array of arrays");
        std::vector<Index> r;
        for (const Json& x : row) {
            const std::uint64_t e = as_uint(x, what + " entry");
            if (e > std::numeric_limits<Index>::max()) throw ValidationError(what + " entry out of range");
            r.push_back(static_cast<Index>(e));
        }
        rows.push_back(std::move(r));
    }
    return Table::from_rows(rows);
}

std::vector<std::string> names_field(const Json& obj, const std::string& ctx) {
    std::vector<std::string> names;
    if (!obj.contains("names")) return names;
    for (const Json& n : obj["names"]) {
        if (!n.is_string()) throw ValidationError(ctx + ": element names must be strings");
        names.push_back(n.get<std::string>());
    }
    return names;
}

// Element given by index or by name.
template <typename Space>
Index element_ref(const Json& v, const Space& space, const std::string& ctx) {
    if (v.is_string()) {
        if (auto i = space.find(v.get<std::string>())) return *i;
        throw ValidationError(ctx + ": no element named " + quoted(v.get<std::string>()) + " in " +
                              quoted(space.label()));
    }
    const std::uint64_t i = as_uint(v, ctx + ": element");
    if (i >= space.size())
        throw ValidationError(ctx + ": element " + std::to_string(i) + " out of range for " +
                              quoted(space.label()));
    return static_cast<Index>(i);
}

template <typename Space>
ElementSet element_list(const Json& v, const Space& space, const std::string& ctx) {
    if (!v.is_array()) throw ValidationError(ctx + ": generators must be an array");
    ElementSet s(space.size());
    for (const Json& x : v) s.insert(element_ref(x, space, ctx));
    return s;
}

}  // namespace

class SessionBuilder {
public:
    explicit SessionBuilder(Session& s) : s_(s) {}

    void load(const Json& doc, std::optional<std::uint64_t> budget_override) {
        if (!doc.is_object()) throw ValidationError("session must be a JSON object");
        static const std::set<std::string> known{"rings", "monoids", "modules", "submodules",
                                                 "series", "commands", "settings"};
        for (const auto& [key, _] : doc.items())
            if (!known.count(key)) throw ValidationError("unknown top-level key \"" + key + "\"");

        read_settings(doc.value("settings", Json::object()), budget_override);
        for (const char* kind : kKinds) index_definitions(doc, kind);

        for (const auto& n : s_.ring_order_) ring(n);
        for (const auto& n : s_.monoid_order_) monoid(n);
        for (const auto& n : s_.module_order_) module(n);
        for (const auto& n : s_.submodule_order_) submodule(n);
        for (const auto& n : s_.series_order_) series(n);

        if (doc.contains("commands")) {
            if (!doc["commands"].is_array()) throw ValidationError("\"commands\" must be an array");
            for (const Json& c : doc["commands"]) {
                if (!c.is_object() || !c.contains("command") || !c["command"].is_string())
                    throw ValidationError("every command needs a string \"command\" field");
                s_.commands_.push_back(c);
            }
        }
    }

private:
    struct Definition {
        Json body;
        std::string context;
    };

    void read_settings(const Json& settings, std::optional<std::uint64_t> budget_override) {
        if (!settings.is_object()) throw ValidationError("\"settings\" must be an object");
        s_.settings_.budget = budget_from_environment();
        for (const auto& [key, value] : settings.items()) {
            const std::string what = "settings." + key;
            if (key == "budget") s_.settings_.budget = as_uint(value, what);
            else if (key == "ring_cap") s_.settings_.limits.ring_cap = as_uint(value, what);
            else if (key == "module_cap") s_.settings_.limits.module_cap = as_uint(value, what);
            else throw ValidationError("unknown setting \"" + key + "\"");
        }
        if (budget_override) s_.settings_.budget = *budget_override;
    }

    std::vector<std::string>& order_of(const std::string& kind) {
        if (kind == "rings") return s_.ring_order_;
        if (kind == "monoids") return s_.monoid_order_;
        if (kind == "modules") return s_.module_order_;
        if (kind == "submodules") return s_.submodule_order_;
        return s_.series_order_;
    }

    void index_definitions(const Json& doc, const std::string& kind) {
        if (!doc.contains(kind)) return;
        const Json& arr = doc[kind];
        if (!arr.is_array()) throw ValidationError("\"" + kind + "\" must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string pos = kind + "[" + std::to_string(i) + "]";
            const std::string name = string_field(arr[i], "name", pos);
            if (!defs_[kind].emplace(name, Definition{arr[i], pos + " " + quoted(name)}).second)
                throw ValidationError(pos + ": duplicate name " + quoted(name) + " in \"" + kind + "\"");
            order_of(kind).push_back(name);
        }
    }

    const Definition& definition(const std::string& kind, const std::string& name, const std::string& by) {
        auto it = defs_[kind].find(name);
        if (it == defs_[kind].end())
            throw ReferenceError(by + ": unresolved reference " + quoted(name) + " (no entry in \"" + kind + "\")");
        const std::string key = kind + "/" + name;
        if (active_.count(key)) throw ReferenceError(by + ": cyclic definition through " + quoted(name));
        return it->second;
    }

    // Resolves with cycle detection; `build` runs only once per name.
    template <typename Map, typename Build>
    const typename Map::mapped_type& resolve(Map& built, const std::string& kind, const std::string& name,
                                             const std::string& by, Build&& build) {
        if (auto it = built.find(name); it != built.end()) return it->second;
        const Definition& def = definition(kind, name, by);
        const std::string key = kind + "/" + name;
        active_.insert(key);
        auto value = in_context(def.context, [&] { return build(def.body, def.context); });
        active_.erase(key);
        return built.emplace(name, std::move(value)).first->second;
    }

    const RingPtr& ring(const std::string& name, const std::string& by = "session") {
        return resolve(s_.rings_, "rings", name, by, [&](const Json& d, const std::string& ctx) -> RingPtr {
            const std::string kind = string_field(d, "kind", ctx);
            const Limits& lim = s_.settings_.limits;
            if (kind == "zmod") return build_zmod(uint_field(d, "n", ctx), lim.ring_cap);
            if (kind == "truncated_poly")
                return build_truncated_poly_ring(static_cast<unsigned>(uint_field(d, "p", ctx)),
                                                 static_cast<unsigned>(uint_field(d, "nvars", ctx)),
                                                 static_cast<unsigned>(uint_field(d, "cap", ctx)), lim.ring_cap);
            if (kind == "quotient") {
                const RingPtr& base = ring(string_field(d, "ring", ctx), ctx);
                return quotient_ring(ideal_generated(base, element_list(field(d, "ideal", ctx), *base, ctx)));
            }
            if (kind == "table") {
                Table add = table_field(d, "add", ctx);
                const Index zero = static_cast<Index>(uint_field(d, "zero", ctx));
                const Index one = static_cast<Index>(uint_field(d, "one", ctx));
                if (zero >= add.rows() || one >= add.rows()) throw ValidationError("zero/one out of range");
                return make_ring(std::move(add), table_field(d, "mul", ctx), zero, one,
                                 string_field(d, "name", ctx), names_field(d, ctx), lim);
            }
            throw ValidationError("unknown ring kind " + quoted(kind));
        });
    }

    const MonoidPtr& monoid(const std::string& name, const std::string& by = "session") {
        return resolve(s_.monoids_, "monoids", name, by, [&](const Json& d, const std::string& ctx) -> MonoidPtr {
            const std::string kind = string_field(d, "kind", ctx);
            if (kind == "free") return build_free_monoid(d.contains("dim") ? uint_field(d, "dim", ctx) : 1);
            if (kind == "cyclic_group") return build_cyclic_group(uint_field(d, "k", ctx));
            if (kind == "saturating") return build_saturating_monoid(uint_field(d, "c", ctx));
            if (kind == "table") {
                Table cayley = table_field(d, "cayley", ctx);
                if (cayley.rows() > s_.settings_.limits.module_cap)
                    throw SizeError("monoid table exceeds cap " + std::to_string(s_.settings_.limits.module_cap));
                const Index id = static_cast<Index>(uint_field(d, "identity", ctx));
                if (id >= cayley.rows()) throw ValidationError("identity out of range");
                return make_table_monoid(std::move(cayley), id, string_field(d, "name", ctx));
            }
            throw ValidationError("unknown monoid kind " + quoted(kind));
        });
    }

    const ModulePtr& module(const std::string& name, const std::string& by = "session") {
        return resolve(s_.modules_, "modules", name, by, [&](const Json& d, const std::string& ctx) -> ModulePtr {
            const std::string kind = string_field(d, "kind", ctx);
            const Limits& lim = s_.settings_.limits;
            if (kind == "ring_as_module") return ring_as_module(ring(string_field(d, "ring", ctx), ctx));
            if (kind == "quotient") {
                if (d.contains("submodule")) return quotient_module(submodule(string_field(d, "submodule", ctx), ctx));
                const ModulePtr& base = module(string_field(d, "module", ctx), ctx);
                return quotient_module(
                    submodule_generated(base, element_list(field(d, "generators", ctx), *base, ctx)));
            }
            if (kind == "direct_sum") {
                const Json& parts = field(d, "summands", ctx);
                if (!parts.is_array() || parts.size() < 2) throw ValidationError("direct_sum needs two or more summands");
                ModulePtr acc = module(parts[0].get<std::string>(), ctx);
                for (std::size_t i = 1; i < parts.size(); ++i)
                    acc = direct_sum(acc, module(parts[i].get<std::string>(), ctx), lim);
                return acc;
            }
            if (kind == "table") {
                const RingPtr& r = ring(string_field(d, "ring", ctx), ctx);
                Table add = table_field(d, "add", ctx);
                const Index zero = static_cast<Index>(uint_field(d, "zero", ctx));
                if (zero >= add.rows()) throw ValidationError("zero out of range");
                return make_module(r, std::move(add), table_field(d, "action", ctx), zero,
                                   string_field(d, "name", ctx), names_field(d, ctx), lim);
            }
            throw ValidationError("unknown module kind " + quoted(kind));
        });
    }

    const Submodule& submodule(const std::string& name, const std::string& by = "session") {
        return resolve(s_.submodules_, "submodules", name, by, [&](const Json& d, const std::string& ctx) {
            const ModulePtr& m = module(string_field(d, "module", ctx), ctx);
            return submodule_generated(m, element_list(field(d, "generators", ctx), *m, ctx));
        });
    }

    const Series& series(const std::string& name, const std::string& by = "session") {
        return resolve(s_.series_, "series", name, by, [&](const Json& d, const std::string& ctx) {
            const MonoidPtr& mon = monoid(string_field(d, "monoid", ctx), ctx);
            const Json& terms = field(d, "terms", ctx);
            if (d.contains("module")) {
                const ModulePtr& m = module(string_field(d, "module", ctx), ctx);
                return Series::over_module(
                    m, mon, series_terms_from_json(terms, *mon, [&](const Json& c) { return element_ref(c, *m, ctx); }));
            }
            const RingPtr& r = ring(string_field(d, "ring", ctx), ctx);
            return Series::over_ring(
                r, mon, series_terms_from_json(terms, *mon, [&](const Json& c) { return element_ref(c, *r, ctx); }));
        });
    }

    Session& s_;
    std::map<std::string, std::map<std::string, Definition>> defs_;
    std::set<std::string> active_;
};

Session Session::parse(const std::string& text, std::optional<std::uint64_t> budget_override) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based; locate the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        if (auto p = msg.find("; last read"); p != std::string::npos) msg = msg.substr(p + 2);
        throw ParseError(msg, line, column);
    }
    Session s;
    SessionBuilder(s).load(doc, budget_override);
    return s;
}

Session Session::load(const std::string& path, std::optional<std::uint64_t> budget_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read session file " + quoted(path));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), budget_override);
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) throw ReferenceError("unresolved reference " + quoted(name) + " (no entry in \"" + kind + "\")");
    return it->second;
}

}  // namespace

const RingPtr& Session::ring(const std::string& name) const { return lookup(rings_, name, "rings"); }
const MonoidPtr& Session::monoid(const std::string& name) const { return lookup(monoids_, name, "monoids"); }
const ModulePtr& Session::module(const std::string& name) const { return lookup(modules_, name, "modules"); }
const Submodule& Session::submodule(const std::string& name) const {
    return lookup(submodules_, name, "submodules");
}
const Series& Session::series(const std::string& name) const { return lookup(series_, name, "series"); }

Json Session::export_json() const {
    auto names_of = [](std::size_t n, bool has, auto&& name) {
        Json arr = Json::array();
        if (has)
            for (Index i = 0; i < n; ++i) arr.push_back(name(i));
        return arr;
    };
    auto ring_name = [&](const FiniteRing& r) -> std::string {
        for (const auto& n : ring_order_)
            if (rings_.at(n).get() == &r) return n;
        for (const auto& n : ring_order_)
            if (same_ring(*rings_.at(n), r)) return n;
        throw InvariantViolation("export: module over a ring without a session name");
    };
    auto module_name = [&](const FiniteModule& m) -> std::string {
        for (const auto& n : module_order_)
            if (modules_.at(n).get() == &m) return n;
        for (const auto& n : module_order_)
            if (same_module(*modules_.at(n), m)) return n;
        throw InvariantViolation("export: series over a module without a session name");
    };
    auto monoid_name = [&](const Monoid& m) -> std::string {
        for (const auto& n : monoid_order_)
            if (monoids_.at(n).get() == &m) return n;
        throw InvariantViolation("export: series over a monoid without a session name");
    };

    Json out = Json::object();
    out["settings"] = Json{{"budget", settings_.budget},
                           {"ring_cap", settings_.limits.ring_cap},
                           {"module_cap", settings_.limits.module_cap}};
    out["rings"] = Json::array();
    for (const auto& n : ring_order_) {
        const FiniteRing& r = *rings_.at(n);
        Json d{{"name", n}, {"kind", "table"}, {"add", r.add_table().to_rows()}, {"mul", r.mul_table().to_rows()},
               {"zero", r.zero()}, {"one", r.one()}};
        if (r.has_names()) d["names"] = names_of(r.size(), true, [&](Index i) { return r.name(i); });
        out["rings"].push_back(std::move(d));
    }
    out["monoids"] = Json::array();
    for (const auto& n : monoid_order_) {
        const Monoid& m = *monoids_.at(n);
        if (m.is_finite())
            out["monoids"].push_back(Json{{"name", n}, {"kind", "table"}, {"cayley", m.cayley().to_rows()},
                                          {"identity", m.identity_index()}});
        else
            out["monoids"].push_back(Json{{"name", n}, {"kind", "free"}, {"dim", m.dim()}});
    }
    out["modules"] = Json::array();
    for (const auto& n : module_order_) {
        const FiniteModule& m = *modules_.at(n);
        Json d{{"name", n}, {"kind", "table"}, {"ring", ring_name(m.ring())}, {"add", m.add_table().to_rows()},
               {"action", m.action_table().to_rows()}, {"zero", m.zero()}};
        if (m.has_names()) d["names"] = names_of(m.size(), true, [&](Index i) { return m.name(i); });
        out["modules"].push_back(std::move(d));
    }
    out["submodules"] = Json::array();
    for (const auto& n : submodule_order_) {
        const Submodule& p = submodules_.at(n);
        out["submodules"].push_back(Json{{"name", n}, {"module", module_name(p.module())},
                                         {"generators", element_set_to_json(p.members())}});
    }
    out["series"] = Json::array();
    for (const auto& n : series_order_) {
        const Series& f = series_.at(n);
        Json d{{"name", n}};
        if (f.over_module()) d["module"] = module_name(*f.module_ptr());
        else d["ring"] = ring_name(f.ring());
        d["monoid"] = monoid_name(f.monoid());
        d["terms"] = series_terms_to_json(f);
        out["series"].push_back(std::move(d));
    }
    out["commands"] = Json::array();
    for (const Json& c : commands_) out["commands"].push_back(c);
    return out;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::counterexample: return "counterexample";
        case Status::error: return "error";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

namespace {

Json ring_subset_json(const FiniteRing& ring, const ElementSet& s) {
    Json names = Json::array();
    for (Index i : s.members()) names.push_back(ring.name(i));
    return Json{{"members", element_set_to_json(s)}, {"names", names}};
}

Json classification_json(const SubmoduleClassification& c, const FiniteModule& m) {
    auto violation = [&](const std::optional<SubmoduleViolation>& v) -> Json {
        if (!v) return nullptr;
        return Json{{"r", v->r}, {"r_name", m.ring().name(v->r)}, {"x", v->x}, {"x_name", m.name(v->x)},
                    {"exponent_bound", v->exponent_bound}};
    };
    return Json{{"proper", c.is_proper},
                {"prime", c.is_prime},
                {"primary", c.is_primary},
                {"prime_violation", violation(c.prime_violation)},
                {"primary_violation", violation(c.primary_violation)}};
}

Json analyze_json(const ModulePtr& module) {
    const FiniteRing& ring = module->ring();
    const ElementSet z = zero_divisor_set(*module);
    Json out{{"module", module->label()}, {"size", module->size()}, {"zero_divisors", ring_subset_json(ring, z)}};

    const DecompositionOutcome outcome = decompose_zero_divisors(module);
    if (const auto* d = std::get_if<PrimeDecomposition>(&outcome)) {
        Json primes = Json::array();
        for (std::size_t i = 0; i < d->degree; ++i)
            primes.push_back(Json{{"ideal", ideal_to_json(d->primes[i])}, {"witness", d->witnesses[i]}});
        out["decomposition"] = Json{{"primes", primes}, {"incomparable", d->incomparable}, {"covers", d->covers}};
        out["degree"] = d->degree;
    } else {
        out["decomposition"] = nullptr;
        out["degree"] = nullptr;
        out["uncovered"] = std::get<NoPrimeCover>(outcome).uncovered;
    }

    const VeryFewReport vf = has_very_few_zero_divisors(module);
    Json ass = Json::array();
    for (const AssociatedPrime& a : vf.associated)
        ass.push_back(Json{{"prime", ideal_to_json(a.prime)}, {"witness", a.witness}});
    out["associated_primes"] = ass;
    out["very_few"] = vf.holds;

    const PropertyAReport pa = check_property_A(module);
    out["property_A"] = Json{{"holds", pa.holds},
                             {"checked_ideals", pa.checked_ideals},
                             {"failure", pa.failure ? ideal_to_json(*pa.failure) : Json(nullptr)}};

    const PrimalReport pr = is_primal(module);
    Json violation = nullptr;
    if (pr.violation)
        violation = Json{{"kind", pr.violation_is_sum ? "sum" : "product"},
                         {"pair", Json::array({pr.violation->first, pr.violation->second})}};
    out["primal"] = pr.primal;
    out["primal_violation"] = violation;
    return out;
}

std::string str_arg(const Json& c, const char* key) {
    if (!c.contains(key) || !c[key].is_string())
        throw ValidationError("command \"" + c["command"].get<std::string>() + "\" needs string argument \"" +
                              key + "\"");
    return c[key].get<std::string>();
}

// Ring series g become series over R as a module over itself.
Series as_module_series(const Series& g) {
    if (g.over_module()) return g;
    return Series::over_module(ring_as_module(g.ring_ptr()), g.monoid_ptr(), g.terms());
}

SupportWindow window_arg(const Json& c, const Monoid& monoid) {
    if (!c.contains("window")) return default_window(monoid);
    const Json& w = c["window"];
    SupportWindow out;
    const Json& exps = w.is_object() ? field(w, "exponents", "window") : w;
    if (!exps.is_array()) throw ValidationError("window must be an array of exponents or an object");
    for (const Json& e : exps) out.exponents.push_back(monoid_element_from_json(e, monoid));
    if (w.is_object() && w.contains("max_support") && !w["max_support"].is_null())
        out.max_support = as_uint(w["max_support"], "window max_support");
    validate_window(out, monoid);
    return out;
}

Json dm_json(const DMResult& r) {
    Json chain = Json::array();
    for (const DMStep& s : r.chain)
        chain.push_back(Json{{"k", s.k}, {"lhs", submodule_to_json(s.lhs)}, {"rhs", submodule_to_json(s.rhs)},
                             {"equal", s.equal}});
    return Json{{"k_min", r.k_min ? Json(*r.k_min) : Json(nullptr)}, {"cap", r.cap_used}, {"chain", chain}};
}

Json counterexample_json(const Session& s, const Json& c) {
    const MonoidPtr& monoid = s.monoid(str_arg(c, "monoid"));
    const ModulePtr& module = s.module(str_arg(c, "module"));
    std::vector<Index> qs;
    if (c.contains("q")) {
        qs.push_back(element_ref(c["q"], *module, "counterexample q"));
        if (qs[0] == module->zero()) throw ValidationError("counterexample: q must be nonzero");
    } else {
        for (Index q = 0; q < module->size(); ++q)
            if (q != module->zero()) qs.push_back(q);
    }
    if (qs.empty()) throw DegenerateInputError("counterexample: zero module");

    Json instances = Json::array();
    const CancellativeCheck canc = is_cancellative(*monoid);
    if (!canc.cancellative) {
        for (Index q : qs) {
            auto ce = build_noncancellative_counterexample(monoid, *canc.witness, module, q);
            instances.push_back(Json{{"q", q}, {"f", series_to_json(ce.f)}, {"g", series_to_json(ce.g)}});
        }
        const auto& w = *canc.witness;
        return Json{{"kind", "noncancellative"},
                    {"witness", Json{{"s", monoid_element_to_json(w.s)}, {"t", monoid_element_to_json(w.t)},
                                     {"u", monoid_element_to_json(w.u)}}},
                    {"instances", instances}};
    }
    const TorsionFreeCheck tor = is_torsion_free(*monoid);
    if (tor.torsion_free)
        throw ValidationError("counterexample: monoid " + quoted(monoid->label()) +
                              " is cancellative and torsion-free");
    const auto& w = *tor.witness;
    std::size_t k = 0;
    for (Index q : qs) {
        auto ce = build_torsion_counterexample(monoid, w.s, w.t, module, q);
        k = ce.k;
        instances.push_back(Json{{"q", q}, {"h", series_to_json(ce.h)}, {"g", series_to_json(ce.g)}});
    }
    return Json{{"kind", "torsion"},
                {"witness", Json{{"s", monoid_element_to_json(w.s)}, {"t", monoid_element_to_json(w.t)}, {"n", w.n}}},
                {"k", k},
                {"instances", instances}};
}

void run_verify(const Session& s, const Json& c, CommandRecord& rec) {
    const std::string statement = str_arg(c, "statement");
    VerifyOptions opts{s.settings().budget};
    VerificationReport r;
    if (statement == "zd_chain") {
        r = verify_zero_divisor_chain(s.ring(str_arg(c, "ring")));
    } else if (statement == "submodule_transfer") {
        const Submodule& p = s.submodule(str_arg(c, "submodule"));
        const MonoidPtr& monoid = s.monoid(str_arg(c, "monoid"));
        r = verify_submodule_transfer(p, monoid, window_arg(c, *monoid), opts);
    } else {
        const MonoidPtr& monoid = s.monoid(str_arg(c, "monoid"));
        ModulePtr module = c.contains("module") ? s.module(str_arg(c, "module")) : nullptr;
        RingPtr ring = c.contains("ring") ? s.ring(str_arg(c, "ring")) : nullptr;
        if (!ring && module) ring = module->ring_ptr();
        if (!ring) throw ValidationError("verify " + statement + " needs \"ring\" or \"module\"");
        if (!module && statement != "extended_primes") module = ring_as_module(ring);
        const SupportWindow window = window_arg(c, *monoid);
        if (statement == "mccoy_content") r = verify_mccoy_content(ring, module, monoid, window, opts);
        else if (statement == "extended_primes") r = verify_extended_primes(ring, module, monoid, window, opts);
        else if (statement == "regularity") r = verify_regularity(ring, module, monoid, window, opts);
        else if (statement == "zd_transfer") r = verify_zero_divisor_transfer(ring, module, monoid, window, opts);
        else throw ValidationError("unknown statement " + quoted(statement));
    }
    rec.status = r.outcome == Outcome::pass             ? Status::ok
                 : r.outcome == Outcome::counterexample ? Status::counterexample
                                                        : Status::skipped;
    rec.payload = Json{{"statement", r.statement},
                       {"outcome", to_string(r.outcome)},
                       {"instances_checked", r.instances_checked},
                       {"predicted_instances", r.predicted_instances},
                       {"config", r.config},
                       {"result", r.payload}};
}

void dispatch(const Session& s, const Json& c, CommandRecord& rec) {
    const std::string name = c["command"].get<std::string>();
    if (name == "analyze") {
        const ModulePtr module = c.contains("module") ? s.module(str_arg(c, "module"))
                                                      : ring_as_module(s.ring(str_arg(c, "ring")));
        rec.payload = analyze_json(module);
    } else if (name == "dm") {
        const Series& f = s.series(str_arg(c, "f"));
        const Series g = as_module_series(s.series(str_arg(c, "g")));
        std::optional<std::size_t> cap;
        if (c.contains("cap")) cap = as_uint(c["cap"], "dm cap");
        const DMResult r = dedekind_mertens_exponent(f, g, cap);
        rec.payload = dm_json(r);
        if (!r.k_min) rec.status = Status::skipped;
    } else if (name == "mccoy") {
        const Series& f = s.series(str_arg(c, "f"));
        const Series g = as_module_series(s.series(str_arg(c, "g")));
        if (g.is_zero() || !series_multiply(f, g).is_zero())
            throw ValidationError("mccoy: requires fg = 0 and g != 0");
        const Index m = mccoy_witness(f, g);
        rec.payload = Json{{"witness", m}, {"witness_name", g.module_ptr()->name(m)},
                           {"verified", series_act_on_element(f, g.module_ptr(), m).is_zero()}};
    } else if (name == "zdtest") {
        const Series& f = s.series(str_arg(c, "f"));
        const ModulePtr module = c.contains("module") ? s.module(str_arg(c, "module")) : ring_as_module(f.ring_ptr());
        const ZeroDivisorTest t = is_zero_divisor_series(f, module);
        rec.payload = Json{{"zero_divisor", t.zero_divisor},
                           {"witness", t.witness ? Json(*t.witness) : Json(nullptr)},
                           {"annihilator", submodule_to_json(t.annihilator)}};
    } else if (name == "counterexample") {
        rec.payload = counterexample_json(s, c);
    } else if (name == "classify") {
        const Submodule& p = s.submodule(str_arg(c, "submodule"));
        rec.payload = classification_json(classify_submodule(p), p.module());
    } else if (name == "verify") {
        run_verify(s, c, rec);
    } else {
        throw ValidationError("unknown command " + quoted(name));
    }
}

Json error_payload(const char* kind, const std::string& message) {
    return Json{{"error_kind", kind}, {"message", message}};
}

}  // namespace

CommandRecord execute(const Session& session, const Json& command, std::size_t index) {
    CommandRecord rec;
    rec.index = index;
    rec.command = command;
    const auto start = std::chrono::steady_clock::now();
    auto error = [&](Status st, const char* kind, const std::string& msg) {
        rec.status = st;
        rec.payload = error_payload(kind, msg);
    };
    try {
        // Test hook: exercises the invariant-violation path end to end.
        if (const char* inject = std::getenv(kFaultEnv); inject && command["command"] == inject)
            throw InvariantViolation(std::string("injected fault (") + kFaultEnv + ")");
        dispatch(session, command, rec);
    } catch (const InvariantViolation& e) {
        error(Status::counterexample, "invariant_violation", e.what());
    } catch (const ReferenceError& e) {
        error(Status::error, "reference", e.what());
    } catch (const SizeError& e) {
        error(Status::error, "size", e.what());
    } catch (const MismatchError& e) {
        error(Status::error, "mismatch", e.what());
    } catch (const DegenerateInputError& e) {
        error(Status::error, "degenerate", e.what());
    } catch (const HypothesisError& e) {
        error(Status::error, "hypothesis", e.what());
    } catch (const Error& e) {
        error(Status::error, "validation", e.what());
    } catch (const Json::exception& e) {
        error(Status::error, "validation", e.what());
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<CommandRecord> execute_all(const Session& session) {
    std::vector<CommandRecord> out;
    for (std::size_t i = 0; i < session.commands().size(); ++i)
        out.push_back(execute(session, session.commands()[i], i));
    return out;
}

CommandRecord load_error_record(const std::exception& e) {
    CommandRecord rec;
    rec.command = Json{{"command", "load"}};
    rec.status = Status::error;
    const char* kind = dynamic_cast<const ParseError*>(&e)       ? "parse"
                       : dynamic_cast<const ReferenceError*>(&e) ? "reference"
                       : dynamic_cast<const SizeError*>(&e)      ? "size"
                                                                 : "validation";
    rec.payload = error_payload(kind, e.what());
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        rec.payload["line"] = p->line();
        rec.payload["column"] = p->column();
    }
    return rec;
}

std::string payload_hash(const Json& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : payload.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json record_to_json(const CommandRecord& r) {
    return Json{{"index", r.index},
                {"command", r.command},
                {"status", to_string(r.status)},
                {"payload", r.payload},
                {"payload_hash", payload_hash(r.payload)},
                {"elapsed_ms", r.elapsed_ms},
                {"version", kVersion}};
}

std::string render_human(const CommandRecord& r) {
    std::ostringstream os;
    os << "[" << r.index << "] " << r.command.value("command", std::string("?"));
    if (r.command.contains("statement")) os << " " << r.command["statement"].get<std::string>();
    os << ": " << to_string(r.status) << " (" << payload_hash(r.payload) << ")\n";
    std::istringstream lines(r.payload.dump(2));
    for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
    return os.str();
}

int exit_code(const std::vector<CommandRecord>& records) {
    bool error = false, skipped = false;
    for (const CommandRecord& r : records) {
        if (r.status == Status::counterexample) return 1;
        error = error || r.status == Status::error;
        skipped = skipped || r.status == Status::skipped;
    }
    return error ? 2 : skipped ? 3 : 0;
}

}  // namespace semimod
