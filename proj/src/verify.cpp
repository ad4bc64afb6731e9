#include "semimod/verify.hpp"

#include <chrono>
#include <map>

#include "semimod/errors.hpp"
#include "semimod/series.hpp"
#include "semimod/zd_analysis.hpp"

namespace semimod {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::counterexample: return "counterexample";
        case Outcome::skipped: return "skipped";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_ = Clock::now();
};

VerificationReport start_report(std::string statement, const std::string& ring_label,
                                const std::string& module_label, const Monoid& monoid,
                                const SupportWindow* window, const VerifyOptions& options) {
    VerificationReport r;
    r.statement = std::move(statement);
    r.config = Json{{"ring", ring_label}, {"module", module_label}, {"monoid", monoid.label()},
                    {"budget", options.budget}};
    if (window) r.config["window"] = window_to_json(*window);
    return r;
}

// Marks the report skipped when the predicted work exceeds the budget.
bool over_budget(VerificationReport& r, std::uint64_t predicted, const VerifyOptions& options) {
    r.predicted_instances = predicted;
    if (predicted <= options.budget) return false;
    r.outcome = Outcome::skipped;
    r.payload = Json{{"reason", "budget exceeded"}, {"predicted", predicted}, {"budget", options.budget}};
    return true;
}

void require_hypotheses(const Monoid& monoid, const char* statement) {
    if (!monoid.satisfies_content_hypotheses())
        throw HypothesisError(std::string(statement) + ": monoid '" + monoid.label() +
                              "' is not cancellative and torsion-free");
}

void require_nonzero(const FiniteModule& module, const char* statement) {
    if (module.is_zero_module())
        throw DegenerateInputError(std::string(statement) + ": zero module");
}

void require_same_ring(const FiniteRing& ring, const FiniteModule& module, const char* statement) {
    if (!same_ring(ring, module.ring()))
        throw MismatchError(std::string(statement) + ": module is not over the given ring");
}

void fail(VerificationReport& r, Json payload) {
    r.outcome = Outcome::counterexample;
    r.payload = std::move(payload);
}

Json pair_payload(const std::string& clause, const Series& f, const Series& g, const std::string& detail) {
    return Json{{"clause", clause}, {"f", series_to_json(f)}, {"g", series_to_json(g)}, {"detail", detail}};
}

bool all_coefficients_in(const Series& s, const ElementSet& subset) {
    for (const Term& t : s.terms())
        if (!subset.contains(t.coefficient)) return false;
    return true;
}

// Nonzero m with f . m = 0, if any.
std::optional<Index> find_killed_element(const Series& f, const ModulePtr& module) {
    for (Index m = 0; m < module->size(); ++m) {
        if (m == module->zero()) continue;
        if (series_act_on_element(f, module, m).is_zero()) return m;
    }
    return std::nullopt;
}

void content_branch(VerificationReport& r, const RingPtr& ring, const ModulePtr& module,
                             const MonoidPtr& monoid, const SupportWindow& window,
                             const VerifyOptions& options) {
    const std::uint64_t predicted = saturating_mul(window_cardinality(window, ring->size()),
                                                   window_cardinality(window, module->size()));
    if (over_budget(r, predicted, options)) return;

    const std::vector<Series> fs = window_series(ring, monoid, window);
    const std::vector<Series> gs = window_series(module, monoid, window);
    std::map<std::size_t, std::uint64_t> k_histogram;
    std::uint64_t zero_products = 0, witnesses = 0, inconclusive = 0, regular = 0;

    for (const Series& f : fs) {
        const ZeroDivisorTest zd = is_zero_divisor_series(f, module);
        if (!zd.zero_divisor) {
            ++regular;
        } else {
            // Content criterion, converse: m X^0 is a nonzero g with fg = 0.
            const Series g = Series::monomial_over_module(module, monoid, *zd.witness, monoid->identity());
            if (!series_multiply(f, g).is_zero())
                return fail(r, pair_payload("content_criterion", f, g, "content witness does not annihilate f"));
        }
        for (const Series& g : gs) {
            ++r.instances_checked;
            const Series fg = series_multiply(f, g);
            const DMResult dm = dedekind_mertens_exponent(f, g);
            if (dm.k_min) ++k_histogram[*dm.k_min];
            else ++inconclusive;
            if (!fg.is_zero() || g.is_zero()) continue;
            ++zero_products;
            if (!zd.zero_divisor)
                return fail(r, pair_payload("content_criterion", f, g, "Ann_M(c(f)) = 0 but fg = 0 with g != 0"));
            try {
                mccoy_witness(f, g);
                ++witnesses;
            } catch (const InvariantViolation& e) {
                return fail(r, pair_payload("mccoy", f, g, e.what()));
            }
        }
    }
    Json hist = Json::object();
    std::size_t k_max = 0;
    for (const auto& [k, count] : k_histogram) {
        hist[std::to_string(k)] = count;
        k_max = std::max(k_max, k);
    }
    r.payload = Json{{"branch", "content"},
                     {"pairs", r.instances_checked},
                     {"zero_products", zero_products},
                     {"mccoy_witnesses", witnesses},
                     {"regular_f", regular},
                     {"dm_k_max", k_max},
                     {"dm_k_histogram", hist},
                     {"dm_inconclusive", inconclusive},
                     {"scope", "window-exhaustive"}};
}

void hypothesis_failure_branch(VerificationReport& r, const ModulePtr& module, const MonoidPtr& monoid) {
    r.predicted_instances = module->size() - 1;
    const CancellativeCheck canc = is_cancellative(*monoid);
    Json instances = Json::array();
    try {
        if (!canc.cancellative) {
            const CancellationWitness& w = *canc.witness;
            for (Index q = 0; q < module->size(); ++q) {
                if (q == module->zero()) continue;
                ++r.instances_checked;
                auto ce = build_noncancellative_counterexample(monoid, w, module, q);
                if (auto m = find_killed_element(ce.f, module))
                    return fail(r, Json{{"clause", "mccoy"}, {"branch", "noncancellative"},
                                        {"f", series_to_json(ce.f)}, {"g", series_to_json(ce.g)},
                                        {"detail", "f kills m = " + std::to_string(*m)}});
                instances.push_back(Json{{"q", q}, {"f", series_to_json(ce.f)},
                                         {"g", series_to_json(ce.g)}, {"fg_zero", true},
                                         {"mccoy_witness", nullptr}});
            }
            r.payload = Json{{"branch", "noncancellative"},
                             {"witness", Json{{"s", monoid_element_to_json(w.s)},
                                              {"t", monoid_element_to_json(w.t)},
                                              {"u", monoid_element_to_json(w.u)}}},
                             {"mccoy_fails", true},
                             {"instances", instances}};
            return;
        }
        const TorsionFreeCheck tor = is_torsion_free(*monoid);
        const TorsionWitness& w = *tor.witness;
        std::size_t k = 0;
        for (Index q = 0; q < module->size(); ++q) {
            if (q == module->zero()) continue;
            ++r.instances_checked;
            auto ce = build_torsion_counterexample(monoid, w.s, w.t, module, q);
            k = ce.k;
            if (auto m = find_killed_element(ce.h, module))
                return fail(r, Json{{"clause", "mccoy"}, {"branch", "torsion"}, {"h", series_to_json(ce.h)},
                                    {"g", series_to_json(ce.g)},
                                    {"detail", "h kills m = " + std::to_string(*m)}});
            instances.push_back(Json{{"q", q}, {"h", series_to_json(ce.h)}, {"g", series_to_json(ce.g)},
                                     {"hg_zero", true}, {"distinct_exponents", ce.h.support_size()},
                                     {"mccoy_witness", nullptr}});
        }
        r.payload = Json{{"branch", "torsion"},
                         {"witness", Json{{"s", monoid_element_to_json(w.s)},
                                          {"t", monoid_element_to_json(w.t)},
                                          {"n", w.n}}},
                         {"k", k},
                         {"mccoy_fails", true},
                         {"instances", instances}};
    } catch (const InvariantViolation& e) {
        fail(r, Json{{"clause", "mccoy"}, {"detail", e.what()}});
    }
}

// True when some n <= |R| has c(r)^n M inside P.
bool content_power_scales_into(const Ideal& content, const Submodule& p) {
    const ModulePtr& module = p.module_ptr();
    const Submodule whole = Submodule::whole(module);
    const std::size_t bound = content.ring().size();
    Ideal power = content;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (ideal_action_submodule(power, whole).is_subset_of(p)) return true;
        Ideal next = ideal_product(power, content);
        if (next == power) return false;
        power = std::move(next);
    }
    return false;
}

}  // namespace

VerificationReport verify_mccoy_content(const RingPtr& ring, const ModulePtr& module, const MonoidPtr& monoid,
                                   const SupportWindow& window, const VerifyOptions& options) {
    Stopwatch clock;
    require_nonzero(*module, "mccoy_content");
    require_same_ring(*ring, *module, "mccoy_content");
    validate_window(window, *monoid);
    VerificationReport r = start_report("mccoy_content", ring->label(), module->label(), *monoid, &window, options);
    if (monoid->satisfies_content_hypotheses())
        content_branch(r, ring, module, monoid, window, options);
    else
        hypothesis_failure_branch(r, module, monoid);
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_extended_primes(const RingPtr& ring, const ModulePtr& module, const MonoidPtr& monoid,
                                     const SupportWindow& window, const VerifyOptions& options) {
    Stopwatch clock;
    require_hypotheses(*monoid, "extended_primes");
    if (ring->is_zero_ring()) throw DegenerateInputError("extended_primes: zero ring");
    if (module) {
        require_nonzero(*module, "extended_primes");
        require_same_ring(*ring, *module, "extended_primes");
    }
    validate_window(window, *monoid);
    VerificationReport r = start_report("extended_primes", ring->label(), module ? module->label() : "",
                                        *monoid, &window, options);

    const std::uint64_t nf = window_cardinality(window, ring->size());
    std::vector<AssociatedPrime> ass;
    if (module) ass = associated_primes(module);
    const std::uint64_t predicted = saturating_mul(nf, nf) + saturating_mul(nf, ass.size());
    if (over_budget(r, predicted, options)) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    const std::vector<Series> fs = window_series(ring, monoid, window);
    const bool domain = zero_divisor_set(*ring_as_module(ring)).size() == 1;
    const std::vector<Ideal> primes = prime_ideals(ring);
    std::vector<std::vector<char>> outside(primes.size(), std::vector<char>(fs.size()));
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t a = 0; a < fs.size(); ++a)
            outside[i][a] = !all_coefficients_in(fs[a], primes[i].members());

    Json domain_part = Json{{"domain", domain}};
    if (!domain) {
        // R[S] not a domain: a zero product of constants.
        const ElementSet z = zero_divisor_set(*ring_as_module(ring));
        for (Index a : z.members()) {
            if (a == ring->zero()) continue;
            for (Index b = 0; b < ring->size(); ++b) {
                if (b == ring->zero() || ring->mul(a, b) != ring->zero()) continue;
                const Series fa = Series::monomial_over_ring(ring, monoid, a, monoid->identity());
                const Series fb = Series::monomial_over_ring(ring, monoid, b, monoid->identity());
                if (!series_multiply(fa, fb).is_zero()) {
                    fail(r, pair_payload("domain", fa, fb, "constant zero product not preserved"));
                    r.elapsed_ms = clock.elapsed_ms();
                    return r;
                }
                domain_part["constant_zero_product"] = Json{{"a", a}, {"b", b}};
                break;
            }
            if (domain_part.contains("constant_zero_product")) break;
        }
    }

    std::uint64_t nonzero_pairs = 0;
    std::vector<std::uint64_t> prime_pairs(primes.size(), 0);
    for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = 0; b < fs.size(); ++b) {
            ++r.instances_checked;
            const Series fg = series_multiply(fs[a], fs[b]);
            if (domain && !fs[a].is_zero() && !fs[b].is_zero()) {
                ++nonzero_pairs;
                if (fg.is_zero()) {
                    fail(r, pair_payload("domain", fs[a], fs[b], "zero product of nonzero series over a domain"));
                    r.elapsed_ms = clock.elapsed_ms();
                    return r;
                }
            }
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (!outside[i][a] || !outside[i][b]) continue;
                ++prime_pairs[i];
                if (all_coefficients_in(fg, primes[i].members())) {
                    Json p = pair_payload("prime", fs[a], fs[b], "f, g outside p[S] but fg inside");
                    p["prime"] = ideal_to_json(primes[i]);
                    fail(r, std::move(p));
                    r.elapsed_ms = clock.elapsed_ms();
                    return r;
                }
            }
        }
    }
    domain_part["nonzero_pairs"] = nonzero_pairs;

    Json prime_part = Json::array();
    for (std::size_t i = 0; i < primes.size(); ++i)
        prime_part.push_back(Json{{"prime", ideal_to_json(primes[i])}, {"pairs_outside", prime_pairs[i]}});

    Json associated_part = Json::array();
    for (const AssociatedPrime& ap : ass) {
        const ExtendedIdeal ext{ap.prime, monoid};
        std::uint64_t members = 0;
        for (const Series& f : fs) {
            ++r.instances_checked;
            const bool kills = series_act_on_element(f, module, ap.witness).is_zero();
            const bool inside = extended_ideal_membership(f, ext);
            members += inside;
            if (kills != inside) {
                Json p{{"clause", "mccoy"}, {"f", series_to_json(f)}, {"m", ap.witness},
                       {"prime", ideal_to_json(ap.prime)},
                       {"detail", kills ? "f kills m but f is outside p[S]" : "f in p[S] does not kill m"}};
                fail(r, std::move(p));
                r.elapsed_ms = clock.elapsed_ms();
                return r;
            }
        }
        associated_part.push_back(Json{{"prime", ideal_to_json(ap.prime)}, {"witness", ap.witness},
                             {"window_members", members}});
    }

    r.payload = Json{{"domain_transfer", domain_part}, {"prime_transfer", prime_part}, {"associated_transfer", associated_part}, {"scope", "window-exhaustive"}};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_submodule_transfer(const Submodule& p, const MonoidPtr& monoid,
                                     const SupportWindow& window, const VerifyOptions& options) {
    Stopwatch clock;
    require_hypotheses(*monoid, "submodule_transfer");
    validate_window(window, *monoid);
    const ModulePtr& module = p.module_ptr();
    const RingPtr& ring = module->ring_ptr();
    VerificationReport r = start_report("submodule_transfer", ring->label(), module->label(), *monoid, &window, options);
    r.config["submodule"] = submodule_to_json(p);

    const SubmoduleClassification cls = classify_submodule(p);
    Json classification{{"proper", cls.is_proper}, {"prime", cls.is_prime}, {"primary", cls.is_primary}};

    const std::uint64_t predicted = saturating_mul(window_cardinality(window, ring->size()),
                                                   window_cardinality(window, module->size()));
    if (over_budget(r, predicted, options)) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    const std::vector<Series> rs = window_series(ring, monoid, window);
    const std::vector<Series> xs = window_series(module, monoid, window);
    const Submodule whole = Submodule::whole(module);
    std::vector<char> prime_cond(rs.size()), primary_cond(rs.size());
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const Ideal c = content_ideal(rs[a]);
        prime_cond[a] = ideal_action_submodule(c, whole).is_subset_of(p);
        primary_cond[a] = prime_cond[a] || content_power_scales_into(c, p);
    }

    std::optional<Json> prime_failure, primary_failure;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        for (const Series& x : xs) {
            ++r.instances_checked;
            if (all_coefficients_in(x, p.members())) continue;
            if (!all_coefficients_in(series_multiply(rs[a], x), p.members())) continue;
            if (!prime_cond[a] && !prime_failure)
                prime_failure = pair_payload("prime", rs[a], x, "rx in P[S], x not in P[S], c(r)M not in P");
            if (!primary_cond[a] && !primary_failure)
                primary_failure = pair_payload("primary", rs[a], x,
                                               "rx in P[S], x not in P[S], no n <= |R| with c(r)^n M in P");
        }
    }

    Json payload{{"classification", classification}};
    payload["proper_transfer"] = cls.is_proper;
    if (cls.is_prime && prime_failure) {
        fail(r, *prime_failure);
    } else if (cls.is_primary && primary_failure) {
        fail(r, *primary_failure);
    } else {
        payload["prime_transfer"] = cls.is_prime ? Json("window-verified") : Json("not asserted");
        payload["primary_transfer"] = cls.is_primary ? Json("window-verified") : Json("not asserted");
        payload["prime_violation_in_window"] = prime_failure ? *prime_failure : Json(nullptr);
        payload["primary_violation_in_window"] = primary_failure ? *primary_failure : Json(nullptr);
        payload["scope"] = "window-exhaustive";
        r.payload = std::move(payload);
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_regularity(const RingPtr& ring, const ModulePtr& module,
                                             const MonoidPtr& monoid, const SupportWindow& window,
                                             const VerifyOptions& options) {
    Stopwatch clock;
    require_hypotheses(*monoid, "regularity");
    require_nonzero(*module, "regularity");
    require_same_ring(*ring, *module, "regularity");
    validate_window(window, *monoid);
    VerificationReport r = start_report("regularity", ring->label(), module->label(), *monoid, &window, options);

    const std::uint64_t nf = window_cardinality(window, ring->size());
    if (over_budget(r, saturating_mul(nf, window_cardinality(window, module->size())), options)) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }
    r.predicted_instances = nf;

    const PropertyAReport prop_a = check_property_A(module);
    const std::vector<Series> fs = window_series(ring, monoid, window);
    const std::vector<Series> gs = window_series(module, monoid, window);
    std::uint64_t regular = 0, oracle_fired = 0, oracle_silent = 0, pairs = 0;
    for (const Series& f : fs) {
        ++r.instances_checked;
        const bool content_regular = annihilator_in_module(f.coefficient_set(), module).is_zero();
        const bool zd = is_zero_divisor_series(f, module).zero_divisor;
        const Series* found = nullptr;
        for (const Series& g : gs) {
            ++pairs;
            if (!g.is_zero() && series_multiply(f, g).is_zero()) {
                found = &g;
                break;
            }
        }
        if (content_regular == zd) {
            Json p{{"f", series_to_json(f)}, {"content_regular", content_regular}, {"zero_divisor_test", zd},
                   {"detail", "content criterion and zero-divisor test disagree"}};
            fail(r, std::move(p));
            break;
        }
        if (found && content_regular) {
            fail(r, pair_payload("regularity", f, *found, "c(f) is M-regular but fg = 0 with g != 0"));
            break;
        }
        regular += content_regular;
        if (found) ++oracle_fired;
        else if (!content_regular) ++oracle_silent;
    }
    if (r.outcome == Outcome::pass) {
        r.payload = Json{{"property_A", prop_a.holds},
                         {"regular_f", regular},
                         {"zero_divisor_f", r.instances_checked - regular},
                         {"oracle_fired", oracle_fired},
                         {"oracle_silent", oracle_silent},
                         {"pairs_evaluated", pairs},
                         {"scope", "window-exhaustive"}};
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_zero_divisor_transfer(const RingPtr& ring, const ModulePtr& module,
                                                const MonoidPtr& monoid, const SupportWindow& window,
                                                const VerifyOptions& options) {
    Stopwatch clock;
    require_hypotheses(*monoid, "zd_transfer");
    require_nonzero(*module, "zd_transfer");
    require_same_ring(*ring, *module, "zd_transfer");
    validate_window(window, *monoid);
    VerificationReport r = start_report("zd_transfer", ring->label(), module->label(), *monoid, &window, options);

    const std::uint64_t nf = window_cardinality(window, ring->size());
    if (over_budget(r, nf, options)) {
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    const DecompositionOutcome outcome = decompose_zero_divisors(module);
    if (const auto* none = std::get_if<NoPrimeCover>(&outcome)) {
        fail(r, Json{{"detail", "Z_R(M) has no prime cover"}, {"uncovered", none->uncovered}});
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }
    const PrimeDecomposition& d = std::get<PrimeDecomposition>(outcome);
    const VeryFewReport very_few = has_very_few_zero_divisors(module);
    const PropertyAReport prop_a = check_property_A(module);
    const bool primal = is_primal(module).primal;

    std::vector<ExtendedIdeal> extended;
    for (const Ideal& p : d.primes) extended.push_back({p, monoid});

    // p_i[S] are pairwise incomparable: constants separate them.
    Json separators = Json::array();
    for (std::size_t i = 0; i < d.degree; ++i) {
        for (std::size_t j = 0; j < d.degree; ++j) {
            if (i == j) continue;
            const Index a = *d.separators[i][j];
            const Series c = Series::monomial_over_ring(ring, monoid, a, monoid->identity());
            if (!extended_ideal_membership(c, extended[i]) || extended_ideal_membership(c, extended[j])) {
                fail(r, Json{{"detail", "constant separator fails for p[S]"}, {"i", i}, {"j", j}});
                r.elapsed_ms = clock.elapsed_ms();
                return r;
            }
            separators.push_back(Json{{"i", i}, {"j", j}, {"element", a}});
        }
    }

    // Associated-prime witnesses for p_i, when p_i = Ann(m_i).
    std::vector<std::optional<Index>> ass_witness(d.degree);
    for (std::size_t i = 0; i < d.degree; ++i)
        for (const AssociatedPrime& ap : very_few.associated)
            if (ap.prime == d.primes[i]) ass_witness[i] = ap.witness;

    std::uint64_t zero_divisors = 0;
    std::optional<Json> failure;
    for_each_window_series(ring, monoid, window, [&](const Series& f) {
        if (failure) return;
        ++r.instances_checked;
        const bool zd = is_zero_divisor_series(f, module).zero_divisor;
        bool member = false;
        for (const ExtendedIdeal& e : extended) member = member || extended_ideal_membership(f, e);
        zero_divisors += zd;
        if (zd != member) {
            failure = Json{{"f", series_to_json(f)}, {"zero_divisor", zd}, {"in_union", member},
                           {"detail", "zero-divisor test disagrees with membership in the union of p_i[S]"}};
            return;
        }
        if (!very_few.holds) return;
        for (std::size_t i = 0; i < d.degree; ++i) {
            if (!ass_witness[i]) continue;
            const bool kills = annihilates_element(f, *module, *ass_witness[i]);
            if (kills != extended_ideal_membership(f, extended[i])) {
                failure = Json{{"f", series_to_json(f)}, {"prime_index", i}, {"m", *ass_witness[i]},
                               {"detail", "p_i[S] differs from Ann(m_i X^0) on the window"}};
                return;
            }
        }
    });
    if (failure) {
        fail(r, *failure);
        r.elapsed_ms = clock.elapsed_ms();
        return r;
    }

    Json primes = Json::array();
    for (std::size_t i = 0; i < d.degree; ++i) {
        Json entry{{"ideal", ideal_to_json(d.primes[i])}};
        entry["associated_witness"] = ass_witness[i] ? Json(*ass_witness[i]) : Json(nullptr);
        primes.push_back(std::move(entry));
    }
    r.payload = Json{{"degree", d.degree},
                     {"primes", primes},
                     {"separators", separators},
                     {"very_few", very_few.holds},
                     {"property_A", prop_a.holds},
                     {"primal", primal},
                     {"window_zero_divisors", zero_divisors},
                     {"scope", "window-exhaustive"}};
    if (primal) r.payload["primal_transfer"] = "window zero-divisors equal p_1[S] on the window";
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_zero_divisor_chain(const RingPtr& ring) {
    Stopwatch clock;
    if (ring->is_zero_ring()) throw DegenerateInputError("zd_chain: zero ring");
    VerificationReport r;
    r.statement = "zd_chain";
    r.config = Json{{"ring", ring->label()}};
    r.predicted_instances = 1;
    r.instances_checked = 1;
    const ModulePtr module = ring_as_module(ring);
    const VeryFewReport very_few = has_very_few_zero_divisors(module);
    const DecompositionOutcome outcome = decompose_zero_divisors(module);
    const auto* d = std::get_if<PrimeDecomposition>(&outcome);
    if (!very_few.holds || !d) {
        fail(r, Json{{"very_few", very_few.holds}, {"few", d != nullptr},
                     {"detail", "finite (Noetherian) ring without the expected zero-divisor cover"}});
    } else {
        Json ass = Json::array();
        for (const AssociatedPrime& a : very_few.associated)
            ass.push_back(Json{{"prime", ideal_to_json(a.prime)}, {"witness", a.witness}});
        r.payload = Json{{"noetherian", true},
                         {"very_few", true},
                         {"few", true},
                         {"degree", d->degree},
                         {"associated_primes", ass},
                         {"irreversibility", "out of scope: requires infinite rings"}};
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

}  // namespace semimod
