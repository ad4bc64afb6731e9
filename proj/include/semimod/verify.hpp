#pragma once

// Window-exhaustive verification of the transfer statements between M and
// M[S].  Results are "window-exhaustive", never proofs.

#include <cstdint>
#include <string>
#include <vector>

#include "semimod/module.hpp"
#include "semimod/monoid.hpp"
#include "semimod/ring.hpp"
#include "semimod/serialize.hpp"
#include "semimod/window.hpp"

namespace semimod {

enum class Outcome { pass, counterexample, skipped };

std::string to_string(Outcome o);

struct VerificationReport {
    std::string statement;
    std::uint64_t instances_checked = 0;
    std::uint64_t predicted_instances = 0;
    Outcome outcome = Outcome::pass;
    // Evidence on pass, the violating instance on counterexample.
    Json payload = Json::object();
    Json config = Json::object();
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    std::uint64_t budget = 10'000'000;
};

// Dedekind-Mertens exponent, McCoy witnesses and the content criterion
// (f kills a nonzero g iff Ann_M(c(f)) != 0) over every (f, g) in the window,
// when S is cancellative and torsion-free.  Otherwise replays the matching
// counterexample construction for every nonzero q in M and confirms that no
// McCoy witness exists.
VerificationReport verify_mccoy_content(const RingPtr& ring, const ModulePtr& module,
                                   const MonoidPtr& monoid, const SupportWindow& window,
                                   const VerifyOptions& options = {});

// R domain <=> R[S] domain; p[S] prime for every prime p; p[S] = Ann(m X^0)
// for every associated p = Ann(m).  `module` may be null (no associated part).
VerificationReport verify_extended_primes(const RingPtr& ring, const ModulePtr& module,
                                     const MonoidPtr& monoid, const SupportWindow& window,
                                     const VerifyOptions& options = {});

// P prime (primary) in M => P[S] prime (primary) in M[S].
VerificationReport verify_submodule_transfer(const Submodule& p, const MonoidPtr& monoid,
                                     const SupportWindow& window, const VerifyOptions& options = {});

// f is M[S]-regular <=> c(f) is M-regular; three verdicts compared per f.
VerificationReport verify_regularity(const RingPtr& ring, const ModulePtr& module,
                                             const MonoidPtr& monoid, const SupportWindow& window,
                                             const VerifyOptions& options = {});

// Z_{R[S]}(M[S]) = p_1[S] u ... u p_n[S] on the window, with degree,
// incomparability, associated-prime and primal checks.
VerificationReport verify_zero_divisor_transfer(const RingPtr& ring, const ModulePtr& module,
                                                const MonoidPtr& monoid,
                                                const SupportWindow& window,
                                                const VerifyOptions& options = {});

// Noetherian => very few zero-divisors => few zero-divisors, on R as a
// module over itself.
VerificationReport verify_zero_divisor_chain(const RingPtr& ring);

}  // namespace semimod
