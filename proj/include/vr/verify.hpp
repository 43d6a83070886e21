#pragma once

// Exhaustive identity suites for one parameter pair: algebra axioms
// over all basis triples, the distinguished-element identities, the
// polynomial identities linking P_n, the Riley polynomial and chi, and
// the residue/trace reformulation of the counit. Each failed check is
// reported by name.

#include "vr/frobenius.hpp"
#include "vr/riley.hpp"

#include <string>
#include <vector>

namespace vr {

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    void merge(const CheckReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

CheckReport verify_algebra(const Params& p);
// table checks against an externally supplied algebra (lets tests feed
// corrupted tables through the same code path)
CheckReport verify_algebra_tables(const FrobAlg& alg);

CheckReport verify_poly_identities(const Params& p);

// eps(P_n) = delta_{n,0} for every n through the residue route
CheckReport verify_residue(const Params& p);

// signature cross-checks: diagonal sum vs trace form, knot signature
// halving, and the bound |sig| <= r1
CheckReport verify_signatures(const Params& p, std::uint64_t seed);

CheckReport verify_pair(const Params& p, std::uint64_t seed, bool with_residue);

}  // namespace vr
