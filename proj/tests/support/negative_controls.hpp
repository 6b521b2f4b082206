#pragma once

// One-permutation mutations that each check must reject. Shared by the unit
// tests and the acceptance runner.

#include "permsort/checks.hpp"

#include <string>
#include <vector>

namespace negative_controls {

struct Mutation {
    std::string check;
    std::string descriptor;
    permsort::Permutation victim;
};

inline std::vector<Mutation> mutations() {
    using permsort::parse_permutation;
    return {
        {"characterization", "Id(S.S)", parse_permutation("1234")},
        {"enumeration", "Id(S.c.S)", parse_permutation("2341")},
        {"conj6", "Id(S.r.S)", parse_permutation("123")},
        {"conj7-enum", "Av(2-14-3,2-41-3)", parse_permutation("123")},
        {"conj7-stats", "Av(2-41-3,3-14-2)", parse_permutation("123")},
        {"rewriting", "Id(S.S)", parse_permutation("2341")},
        {"active-sites", "Id(S.i.S)", parse_permutation("123")},
        {"bijection", "Av(3214,^24135)", parse_permutation("1234")},
        {"oracles", "All", parse_permutation("123")},
    };
}

// The check's report on a context where `m.descriptor` has `m.victim`
// toggled.
inline permsort::CheckReport run_mutated(const Mutation& m, std::size_t nmax, std::size_t depth,
                                         permsort::EnumerationOptions opts = {}) {
    permsort::CheckContext ctx;
    ctx.enumeration = opts;
    ctx.overrides.emplace(m.descriptor, permsort::toggle_member(permsort::parse_class(m.descriptor), m.victim));
    return permsort::run_check(m.check, ctx, nmax, depth);
}

// True when some row failed and every failed row names a witness.
inline bool rejected_with_witness(const permsort::CheckReport& r) {
    bool any = false;
    for (const auto& row : r.rows) {
        if (row.passed) continue;
        any = true;
        if (!row.witness || row.witness->empty()) return false;
    }
    return any;
}

} // namespace negative_controls
