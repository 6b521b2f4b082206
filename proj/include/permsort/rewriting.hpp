#pragma once

#include "permsort/errors.hpp"
#include "permsort/gentree.hpp"
#include "permsort/sequences.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permsort {

/// A PhiLabel carrying one tracked statistic q and the size n.
struct TrackedPhiLabel {
    PhiLabel core;
    int q = 1;
    int n = 1;
    auto operator<=>(const TrackedPhiLabel&) const = default;
    bool operator==(const TrackedPhiLabel&) const = default;
};

// Label invariants; throw DomainError when violated.
void validate(const PhiLabel& l);
void validate(const PsiLabel& l);
void validate(const TrackedPhiLabel& l);

// One successor per active site, first-rule labels ordered by (j, i), then
// second-rule labels by i. The i-th entry is the child through the i-th
// active site from the top.
std::vector<PhiLabel> phi_successors(const PhiLabel& l);

// Refinements tracking left-to-right maxima, the leftmost decreasing run
// and slmax in q.
std::vector<TrackedPhiLabel> phi_lmax_successors(const TrackedPhiLabel& l);
std::vector<TrackedPhiLabel> phi_ldr_successors(const TrackedPhiLabel& l);
std::vector<TrackedPhiLabel> phi_slmax_successors(const TrackedPhiLabel& l);

// r + s successors: (i+1, r+s-i) for i = 1..r, then (r, s-j) for j = 1..s.
std::vector<PsiLabel> psi_successors(const PsiLabel& l);

template <typename Label>
struct RewritingSystem {
    std::string name;
    Label root;
    std::function<std::vector<Label>(const Label&)> successors;
    std::function<std::string(const Label&)> format;
};

RewritingSystem<PhiLabel> phi_system();
RewritingSystem<TrackedPhiLabel> phi_lmax_system();
RewritingSystem<TrackedPhiLabel> phi_ldr_system();
RewritingSystem<TrackedPhiLabel> phi_slmax_system();
RewritingSystem<PsiLabel> psi_system();

template <typename Label>
using LabelDistribution = std::map<Label, BigInt>;

inline constexpr std::size_t kDefaultMaxDistinctLabels = 5'000'000;

/// Label multiplicities at level `depth` (the root is level 1). Each level is
/// obtained from the previous one by expanding every distinct label once and
/// merging equal successors, so paths are never materialized.
template <typename Label>
LabelDistribution<Label> level_label_distribution(const RewritingSystem<Label>& sys, std::size_t depth,
                                                  std::size_t max_distinct = kDefaultMaxDistinctLabels) {
    if (depth == 0) throw DomainError("depth must be at least 1");
    LabelDistribution<Label> level{{sys.root, BigInt(1)}};
    for (std::size_t d = 1; d < depth; ++d) {
        LabelDistribution<Label> next;
        for (const auto& [label, mult] : level) {
            for (auto& child : sys.successors(label)) {
                next[std::move(child)] += mult;
                if (next.size() > max_distinct)
                    throw ResourceLimitError(sys.name + ": more than " + std::to_string(max_distinct) +
                                             " distinct labels at depth " + std::to_string(d + 1));
            }
        }
        level = std::move(next);
    }
    return level;
}

template <typename Label>
BigInt level_total(const LabelDistribution<Label>& dist) {
    BigInt total = 0;
    for (const auto& [label, mult] : dist) total += mult;
    return total;
}

// Totals of levels 1..depth.
template <typename Label>
std::vector<BigInt> level_totals(const RewritingSystem<Label>& sys, std::size_t depth,
                                 std::size_t max_distinct = kDefaultMaxDistinctLabels) {
    std::vector<BigInt> totals;
    LabelDistribution<Label> level{{sys.root, BigInt(1)}};
    totals.push_back(1);
    for (std::size_t d = 1; d < depth; ++d) {
        LabelDistribution<Label> next;
        for (const auto& [label, mult] : level)
            for (auto& child : sys.successors(label)) next[std::move(child)] += mult;
        if (next.size() > max_distinct) throw ResourceLimitError(sys.name + ": too many distinct labels");
        level = std::move(next);
        totals.push_back(level_total(level));
    }
    return totals;
}

// Marginal distribution of the tracked field q at level `depth`.
std::map<int, BigInt> tracked_stat_distribution(const RewritingSystem<TrackedPhiLabel>& sys, std::size_t depth,
                                                std::size_t max_distinct = kDefaultMaxDistinctLabels);

// Names accepted on the command line.
inline constexpr std::string_view kSystemNames[] = {"phi", "phi-lmax", "phi-ldr", "phi-slmax", "psi"};

// level_label_distribution of a system chosen by name, with labels rendered
// as text, in label order.
std::vector<std::pair<std::string, BigInt>> named_level_distribution(std::string_view system, std::size_t depth);
std::vector<BigInt> named_level_totals(std::string_view system, std::size_t depth);

std::string to_string(const TrackedPhiLabel& l);

} // namespace permsort
