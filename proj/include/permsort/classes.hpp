#pragma once

#include "permsort/enumerate.hpp"
#include "permsort/pattern.hpp"
#include "permsort/permutation.hpp"
#include "permsort/sorters.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace permsort {

/// A permutation class given by a membership test and a descriptor string
/// that names it: "Id(S.S)", "Av(2-41-3,3-14-2)" or "All".
struct ClassPredicate {
    std::string descriptor;
    PermPredicate contains;

    bool operator()(const Permutation& p) const { return contains(p); }
};

ClassPredicate sorted_by(const SorterSpec& spec);
ClassPredicate avoiding(const PatternSet& ps);
ClassPredicate all_permutations();

// Parses a descriptor: "Id(<sorter spec>)", "Av(<patterns>)" or "All".
ClassPredicate parse_class(std::string_view descriptor);

// The same class with the membership of `victim` flipped: removes it if it
// was a member, adds it otherwise. Used as a negative control.
ClassPredicate toggle_member(const ClassPredicate& c, const Permutation& victim);

std::vector<Permutation> class_members(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts = {});

// Classes that recur throughout the checks.
namespace classes {
inline constexpr std::string_view kTwoStack = "Id(S.S)";
inline constexpr std::string_view kSrS = "Id(S.r.S)";
inline constexpr std::string_view kScS = "Id(S.c.S)";
inline constexpr std::string_view kSiS = "Id(S.i.S)";
inline constexpr std::string_view kMaxSplit = "Av(2-14-3,2-41-3)";
inline constexpr std::string_view kBaxter = "Av(2-41-3,3-14-2)";
} // namespace classes

} // namespace permsort
