#pragma once

#include "permsort/permutation.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

enum class StatName {
    Des,    // descents
    Maj,    // sum of descent indices
    Comp,   // components
    Rmax,   // right-to-left maxima
    Rmin,   // right-to-left minima
    Lmax,   // left-to-right maxima
    Lmin,   // left-to-right minima
    Valley, // interior i with p[i-1] > p[i] < p[i+1]
    Peak,   // interior i with p[i-1] < p[i] > p[i+1]
    Ddes,   // interior i with p[i-1] > p[i] > p[i+1]
    Dasc,   // interior i with p[i-1] < p[i] < p[i+1]
    Rir,    // length of the rightmost increasing run
    Rdr,    // length of the rightmost decreasing run
    Lir,    // length of the leftmost increasing run
    Ldr,    // length of the leftmost decreasing run
    Indmax, // 1-based index of n
    Zeil,   // largest k with n (n-1) ... (n-k+1) a subsequence
    Slmax,  // largest k with p[1] >= p[i] for all i <= k
};

inline constexpr StatName kAllStats[] = {
    StatName::Des,    StatName::Maj,  StatName::Comp, StatName::Rmax, StatName::Rmin, StatName::Lmax,
    StatName::Lmin,   StatName::Valley, StatName::Peak, StatName::Ddes, StatName::Dasc, StatName::Rir,
    StatName::Rdr,    StatName::Lir,  StatName::Ldr,  StatName::Indmax, StatName::Zeil, StatName::Slmax,
};

// The statistic tuple shared by the two-stack-sortable and S.r.S classes.
inline constexpr StatName kFifteenTuple[] = {
    StatName::Des,  StatName::Maj,  StatName::Rmax,   StatName::Lmax, StatName::Valley,
    StatName::Peak, StatName::Ddes, StatName::Dasc,   StatName::Zeil, StatName::Indmax,
    StatName::Rir,  StatName::Rdr,  StatName::Lir,    StatName::Ldr,  StatName::Slmax,
};

inline constexpr StatName kDesLmaxComp[] = {StatName::Des, StatName::Lmax, StatName::Comp};

std::string_view to_string(StatName s) noexcept;
// Throws DomainError for an unknown name.
StatName parse_stat_name(std::string_view name);
// Comma-separated names, or "conj6" / "conj7" for the two standard tuples.
std::vector<StatName> parse_stat_names(std::string_view text);

int stat(StatName name, const Permutation& p);

using StatVector = std::vector<int>;
StatVector stat_vector(std::span<const StatName> names, const Permutation& p);

// Multiset of statistic vectors, keyed in lexicographic order.
using Distribution = std::map<StatVector, std::uint64_t>;

Distribution distribution(std::span<const StatName> names, std::span<const Permutation> perms);

// Header "name1,name2,...,count" followed by one sorted row per vector.
std::string distribution_csv(std::span<const StatName> names, const Distribution& dist);

} // namespace permsort
