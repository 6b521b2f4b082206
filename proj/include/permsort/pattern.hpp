#pragma once

#include "permsort/enumerate.hpp"
#include "permsort/permutation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

/// A classical, dashed (vincular) or barred pattern.
///
/// Text grammar: one digit per letter, "-" marks a dash between two letters,
/// "^" precedes the barred letter. A string without any dash is a classical
/// pattern: "2413", "24-3-1", "3^5241" (3 5̄ 2 4 1), "2-41-3".
///
/// Internally the complement of the dashes is stored: adjacent(l) is true
/// when letters l and l+1 must occupy consecutive indices in an occurrence.
class Pattern {
public:
    enum class Kind { Classical, Dashed, Barred };

    // Classical pattern on the given letters.
    explicit Pattern(Permutation letters);
    // Dashed pattern; adjacency.size() must be letters.size() - 1.
    Pattern(Permutation letters, std::vector<bool> adjacency);
    // Barred pattern; `barred` is the 0-based position of the barred letter.
    Pattern(Permutation letters, std::size_t barred);

    static Pattern parse(std::string_view text);

    Kind kind() const noexcept;
    std::size_t size() const noexcept { return letters_.size(); }
    const Permutation& letters() const noexcept { return letters_; }
    bool adjacent(std::size_t l) const noexcept { return adjacency_[l]; }
    const std::vector<bool>& adjacency() const noexcept { return adjacency_; }
    std::optional<std::size_t> barred() const noexcept { return barred_; }

    // The normalized pattern with the barred letter deleted (π~).
    Permutation unbarred_part() const;

    std::string to_string() const;

    bool operator==(const Pattern&) const = default;

private:
    Permutation letters_;
    std::vector<bool> adjacency_;
    std::optional<std::size_t> barred_;
};

using PatternSet = std::vector<Pattern>;

// Comma-separated pattern strings, e.g. "2-41-3,3-14-2".
PatternSet parse_pattern_set(std::string_view text);
std::string to_string(const PatternSet& ps);

// 0-based index tuple i_1 < ... < i_k.
using Occurrence = std::vector<std::size_t>;

// Requires a classical pattern (DomainError otherwise).
bool contains_classical(const Permutation& p, const Pattern& pat);
// All occurrences in lexicographic index order.
std::vector<Occurrence> occurrences_classical(const Permutation& p, const Pattern& pat);

// Classical or dashed pattern.
bool contains_dashed(const Permutation& p, const Pattern& pat);

// p contains the barred pattern iff some occurrence of π~ has no extension to
// an occurrence of the full letters with the barred letter in its position.
bool contains_barred(const Permutation& p, const Pattern& pat);

// Dispatches on the pattern kind.
bool contains(const Permutation& p, const Pattern& pat);
bool avoids_all(const Permutation& p, const PatternSet& ps);

// { p in S_n : avoids_all(p, ps) }, lexicographically ordered.
std::vector<Permutation> avoidance_class(const PatternSet& ps, std::size_t n,
                                         const EnumerationOptions& opts = {});

} // namespace permsort
