#pragma once

#include "permsort/classes.hpp"
#include "permsort/enumerate.hpp"
#include "permsort/permutation.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

// Which extreme element a child adds to its parent.
enum class InsertionRule { Largest, Smallest, Rightmost, Leftmost };

std::string_view to_string(InsertionRule rule) noexcept;
InsertionRule parse_insertion_rule(std::string_view text);

/// An insertion position. `index` is 1-based in the canonical order of the
/// rule: Largest and Smallest number gaps left to right, Leftmost numbers
/// value slots bottom to top, Rightmost numbers value slots top to bottom.
struct Site {
    InsertionRule rule;
    std::size_t index;
    bool operator==(const Site&) const = default;
};

// The n+1 sites of p in canonical order.
std::vector<Site> sites(const Permutation& p, InsertionRule rule);

// Throws DomainError for an index outside 1..n+1.
Permutation insert(const Permutation& p, Site site);

// The parent: remove the rule's extreme element and normalize.
Permutation remove_extreme(const Permutation& p, InsertionRule rule);

// Sites whose insertion stays in c, in canonical order. PreconditionError
// when p is not in c.
std::vector<Site> active_sites(const Permutation& p, InsertionRule rule, const ClassPredicate& c);
std::vector<Permutation> children(const Permutation& p, InsertionRule rule, const ClassPredicate& c);

// Per-site activity flags, indexed by canonical site index - 1.
std::vector<bool> activity(const Permutation& p, InsertionRule rule, const ClassPredicate& c);

// First member of c of size 2..nmax whose parent leaves c, if any.
std::optional<Permutation> closure_counterexample(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                                  const EnumerationOptions& opts = {});
bool verify_closure(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                    const EnumerationOptions& opts = {});

// Levels 1..nmax of the generating tree, built breadth-first from the root 1.
// Parents expand concurrently; each level keeps canonical parent order.
std::vector<std::vector<Permutation>> tree_levels(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                                  const EnumerationOptions& opts = {});

// counts[n-1] = number of tree vertices of size n. Throws IntegrityError if
// the class is not closed under the rule's parent removal up to nmax.
std::vector<std::size_t> level_counts(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                      const EnumerationOptions& opts = {});

/// Label (x, k, (p_1..p_k)) for Rightmost insertion: x active sites, k
/// right-to-left maxima, p_l active sites above the l-th right-to-left
/// maximum counted from the largest.
struct PhiLabel {
    int x = 0;
    std::vector<int> p;

    int k() const noexcept { return static_cast<int>(p.size()); }
    auto operator<=>(const PhiLabel&) const = default;
    bool operator==(const PhiLabel&) const = default;
};

/// Label (r, s) of the Baxter-counted trees.
struct PsiLabel {
    int r = 0;
    int s = 0;
    auto operator<=>(const PsiLabel&) const = default;
    bool operator==(const PsiLabel&) const = default;
};

std::string to_string(const PhiLabel& l);
std::string to_string(const PsiLabel& l);

PhiLabel phi_label_of(const Permutation& p, const ClassPredicate& c);

// How (r, s) is read off a permutation.
enum class PsiReading {
    // Smallest insertion: r is the index of the second letter of the first
    // ascent (n+1 if none), s counts active sites right of that ascent.
    FirstAscent,
    // Largest insertion: r is one more than the active sites left of n,
    // s is one less than the active sites right of n.
    AroundMaximum,
};

PsiLabel psi_label_of(const Permutation& p, const ClassPredicate& c, PsiReading reading);

InsertionRule rule_for(PsiReading reading) noexcept;

// Closed-form active-site criteria. Each is an independent statement about
// the definitional activity() and is only used to cross-check it.
namespace criteria {

// Rightmost sites of a two-stack-sortable permutation that must be active:
// sites 1, 2, 3 and the site just above every right-to-left maximum.
std::vector<std::size_t> forced_active_two_stack(const Permutation& p);
// Same for Id(S.r.S): the last site and the site above every
// right-to-left maximum.
std::vector<std::size_t> forced_active_srs(const Permutation& p);

// Smallest insertion into Id(S.i.S): the gap is inactive iff some
// subsequence b c a with a < b < c has the gap between c and a or right
// after a. `index` is the canonical 1-based site index.
bool sis_site_inactive(const Permutation& p, std::size_t index);

// Largest insertion into Av(2-14-3, 2-41-3), site left of n: active iff
// both neighbours of the gap that exist are left-to-right maxima.
bool max_split_left_site_active(const Permutation& p, std::size_t index);

} // namespace criteria

} // namespace permsort
