#pragma once

#include "permsort/enumerate.hpp"
#include "permsort/permutation.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

// Stack sorting, canonical recursive form: S(LnR) = S(L) S(R) n, S(ε) = ε.
Word stack_sort(std::span<const int> w);
// Stack sorting by simulating a single Hanoi-condition stack.
Word stack_sort_automaton(std::span<const int> w);
// T(LnR) = T(R) T(L) n.
Word tack_sort(std::span<const int> w);
// B(LnR) = B(L) R n.
Word bubble_sort(std::span<const int> w);

Permutation stack_sort(const Permutation& p);
Permutation tack_sort(const Permutation& p);
Permutation bubble_sort(const Permutation& p);

/// A composition of sorting operators and D8 symmetries, written
/// left-to-right as in "S.i.c.r.S" and applied right-to-left: the rightmost
/// step acts first. Tokens are S, T, B, e, r, c, i.
class SorterSpec {
public:
    struct Step {
        enum class Kind { Stack, Tack, Bubble, Symmetry };
        Kind kind;
        Symmetry symmetry = Symmetry::E;
        bool operator==(const Step&) const = default;
    };

    explicit SorterSpec(std::vector<Step> steps);
    static SorterSpec parse(std::string_view text);

    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::string to_string() const;

    bool operator==(const SorterSpec&) const = default;

private:
    std::vector<Step> steps_;
};

Permutation apply_sorter(const SorterSpec& spec, const Permutation& p);
bool is_sorted_by(const SorterSpec& spec, const Permutation& p);

// { p in S_n : is_sorted_by(spec, p) }, lexicographically ordered.
std::vector<Permutation> id_class(const SorterSpec& spec, std::size_t n, const EnumerationOptions& opts = {});

} // namespace permsort
