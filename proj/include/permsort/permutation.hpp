#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsort {

// A word of distinct integers. Sorting operators destructure permutations
// into factors that are not themselves permutations, so they work on Words.
using Word = std::vector<int>;

// One-line notation of a bijection on {1..n}. Entry k (0-based) holds the
// value at 1-based index k+1. The empty permutation exists only as the base
// case of the recursive sorting operators.
class Permutation {
public:
    Permutation() = default;

    // Throws InvalidInputError unless `word` is a bijection on {1..size}.
    explicit Permutation(Word word);
    Permutation(std::initializer_list<int> values);

    // Skips validation; caller guarantees the bijection invariant.
    static Permutation trusted(Word word) noexcept;

    static Permutation identity(std::size_t n);
    static Permutation decreasing(std::size_t n);

    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }

    // 0-based access: operator[](k) is the value at index k+1.
    int operator[](std::size_t k) const noexcept { return word_[k]; }
    const Word& word() const noexcept { return word_; }
    std::span<const int> values() const noexcept { return word_; }

    bool is_identity() const noexcept;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    Word word_;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// Order-isomorphic permutation of a word of distinct integers. The empty word
// normalizes to the empty permutation. Throws InvalidInputError on duplicates.
Permutation normalize(std::span<const int> w);

// The eight symmetries of the square. A composite name such as IC means
// i∘c: c is applied first.
enum class Symmetry : std::uint8_t { E, R, C, I, RC, IR, IC, ICR };

inline constexpr std::size_t kSymmetryCount = 8;
inline constexpr Symmetry kAllSymmetries[kSymmetryCount] = {
    Symmetry::E,  Symmetry::R,  Symmetry::C,  Symmetry::I,
    Symmetry::RC, Symmetry::IR, Symmetry::IC, Symmetry::ICR,
};

// compose(a, b) = a∘b, i.e. b applied first.
Symmetry compose(Symmetry a, Symmetry b) noexcept;
Symmetry inverse(Symmetry a) noexcept;

Permutation apply_symmetry(Symmetry alpha, const Permutation& p);

// Canonical names: "e", "r", "c", "i", "r.c", "i.r", "i.c", "i.c.r".
std::string_view to_string(Symmetry s) noexcept;
// Accepts any "."-joined string of generators e/r/c/i and reduces it.
Symmetry parse_symmetry(std::string_view text);

// "4 1 6 2 5 3", or the compact "416253" when n <= 9.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);
std::string to_compact_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace permsort

template <>
struct std::hash<permsort::Permutation> {
    std::size_t operator()(const permsort::Permutation& p) const noexcept;
};
