#include "permsort/permutation.hpp"

#include "permsort/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permsort {

namespace {

bool is_bijection(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        if (v < 1 || static_cast<std::size_t>(v) > w.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Each symmetry acts on diagram points (x, y): optionally swap the
// coordinates, then optionally mirror each one.
struct PointMap {
    bool swap;
    bool flip_x;
    bool flip_y;
};

constexpr std::array<PointMap, kSymmetryCount> kPointMaps = {{
    {false, false, false}, // e
    {false, true, false},  // r
    {false, false, true},  // c
    {true, false, false},  // i
    {false, true, true},   // r.c
    {true, false, true},   // i.r
    {true, true, false},   // i.c
    {true, true, true},    // i.c.r
}};

constexpr std::pair<int, int> map_point(PointMap m, int x, int y, int n) {
    if (m.swap) std::swap(x, y);
    if (m.flip_x) x = n + 1 - x;
    if (m.flip_y) y = n + 1 - y;
    return {x, y};
}

// The orbit of (1, 2) inside a 4x4 grid separates all eight elements.
constexpr std::size_t identify(std::pair<int, int> image) {
    for (std::size_t k = 0; k < kSymmetryCount; ++k)
        if (map_point(kPointMaps[k], 1, 2, 4) == image) return k;
    return kSymmetryCount;
}

constexpr auto build_composition_table() {
    std::array<std::array<Symmetry, kSymmetryCount>, kSymmetryCount> table{};
    for (std::size_t a = 0; a < kSymmetryCount; ++a) {
        for (std::size_t b = 0; b < kSymmetryCount; ++b) {
            auto [x, y] = map_point(kPointMaps[b], 1, 2, 4);
            table[a][b] = static_cast<Symmetry>(identify(map_point(kPointMaps[a], x, y, 4)));
        }
    }
    return table;
}

constexpr auto kComposition = build_composition_table();

constexpr std::array<std::string_view, kSymmetryCount> kSymmetryNames = {
    "e", "r", "c", "i", "r.c", "i.r", "i.c", "i.c.r",
};

} // namespace

Permutation::Permutation(Word word) : word_(std::move(word)) {
    if (!is_bijection(word_))
        throw InvalidInputError("not a permutation of 1..n");
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(Word(values)) {}

Permutation Permutation::trusted(Word word) noexcept {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::identity(std::size_t n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    return trusted(std::move(w));
}

Permutation Permutation::decreasing(std::size_t n) {
    Word w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<int>(n - k);
    return trusted(std::move(w));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t k = 0; k < word_.size(); ++k)
        if (word_[k] != static_cast<int>(k + 1)) return false;
    return true;
}

Permutation reverse(const Permutation& p) {
    Word w(p.word().rbegin(), p.word().rend());
    return Permutation::trusted(std::move(w));
}

Permutation complement(const Permutation& p) {
    const int n1 = static_cast<int>(p.size()) + 1;
    Word w(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) w[k] = n1 - p[k];
    return Permutation::trusted(std::move(w));
}

Permutation inverse(const Permutation& p) {
    Word w(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) w[p[k] - 1] = static_cast<int>(k + 1);
    return Permutation::trusted(std::move(w));
}

Permutation normalize(std::span<const int> w) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Word out(w.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && w[order[rank]] == w[order[rank - 1]])
            throw InvalidInputError("word has duplicate entries");
        out[order[rank]] = static_cast<int>(rank + 1);
    }
    return Permutation::trusted(std::move(out));
}

Symmetry compose(Symmetry a, Symmetry b) noexcept {
    return kComposition[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Symmetry inverse(Symmetry a) noexcept {
    for (Symmetry b : kAllSymmetries)
        if (compose(a, b) == Symmetry::E) return b;
    return Symmetry::E; // unreachable: the table is a group
}

Permutation apply_symmetry(Symmetry alpha, const Permutation& p) {
    const PointMap m = kPointMaps[static_cast<std::size_t>(alpha)];
    const int n = static_cast<int>(p.size());
    Word w(p.size());
    for (int x = 1; x <= n; ++x) {
        auto [nx, ny] = map_point(m, x, p[x - 1], n);
        w[nx - 1] = ny;
    }
    return Permutation::trusted(std::move(w));
}

std::string_view to_string(Symmetry s) noexcept {
    return kSymmetryNames[static_cast<std::size_t>(s)];
}

Symmetry parse_symmetry(std::string_view text) {
    Symmetry acc = Symmetry::E;
    bool any = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        std::string_view tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        Symmetry g;
        if (tok == "e") g = Symmetry::E;
        else if (tok == "r") g = Symmetry::R;
        else if (tok == "c") g = Symmetry::C;
        else if (tok == "i") g = Symmetry::I;
        else throw InvalidInputError("unknown symmetry generator '" + std::string(tok) + "'");
        acc = compose(acc, g);
        any = true;
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    if (!any) throw InvalidInputError("empty symmetry");
    return acc;
}

Permutation parse_permutation(std::string_view text) {
    Word w;
    const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
    if (spaced) {
        std::string s(text);
        for (char& ch : s)
            if (ch == ',') ch = ' ';
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw InvalidInputError("bad permutation entry '" + tok + "'");
            }
            if (used != tok.size()) throw InvalidInputError("bad permutation entry '" + tok + "'");
            w.push_back(v);
        }
    } else {
        if (text.size() > 9)
            throw InvalidInputError("compact permutation form requires n <= 9");
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw InvalidInputError("bad permutation character");
            w.push_back(ch - '0');
        }
    }
    if (w.empty()) throw InvalidInputError("empty permutation");
    return Permutation(std::move(w));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(p[k]);
    }
    return out;
}

std::string to_compact_string(const Permutation& p) {
    if (p.size() > 9) return to_string(p);
    std::string out;
    for (int v : p.word()) out += static_cast<char>('0' + v);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << to_compact_string(p);
}

} // namespace permsort

std::size_t std::hash<permsort::Permutation>::operator()(const permsort::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.word()) h = h * 1315423911u + static_cast<std::size_t>(v);
    return h;
}
