#include "permsort/statistics.hpp"

#include "permsort/errors.hpp"

#include <array>

namespace permsort {

namespace {

constexpr std::array<std::string_view, std::size(kAllStats)> kStatNames = {
    "des",  "maj",  "comp", "rmax", "rmin", "lmax", "lmin", "valley", "peak",
    "ddes", "dasc", "rir",  "rdr",  "lir",  "ldr",  "indmax", "zeil", "slmax",
};

int descents(std::span<const int> w) {
    int count = 0;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) count += w[k] > w[k + 1];
    return count;
}

int major_index(std::span<const int> w) {
    int sum = 0;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) sum += static_cast<int>(k + 1);
    return sum;
}

int components(std::span<const int> w) {
    int count = 0;
    int prefix_max = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        prefix_max = std::max(prefix_max, w[k]);
        count += prefix_max == static_cast<int>(k + 1);
    }
    return count;
}

template <typename Better>
int left_records(std::span<const int> w, Better better) {
    if (w.empty()) return 0;
    int count = 1;
    int best = w[0];
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (better(w[k], best)) {
            best = w[k];
            ++count;
        }
    }
    return count;
}

template <typename Better>
int right_records(std::span<const int> w, Better better) {
    if (w.empty()) return 0;
    int count = 1;
    int best = w.back();
    for (std::size_t k = w.size() - 1; k-- > 0;) {
        if (better(w[k], best)) {
            best = w[k];
            ++count;
        }
    }
    return count;
}

// Interior positions whose two neighbours satisfy the given shape.
template <typename Shape>
int interior(std::span<const int> w, Shape shape) {
    int count = 0;
    for (std::size_t k = 1; k + 1 < w.size(); ++k) count += shape(w[k - 1], w[k], w[k + 1]);
    return count;
}

template <typename Step>
int leading_run(std::span<const int> w, Step step) {
    if (w.empty()) return 0;
    int len = 1;
    for (std::size_t k = 1; k < w.size() && step(w[k - 1], w[k]); ++k) ++len;
    return len;
}

template <typename Step>
int trailing_run(std::span<const int> w, Step step) {
    if (w.empty()) return 0;
    int len = 1;
    for (std::size_t k = w.size() - 1; k > 0 && step(w[k - 1], w[k]); --k) ++len;
    return len;
}

int index_of_max(std::span<const int> w) {
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == static_cast<int>(w.size())) return static_cast<int>(k + 1);
    return 0;
}

int zeilberger(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return 0;
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = k;
    int k = 1;
    while (k < n && pos[n - k] > pos[n - k + 1]) ++k;
    return k;
}

int starts_below_first(std::span<const int> w) {
    if (w.empty()) return 0;
    int k = 1;
    while (static_cast<std::size_t>(k) < w.size() && w[k] <= w[0]) ++k;
    return k;
}

const auto kLess = [](int a, int b) { return a < b; };
const auto kGreater = [](int a, int b) { return a > b; };

} // namespace

std::string_view to_string(StatName s) noexcept { return kStatNames[static_cast<std::size_t>(s)]; }

StatName parse_stat_name(std::string_view name) {
    for (std::size_t k = 0; k < kStatNames.size(); ++k)
        if (kStatNames[k] == name) return static_cast<StatName>(k);
    throw DomainError("unknown statistic '" + std::string(name) + "'");
}

std::vector<StatName> parse_stat_names(std::string_view text) {
    if (text == "conj6") return {std::begin(kFifteenTuple), std::end(kFifteenTuple)};
    if (text == "conj7") return {std::begin(kDesLmaxComp), std::end(kDesLmaxComp)};
    std::vector<StatName> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_stat_name(
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int stat(StatName name, const Permutation& p) {
    const auto w = p.values();
    switch (name) {
    case StatName::Des: return descents(w);
    case StatName::Maj: return major_index(w);
    case StatName::Comp: return components(w);
    case StatName::Rmax: return right_records(w, kGreater);
    case StatName::Rmin: return right_records(w, kLess);
    case StatName::Lmax: return left_records(w, kGreater);
    case StatName::Lmin: return left_records(w, kLess);
    case StatName::Valley: return interior(w, [](int a, int b, int c) { return a > b && b < c; });
    case StatName::Peak: return interior(w, [](int a, int b, int c) { return a < b && b > c; });
    case StatName::Ddes: return interior(w, [](int a, int b, int c) { return a > b && b > c; });
    case StatName::Dasc: return interior(w, [](int a, int b, int c) { return a < b && b < c; });
    case StatName::Rir: return trailing_run(w, kLess);
    case StatName::Rdr: return trailing_run(w, kGreater);
    case StatName::Lir: return leading_run(w, kLess);
    case StatName::Ldr: return leading_run(w, kGreater);
    case StatName::Indmax: return index_of_max(w);
    case StatName::Zeil: return zeilberger(w);
    case StatName::Slmax: return starts_below_first(w);
    }
    throw DomainError("unknown statistic");
}

StatVector stat_vector(std::span<const StatName> names, const Permutation& p) {
    StatVector v;
    v.reserve(names.size());
    for (StatName s : names) v.push_back(stat(s, p));
    return v;
}

Distribution distribution(std::span<const StatName> names, std::span<const Permutation> perms) {
    Distribution dist;
    for (const auto& p : perms) ++dist[stat_vector(names, p)];
    return dist;
}

std::string distribution_csv(std::span<const StatName> names, const Distribution& dist) {
    std::string out;
    for (StatName s : names) {
        out += to_string(s);
        out += ',';
    }
    out += "count\n";
    for (const auto& [vec, count] : dist) {
        for (int v : vec) {
            out += std::to_string(v);
            out += ',';
        }
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

} // namespace permsort
