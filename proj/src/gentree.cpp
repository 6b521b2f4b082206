#include "permsort/gentree.hpp"

#include "permsort/errors.hpp"

#include <algorithm>

namespace permsort {

namespace {

void require_member(const Permutation& p, const ClassPredicate& c) {
    if (!c(p)) throw PreconditionError(to_compact_string(p) + " is not in " + c.descriptor);
}

std::vector<bool> left_to_right_maxima(const Permutation& p) {
    std::vector<bool> is_max(p.size(), false);
    int best = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > best) {
            best = p[k];
            is_max[k] = true;
        }
    }
    return is_max;
}

// Right-to-left maxima values, left to right (hence decreasing).
std::vector<int> right_to_left_maxima(const Permutation& p) {
    std::vector<int> out;
    int best = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] > best) {
            best = p[k];
            out.push_back(p[k]);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::size_t position_of(const Permutation& p, int value) {
    return static_cast<std::size_t>(std::find(p.word().begin(), p.word().end(), value) - p.word().begin());
}

// 1-based site index just above value m under the Rightmost numbering.
std::size_t rightmost_site_above(std::size_t n, int m) { return n + 1 - static_cast<std::size_t>(m); }

} // namespace

std::string_view to_string(InsertionRule rule) noexcept {
    switch (rule) {
    case InsertionRule::Largest: return "largest";
    case InsertionRule::Smallest: return "smallest";
    case InsertionRule::Rightmost: return "rightmost";
    case InsertionRule::Leftmost: return "leftmost";
    }
    return "?";
}

InsertionRule parse_insertion_rule(std::string_view text) {
    for (auto rule : {InsertionRule::Largest, InsertionRule::Smallest, InsertionRule::Rightmost, InsertionRule::Leftmost})
        if (to_string(rule) == text) return rule;
    throw InvalidInputError("unknown insertion rule '" + std::string(text) + "'");
}

std::vector<Site> sites(const Permutation& p, InsertionRule rule) {
    std::vector<Site> out;
    out.reserve(p.size() + 1);
    for (std::size_t k = 1; k <= p.size() + 1; ++k) out.push_back({rule, k});
    return out;
}

Permutation insert(const Permutation& p, Site site) {
    const std::size_t n = p.size();
    if (site.index < 1 || site.index > n + 1)
        throw DomainError("site index " + std::to_string(site.index) + " out of range for size " + std::to_string(n));
    const auto& w = p.word();
    Word out;
    out.reserve(n + 1);
    switch (site.rule) {
    case InsertionRule::Largest:
        out.assign(w.begin(), w.end());
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(site.index - 1), static_cast<int>(n + 1));
        break;
    case InsertionRule::Smallest:
        for (int v : w) out.push_back(v + 1);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(site.index - 1), 1);
        break;
    case InsertionRule::Rightmost: {
        const int v = static_cast<int>(n + 2 - site.index);
        for (int u : w) out.push_back(u >= v ? u + 1 : u);
        out.push_back(v);
        break;
    }
    case InsertionRule::Leftmost: {
        const int v = static_cast<int>(site.index);
        out.push_back(v);
        for (int u : w) out.push_back(u >= v ? u + 1 : u);
        break;
    }
    }
    return Permutation::trusted(std::move(out));
}

Permutation remove_extreme(const Permutation& p, InsertionRule rule) {
    if (p.empty()) throw DomainError("the empty permutation has no parent");
    const auto& w = p.word();
    std::size_t at = 0;
    switch (rule) {
    case InsertionRule::Largest: at = position_of(p, static_cast<int>(p.size())); break;
    case InsertionRule::Smallest: at = position_of(p, 1); break;
    case InsertionRule::Rightmost: at = p.size() - 1; break;
    case InsertionRule::Leftmost: at = 0; break;
    }
    const int removed = w[at];
    Word out;
    out.reserve(p.size() - 1);
    for (std::size_t k = 0; k < w.size(); ++k)
        if (k != at) out.push_back(w[k] > removed ? w[k] - 1 : w[k]);
    return Permutation::trusted(std::move(out));
}

std::vector<bool> activity(const Permutation& p, InsertionRule rule, const ClassPredicate& c) {
    require_member(p, c);
    std::vector<bool> flags(p.size() + 1);
    for (std::size_t k = 1; k <= p.size() + 1; ++k) flags[k - 1] = c(insert(p, {rule, k}));
    return flags;
}

std::vector<Site> active_sites(const Permutation& p, InsertionRule rule, const ClassPredicate& c) {
    const auto flags = activity(p, rule, c);
    std::vector<Site> out;
    for (std::size_t k = 0; k < flags.size(); ++k)
        if (flags[k]) out.push_back({rule, k + 1});
    return out;
}

std::vector<Permutation> children(const Permutation& p, InsertionRule rule, const ClassPredicate& c) {
    require_member(p, c);
    std::vector<Permutation> out;
    for (const Site& s : sites(p, rule)) {
        Permutation child = insert(p, s);
        if (c(child)) out.push_back(std::move(child));
    }
    return out;
}

std::optional<Permutation> closure_counterexample(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                                  const EnumerationOptions& opts) {
    for (std::size_t n = 2; n <= nmax; ++n) {
        auto bad = filter_permutations(
            n, [&](const Permutation& p) { return c(p) && !c(remove_extreme(p, rule)); }, opts);
        if (!bad.empty()) return bad.front();
    }
    return std::nullopt;
}

bool verify_closure(const ClassPredicate& c, InsertionRule rule, std::size_t nmax, const EnumerationOptions& opts) {
    return !closure_counterexample(c, rule, nmax, opts).has_value();
}

std::vector<std::vector<Permutation>> tree_levels(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                                  const EnumerationOptions& opts) {
    std::vector<std::vector<Permutation>> levels;
    if (nmax == 0) return levels;
    const Permutation root = Permutation::identity(1);
    require_member(root, c);
    levels.push_back({root});
    while (levels.size() < nmax) {
        const auto& parents = levels.back();
        std::vector<std::vector<Permutation>> grouped(parents.size());
        parallel_for(parents.size(), opts.threads,
                     [&](std::size_t k) { grouped[k] = children(parents[k], rule, c); });
        std::vector<Permutation> next;
        for (auto& g : grouped) std::move(g.begin(), g.end(), std::back_inserter(next));
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<std::size_t> level_counts(const ClassPredicate& c, InsertionRule rule, std::size_t nmax,
                                      const EnumerationOptions& opts) {
    if (auto bad = closure_counterexample(c, rule, nmax, opts))
        throw IntegrityError(c.descriptor + " is not closed under " + std::string(to_string(rule)) +
                             " removal: witness " + to_compact_string(*bad));
    std::vector<std::size_t> counts;
    for (const auto& level : tree_levels(c, rule, nmax, opts)) counts.push_back(level.size());
    return counts;
}

std::string to_string(const PhiLabel& l) {
    std::string out = "(" + std::to_string(l.x) + "," + std::to_string(l.k()) + ",(";
    for (std::size_t j = 0; j < l.p.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(l.p[j]);
    }
    return out + "))";
}

std::string to_string(const PsiLabel& l) { return "(" + std::to_string(l.r) + "," + std::to_string(l.s) + ")"; }

PhiLabel phi_label_of(const Permutation& p, const ClassPredicate& c) {
    const auto flags = activity(p, InsertionRule::Rightmost, c);
    PhiLabel label;
    label.x = static_cast<int>(std::count(flags.begin(), flags.end(), true));
    for (int m : right_to_left_maxima(p)) {
        const std::size_t top = rightmost_site_above(p.size(), m);
        label.p.push_back(static_cast<int>(std::count(flags.begin(), flags.begin() + static_cast<std::ptrdiff_t>(top), true)));
    }
    return label;
}

InsertionRule rule_for(PsiReading reading) noexcept {
    return reading == PsiReading::FirstAscent ? InsertionRule::Smallest : InsertionRule::Largest;
}

PsiLabel psi_label_of(const Permutation& p, const ClassPredicate& c, PsiReading reading) {
    const auto flags = activity(p, rule_for(reading), c);
    const std::size_t n = p.size();
    auto active_in = [&](std::size_t from, std::size_t to) { // 1-based inclusive
        int count = 0;
        for (std::size_t k = from; k <= to && k <= n + 1; ++k) count += flags[k - 1];
        return count;
    };
    PsiLabel label;
    if (reading == PsiReading::FirstAscent) {
        std::size_t r = n + 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (p[k] < p[k + 1]) {
                r = k + 2;
                break;
            }
        }
        label.r = static_cast<int>(r);
        label.s = active_in(r + 1, n + 1);
    } else {
        const std::size_t m = position_of(p, static_cast<int>(n)); // 0-based; sites 1..m+1 are left of n
        label.r = active_in(1, m + 1) + 1;
        label.s = active_in(m + 2, n + 1) - 1;
    }
    return label;
}

namespace criteria {

namespace {

std::vector<std::size_t> with_sites_above_maxima(const Permutation& p, std::vector<std::size_t> base) {
    for (int m : right_to_left_maxima(p)) base.push_back(rightmost_site_above(p.size(), m));
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
}

} // namespace

std::vector<std::size_t> forced_active_two_stack(const Permutation& p) {
    std::vector<std::size_t> base;
    for (std::size_t k = 1; k <= 3 && k <= p.size() + 1; ++k) base.push_back(k);
    return with_sites_above_maxima(p, std::move(base));
}

std::vector<std::size_t> forced_active_srs(const Permutation& p) {
    return with_sites_above_maxima(p, {p.size() + 1});
}

bool sis_site_inactive(const Permutation& p, std::size_t index) {
    const std::size_t gap = index - 1; // letters before the gap
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[j] <= p[i]) continue;
            for (std::size_t l = j + 1; l < n; ++l)
                if (p[l] < p[i] && j < gap && gap <= l + 1) return true;
        }
    return false;
}

bool max_split_left_site_active(const Permutation& p, std::size_t index) {
    const std::size_t gap = index - 1;
    const auto is_max = left_to_right_maxima(p);
    if (gap >= p.size()) throw DomainError("site is not left of the maximum");
    return (gap == 0 || is_max[gap - 1]) && is_max[gap];
}

} // namespace criteria

} // namespace permsort
