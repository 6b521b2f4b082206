#include "permsort/pattern.hpp"

#include "permsort/errors.hpp"

#include <cctype>

namespace permsort {

namespace {

// Backtracking search over index tuples. `on_match` returns true to stop.
template <typename OnMatch>
class Matcher {
public:
    Matcher(const Permutation& text, const Permutation& letters, const std::vector<bool>& adjacency,
            OnMatch& on_match)
        : text_(text), letters_(letters), adjacency_(adjacency), on_match_(on_match),
          chosen_(letters.size()) {}

    // Returns true if the search was stopped by the callback.
    bool run() {
        if (letters_.size() > text_.size()) return false;
        return extend(0, 0);
    }

private:
    bool extend(std::size_t l, std::size_t from) {
        const std::size_t k = letters_.size();
        if (l == k) return on_match_(std::as_const(chosen_));
        const std::size_t last = text_.size() - (k - l);
        std::size_t lo = from;
        std::size_t hi = last;
        if (l > 0 && adjacency_[l - 1]) {
            lo = chosen_[l - 1] + 1;
            hi = std::min(hi, lo);
        }
        for (std::size_t t = lo; t <= hi; ++t) {
            if (!consistent(l, text_[t])) continue;
            chosen_[l] = t;
            if (extend(l + 1, t + 1)) return true;
        }
        return false;
    }

    bool consistent(std::size_t l, int value) const {
        for (std::size_t m = 0; m < l; ++m)
            if ((text_[chosen_[m]] < value) != (letters_[m] < letters_[l])) return false;
        return true;
    }

    const Permutation& text_;
    const Permutation& letters_;
    const std::vector<bool>& adjacency_;
    OnMatch& on_match_;
    Occurrence chosen_;
};

template <typename OnMatch>
bool search(const Permutation& text, const Permutation& letters, const std::vector<bool>& adjacency,
            OnMatch on_match) {
    return Matcher<OnMatch>(text, letters, adjacency, on_match).run();
}

void require_kind(const Pattern& pat, bool ok, const char* what) {
    if (!ok) throw DomainError(std::string(what) + ": unsupported pattern kind for '" + pat.to_string() + "'");
}

} // namespace

Pattern::Pattern(Permutation letters) : Pattern(std::move(letters), std::vector<bool>{}) {}

Pattern::Pattern(Permutation letters, std::vector<bool> adjacency)
    : letters_(std::move(letters)), adjacency_(std::move(adjacency)) {
    if (letters_.empty()) throw InvalidInputError("pattern must have at least one letter");
    if (adjacency_.empty()) adjacency_.assign(letters_.size() - 1, false);
    if (adjacency_.size() != letters_.size() - 1)
        throw InvalidInputError("pattern adjacency has the wrong length");
}

Pattern::Pattern(Permutation letters, std::size_t barred)
    : letters_(std::move(letters)), barred_(barred) {
    if (letters_.size() < 2) throw InvalidInputError("barred pattern needs at least two letters");
    if (barred >= letters_.size()) throw InvalidInputError("barred position out of range");
    adjacency_.assign(letters_.size() - 1, false);
}

Pattern Pattern::parse(std::string_view text) {
    Word letters;
    std::vector<bool> dash_before; // dash_before[l]: a dash precedes letter l (l >= 1)
    std::optional<std::size_t> barred;
    bool pending_dash = false;
    bool pending_bar = false;
    bool any_dash = false;
    for (char ch : text) {
        if (ch == '-') {
            if (letters.empty() || pending_dash || pending_bar)
                throw InvalidInputError("misplaced '-' in pattern '" + std::string(text) + "'");
            pending_dash = true;
            any_dash = true;
        } else if (ch == '^') {
            if (pending_bar || barred)
                throw InvalidInputError("at most one barred letter per pattern: '" + std::string(text) + "'");
            pending_bar = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) && ch != '0') {
            if (!letters.empty()) dash_before.push_back(pending_dash);
            if (pending_bar) barred = letters.size();
            letters.push_back(ch - '0');
            pending_dash = pending_bar = false;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw InvalidInputError("bad character in pattern '" + std::string(text) + "'");
        }
    }
    if (letters.empty() || pending_dash || pending_bar)
        throw InvalidInputError("incomplete pattern '" + std::string(text) + "'");
    Permutation perm(std::move(letters));
    if (barred) {
        if (any_dash)
            throw InvalidInputError("patterns mixing dashes and a bar are not supported: '" +
                                    std::string(text) + "'");
        return Pattern(std::move(perm), *barred);
    }
    if (!any_dash) return Pattern(std::move(perm));
    std::vector<bool> adjacency(dash_before.size());
    for (std::size_t l = 0; l < dash_before.size(); ++l) adjacency[l] = !dash_before[l];
    return Pattern(std::move(perm), std::move(adjacency));
}

Pattern::Kind Pattern::kind() const noexcept {
    if (barred_) return Kind::Barred;
    for (bool a : adjacency_)
        if (a) return Kind::Dashed;
    return Kind::Classical;
}

Permutation Pattern::unbarred_part() const {
    if (!barred_) return letters_;
    Word rest;
    for (std::size_t l = 0; l < letters_.size(); ++l)
        if (l != *barred_) rest.push_back(letters_[l]);
    return normalize(rest);
}

std::string Pattern::to_string() const {
    const bool dashed = kind() == Kind::Dashed;
    std::string out;
    for (std::size_t l = 0; l < letters_.size(); ++l) {
        if (l > 0 && dashed && !adjacency_[l - 1]) out += '-';
        if (barred_ && *barred_ == l) out += '^';
        out += std::to_string(letters_[l]);
    }
    return out;
}

PatternSet parse_pattern_set(std::string_view text) {
    PatternSet ps;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        ps.push_back(Pattern::parse(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ps;
}

std::string to_string(const PatternSet& ps) {
    std::string out;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (k) out += ',';
        out += ps[k].to_string();
    }
    return out;
}

bool contains_classical(const Permutation& p, const Pattern& pat) {
    require_kind(pat, pat.kind() == Pattern::Kind::Classical, "contains_classical");
    return search(p, pat.letters(), pat.adjacency(), [](const Occurrence&) { return true; });
}

std::vector<Occurrence> occurrences_classical(const Permutation& p, const Pattern& pat) {
    require_kind(pat, pat.kind() == Pattern::Kind::Classical, "occurrences_classical");
    std::vector<Occurrence> out;
    search(p, pat.letters(), pat.adjacency(), [&](const Occurrence& occ) {
        out.push_back(occ);
        return false;
    });
    return out;
}

bool contains_dashed(const Permutation& p, const Pattern& pat) {
    require_kind(pat, pat.kind() != Pattern::Kind::Barred, "contains_dashed");
    return search(p, pat.letters(), pat.adjacency(), [](const Occurrence&) { return true; });
}

bool contains_barred(const Permutation& p, const Pattern& pat) {
    require_kind(pat, pat.kind() == Pattern::Kind::Barred, "contains_barred");
    const std::size_t bar = *pat.barred();
    const std::size_t k = pat.size();
    const int bar_letter = pat.letters()[bar];
    const Permutation reduced = pat.unbarred_part();
    const std::vector<bool> no_adjacency(reduced.size() - 1, false);

    // Full-pattern letter sitting at reduced position m.
    auto full_letter = [&](std::size_t m) { return pat.letters()[m < bar ? m : m + 1]; };

    auto extends = [&](const Occurrence& occ) {
        const std::size_t lo = bar == 0 ? 0 : occ[bar - 1] + 1;
        const std::size_t hi = bar == k - 1 ? p.size() : occ[bar];
        for (std::size_t t = lo; t < hi; ++t) {
            bool ok = true;
            for (std::size_t m = 0; m < occ.size() && ok; ++m)
                ok = (p[t] < p[occ[m]]) == (bar_letter < full_letter(m));
            if (ok) return true;
        }
        return false;
    };
    return search(p, reduced, no_adjacency, [&](const Occurrence& occ) { return !extends(occ); });
}

bool contains(const Permutation& p, const Pattern& pat) {
    switch (pat.kind()) {
    case Pattern::Kind::Classical:
    case Pattern::Kind::Dashed:
        return contains_dashed(p, pat);
    case Pattern::Kind::Barred:
        return contains_barred(p, pat);
    }
    return false;
}

bool avoids_all(const Permutation& p, const PatternSet& ps) {
    for (const auto& pat : ps)
        if (contains(p, pat)) return false;
    return true;
}

std::vector<Permutation> avoidance_class(const PatternSet& ps, std::size_t n, const EnumerationOptions& opts) {
    if (ps.empty()) throw DomainError("avoidance class needs at least one pattern");
    return filter_permutations(n, [&](const Permutation& p) { return avoids_all(p, ps); }, opts);
}

} // namespace permsort
