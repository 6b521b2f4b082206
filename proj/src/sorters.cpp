#include "permsort/sorters.hpp"

#include "permsort/errors.hpp"

#include <algorithm>

namespace permsort {

namespace {

std::size_t max_index(std::span<const int> w) {
    return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
}

void stack_sort_into(std::span<const int> w, Word& out) {
    if (w.empty()) return;
    const std::size_t m = max_index(w);
    stack_sort_into(w.first(m), out);
    stack_sort_into(w.subspan(m + 1), out);
    out.push_back(w[m]);
}

void tack_sort_into(std::span<const int> w, Word& out) {
    if (w.empty()) return;
    const std::size_t m = max_index(w);
    tack_sort_into(w.subspan(m + 1), out);
    tack_sort_into(w.first(m), out);
    out.push_back(w[m]);
}

void bubble_sort_into(std::span<const int> w, Word& out) {
    if (w.empty()) return;
    const std::size_t m = max_index(w);
    bubble_sort_into(w.first(m), out);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(m) + 1, w.end());
    out.push_back(w[m]);
}

} // namespace

Word stack_sort(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    stack_sort_into(w, out);
    return out;
}

Word stack_sort_automaton(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    Word stack; // back() is the top; entries increase from top to bottom
    std::size_t next = 0;
    while (next < w.size() || !stack.empty()) {
        if (next < w.size() && (stack.empty() || w[next] < stack.back())) {
            stack.push_back(w[next++]);
        } else {
            out.push_back(stack.back());
            stack.pop_back();
        }
    }
    return out;
}

Word tack_sort(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    tack_sort_into(w, out);
    return out;
}

Word bubble_sort(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    bubble_sort_into(w, out);
    return out;
}

Permutation stack_sort(const Permutation& p) { return Permutation::trusted(stack_sort(p.values())); }
Permutation tack_sort(const Permutation& p) { return Permutation::trusted(tack_sort(p.values())); }
Permutation bubble_sort(const Permutation& p) { return Permutation::trusted(bubble_sort(p.values())); }

SorterSpec::SorterSpec(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw InvalidInputError("sorter spec must have at least one step");
}

SorterSpec SorterSpec::parse(std::string_view text) {
    std::vector<Step> steps;
    std::size_t start = 0;
    while (true) {
        std::size_t dot = text.find('.', start);
        auto tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (tok == "S") steps.push_back({Step::Kind::Stack});
        else if (tok == "T") steps.push_back({Step::Kind::Tack});
        else if (tok == "B") steps.push_back({Step::Kind::Bubble});
        else if (tok == "e" || tok == "r" || tok == "c" || tok == "i")
            steps.push_back({Step::Kind::Symmetry, parse_symmetry(tok)});
        else throw InvalidInputError("unknown sorter token '" + std::string(tok) + "' in '" + std::string(text) + "'");
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return SorterSpec(std::move(steps));
}

std::string SorterSpec::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (k) out += '.';
        switch (steps_[k].kind) {
        case Step::Kind::Stack: out += 'S'; break;
        case Step::Kind::Tack: out += 'T'; break;
        case Step::Kind::Bubble: out += 'B'; break;
        case Step::Kind::Symmetry: out += permsort::to_string(steps_[k].symmetry); break;
        }
    }
    return out;
}

Permutation apply_sorter(const SorterSpec& spec, const Permutation& p) {
    Permutation cur = p;
    const auto& steps = spec.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
        case SorterSpec::Step::Kind::Stack: cur = stack_sort(cur); break;
        case SorterSpec::Step::Kind::Tack: cur = tack_sort(cur); break;
        case SorterSpec::Step::Kind::Bubble: cur = bubble_sort(cur); break;
        case SorterSpec::Step::Kind::Symmetry: cur = apply_symmetry(it->symmetry, cur); break;
        }
    }
    return cur;
}

bool is_sorted_by(const SorterSpec& spec, const Permutation& p) { return apply_sorter(spec, p).is_identity(); }

std::vector<Permutation> id_class(const SorterSpec& spec, std::size_t n, const EnumerationOptions& opts) {
    return filter_permutations(n, [&](const Permutation& p) { return is_sorted_by(spec, p); }, opts);
}

} // namespace permsort
