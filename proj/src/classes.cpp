#include "permsort/classes.hpp"

#include "permsort/errors.hpp"

#include <memory>

namespace permsort {

ClassPredicate sorted_by(const SorterSpec& spec) {
    return {"Id(" + spec.to_string() + ")", [spec](const Permutation& p) { return is_sorted_by(spec, p); }};
}

ClassPredicate avoiding(const PatternSet& ps) {
    if (ps.empty()) throw DomainError("avoidance class needs at least one pattern");
    return {"Av(" + to_string(ps) + ")", [ps](const Permutation& p) { return avoids_all(p, ps); }};
}

ClassPredicate all_permutations() {
    return {"All", [](const Permutation&) { return true; }};
}

ClassPredicate parse_class(std::string_view descriptor) {
    if (descriptor == "All") return all_permutations();
    auto inner = [&](std::string_view prefix) -> std::string_view {
        if (descriptor.size() < prefix.size() + 1 || descriptor.substr(0, prefix.size()) != prefix ||
            descriptor.back() != ')')
            return {};
        return descriptor.substr(prefix.size(), descriptor.size() - prefix.size() - 1);
    };
    if (auto body = inner("Id("); !body.empty()) return sorted_by(SorterSpec::parse(body));
    if (auto body = inner("Av("); !body.empty()) return avoiding(parse_pattern_set(body));
    throw InvalidInputError("bad class descriptor '" + std::string(descriptor) + "'");
}

ClassPredicate toggle_member(const ClassPredicate& c, const Permutation& victim) {
    auto base = c.contains;
    return {c.descriptor + "~toggle(" + to_compact_string(victim) + ")",
            [base, victim](const Permutation& p) { return p == victim ? !base(p) : base(p); }};
}

std::vector<Permutation> class_members(const ClassPredicate& c, std::size_t n, const EnumerationOptions& opts) {
    return filter_permutations(n, c.contains, opts);
}

} // namespace permsort
