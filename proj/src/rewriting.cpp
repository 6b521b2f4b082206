#include "permsort/rewriting.hpp"

namespace permsort {

namespace {

std::string core_prefix(const PhiLabel& l) {
    std::string s = to_string(l);
    s.pop_back(); // reopen the tuple to append tracked fields
    return s;
}

// Walks the two R_Φ rules in successor order. `emit(label, j, i)` receives
// j = k+1 for second-rule successors.
template <typename Emit>
void for_each_phi_successor(const PhiLabel& l, Emit emit) {
    const int k = l.k();
    int prev = 0;
    for (int j = 1; j <= k; ++j) {
        const int pj = l.p[j - 1];
        for (int i = prev + 1; i <= pj; ++i) {
            PhiLabel child{2 + pj, std::vector<int>(l.p.begin(), l.p.begin() + (j - 1))};
            child.p.push_back(i);
            emit(std::move(child), j, i);
        }
        prev = pj;
    }
    for (int i = prev + 1; i <= l.x; ++i) {
        PhiLabel child{l.x + 1, l.p};
        child.p.push_back(i);
        emit(std::move(child), k + 1, i);
    }
}

} // namespace

void validate(const PhiLabel& l) {
    if (l.x < 2 || l.p.empty()) throw DomainError("invalid phi label " + to_string(l));
    int prev = 0;
    for (int v : l.p) {
        if (v < prev) throw DomainError("phi label entries must be weakly increasing: " + to_string(l));
        prev = v;
    }
    if (prev > l.x) throw DomainError("phi label entry exceeds x: " + to_string(l));
}

void validate(const PsiLabel& l) {
    if (l.r < 2 || l.s < 0) throw DomainError("invalid psi label " + to_string(l));
}

void validate(const TrackedPhiLabel& l) {
    validate(l.core);
    if (l.q < 1 || l.n < 1) throw DomainError("invalid tracked label " + to_string(l));
}

std::vector<PhiLabel> phi_successors(const PhiLabel& l) {
    validate(l);
    std::vector<PhiLabel> out;
    out.reserve(static_cast<std::size_t>(l.x));
    for_each_phi_successor(l, [&](PhiLabel child, int, int) { out.push_back(std::move(child)); });
    return out;
}

std::vector<TrackedPhiLabel> phi_lmax_successors(const TrackedPhiLabel& l) {
    validate(l);
    std::vector<TrackedPhiLabel> out;
    for_each_phi_successor(l.core, [&](PhiLabel child, int j, int i) {
        const bool topmost = j == 1 && i == 1;
        out.push_back({std::move(child), topmost ? l.q + 1 : l.q, l.n + 1});
    });
    return out;
}

std::vector<TrackedPhiLabel> phi_ldr_successors(const TrackedPhiLabel& l) {
    validate(l);
    const int delta = l.n == l.q ? 1 : 0;
    const int k = l.core.k();
    std::vector<TrackedPhiLabel> out;
    for_each_phi_successor(l.core, [&](PhiLabel child, int j, int i) {
        const bool bottommost = j == k + 1 && i == l.core.x;
        out.push_back({std::move(child), bottommost ? l.q + delta : l.q, l.n + 1});
    });
    return out;
}

std::vector<TrackedPhiLabel> phi_slmax_successors(const TrackedPhiLabel& l) {
    validate(l);
    const int delta = l.q == l.n ? 1 : 0;
    std::vector<TrackedPhiLabel> out;
    for_each_phi_successor(l.core, [&](PhiLabel child, int j, int i) {
        const bool topmost = j == 1 && i == 1;
        out.push_back({std::move(child), topmost ? l.q : l.q + delta, l.n + 1});
    });
    return out;
}

std::vector<PsiLabel> psi_successors(const PsiLabel& l) {
    validate(l);
    std::vector<PsiLabel> out;
    out.reserve(static_cast<std::size_t>(l.r + l.s));
    for (int i = 1; i <= l.r; ++i) out.push_back({i + 1, l.r + l.s - i});
    for (int j = 1; j <= l.s; ++j) out.push_back({l.r, l.s - j});
    return out;
}

std::string to_string(const TrackedPhiLabel& l) {
    return core_prefix(l.core) + ",q=" + std::to_string(l.q) + ",n=" + std::to_string(l.n) + ")";
}

RewritingSystem<PhiLabel> phi_system() {
    return {"phi", PhiLabel{2, {1}}, phi_successors, [](const PhiLabel& l) { return to_string(l); }};
}

RewritingSystem<TrackedPhiLabel> phi_lmax_system() {
    return {"phi-lmax", TrackedPhiLabel{PhiLabel{2, {1}}, 1, 1}, phi_lmax_successors, [](const TrackedPhiLabel& l) {
                return core_prefix(l.core) + "," + std::to_string(l.q) + ")";
            }};
}

RewritingSystem<TrackedPhiLabel> phi_ldr_system() {
    return {"phi-ldr", TrackedPhiLabel{PhiLabel{2, {1}}, 1, 1}, phi_ldr_successors, [](const TrackedPhiLabel& l) {
                return core_prefix(l.core) + "," + std::to_string(l.n) + "," + std::to_string(l.q) + ")";
            }};
}

RewritingSystem<TrackedPhiLabel> phi_slmax_system() {
    return {"phi-slmax", TrackedPhiLabel{PhiLabel{2, {1}}, 1, 1}, phi_slmax_successors, [](const TrackedPhiLabel& l) {
                return core_prefix(l.core) + "," + std::to_string(l.q) + "," + std::to_string(l.n) + ")";
            }};
}

RewritingSystem<PsiLabel> psi_system() {
    return {"psi", PsiLabel{2, 0}, psi_successors, [](const PsiLabel& l) { return to_string(l); }};
}

std::map<int, BigInt> tracked_stat_distribution(const RewritingSystem<TrackedPhiLabel>& sys, std::size_t depth,
                                                std::size_t max_distinct) {
    std::map<int, BigInt> marginal;
    for (const auto& [label, mult] : level_label_distribution(sys, depth, max_distinct)) marginal[label.q] += mult;
    return marginal;
}

namespace {

template <typename Label>
std::vector<std::pair<std::string, BigInt>> render(const RewritingSystem<Label>& sys, std::size_t depth) {
    std::vector<std::pair<std::string, BigInt>> out;
    for (const auto& [label, mult] : level_label_distribution(sys, depth)) out.emplace_back(sys.format(label), mult);
    return out;
}

template <typename Fn>
auto with_system(std::string_view name, Fn fn) {
    if (name == "phi") return fn(phi_system());
    if (name == "phi-lmax") return fn(phi_lmax_system());
    if (name == "phi-ldr") return fn(phi_ldr_system());
    if (name == "phi-slmax") return fn(phi_slmax_system());
    if (name == "psi") return fn(psi_system());
    throw InvalidInputError("unknown rewriting system '" + std::string(name) + "'");
}

} // namespace

std::vector<std::pair<std::string, BigInt>> named_level_distribution(std::string_view system, std::size_t depth) {
    return with_system(system, [&](const auto& sys) { return render(sys, depth); });
}

std::vector<BigInt> named_level_totals(std::string_view system, std::size_t depth) {
    return with_system(system, [&](const auto& sys) { return level_totals(sys, depth); });
}

} // namespace permsort
