#include "permsort/enumerate.hpp"

#include "permsort/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>

namespace permsort {

void check_enumeration_cap(std::size_t n, const EnumerationOptions& opts) {
    if (n == 0) throw DomainError("enumeration size must be at least 1");
    if (n > opts.cap)
        throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the enumeration cap of " +
                                 std::to_string(opts.cap));
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation::trusted(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) {
                    try {
                        body(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

namespace {

// All members of S_n whose first letter is `first`, lexicographically.
std::vector<Permutation> filter_part(std::size_t n, int first, const PermPredicate& pred) {
    std::vector<Permutation> out;
    Word w(n);
    w[0] = first;
    for (std::size_t k = 1, v = 1; k < n; ++v) {
        if (static_cast<int>(v) == first) continue;
        w[k++] = static_cast<int>(v);
    }
    do {
        Permutation p = Permutation::trusted(w);
        if (pred(p)) out.push_back(std::move(p));
    } while (std::next_permutation(w.begin() + 1, w.end()));
    return out;
}

} // namespace

std::vector<Permutation> filter_permutations(std::size_t n, const PermPredicate& pred,
                                             const EnumerationOptions& opts) {
    check_enumeration_cap(n, opts);
    std::vector<std::vector<Permutation>> parts(n);
    parallel_for(n, opts.threads, [&](std::size_t f) { parts[f] = filter_part(n, static_cast<int>(f + 1), pred); });

    std::vector<Permutation> out;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    out.reserve(total);
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

} // namespace permsort
