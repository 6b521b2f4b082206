#pragma once

#include "permsort/permutation.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace permsort {

struct EnumerationOptions {
    // Largest n for which S_n may be enumerated.
    std::size_t cap = 11;
    // Worker threads for prefix-partitioned filtering; 0 picks
    // std::thread::hardware_concurrency().
    unsigned threads = 0;
};

using PermPredicate = std::function<bool(const Permutation&)>;

// Runs body(0) .. body(count-1) on up to `threads` workers (0 = hardware
// concurrency). The first exception thrown by any call is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// Throws ResourceLimitError when n exceeds opts.cap.
void check_enumeration_cap(std::size_t n, const EnumerationOptions& opts);

// Visits S_n in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

// { p in S_n : pred(p) } in lexicographic order. S_n is split by first
// letter; the parts are filtered concurrently and concatenated in order, so
// the result does not depend on scheduling. `pred` must be thread-safe.
std::vector<Permutation> filter_permutations(std::size_t n, const PermPredicate& pred,
                                             const EnumerationOptions& opts = {});

} // namespace permsort
