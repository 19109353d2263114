#ifndef TPSEARCH_SEARCH_HPP
#define TPSEARCH_SEARCH_HPP

#include "tpsearch/types.hpp"

namespace tpsearch {

// The search operations. All of them are pure functions of their inputs:
// repeated calls return identical outcomes, including probe counts. Indices
// are 0-based throughout.

// Front-to-back scan. Returns the smallest matching index.
// probes = found index + 1 on success, n on failure (one equality test per
// inspected element; element_comparisons == probes).
SearchOutcome linear_search(const Dataset& data, Element target);

// Classic halving search, mid = floor((beg+end)/2) computed overflow-safe.
// Returns SOME matching index (the first mid that hits), not necessarily the
// first occurrence. probes = number of mid-element inspections. Each probe
// performs an equality test and, when it misses, one ordering test.
// Throws std::invalid_argument when data.sorted is false.
SearchOutcome binary_search(const Dataset& data, Element target);

// Bidirectional scan with cursors starting at both ends, converging toward
// the middle. Works on unsorted data. One probe step inspects items[i] and
// then, when the cursors differ, items[j]; the i match wins when both see
// the target. When the cursors collide (odd n) the middle element is
// inspected once. probes <= ceil(n/2); target at either end costs 1 probe.
SearchOutcome two_pointer_find_first(const Dataset& data, Element target);

// Same bidirectional scan, but always completes the full traversal and
// collects every matching index. The result is strictly increasing no
// matter which cursor discovered each match. probes = ceil(n/2) for n > 0.
MultiOutcome two_pointer_find_all(const Dataset& data, Element target);

// Converging-cursor targeted sum on sorted data: moves the left cursor up
// when items[i]+items[j] falls short of the target and the right cursor down
// when it overshoots. probes = number of sum evaluations.
// Throws std::invalid_argument when data.sorted is false.
PairSumOutcome two_pointer_pair_sum(const Dataset& data, Element target_sum);

}  // namespace tpsearch

#endif  // TPSEARCH_SEARCH_HPP
