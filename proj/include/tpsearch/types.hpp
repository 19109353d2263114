#ifndef TPSEARCH_TYPES_HPP
#define TPSEARCH_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tpsearch {

// Value stored in datasets and searched for. 64-bit signed: covers the
// 1..1,000,000 generation range with headroom for pair sums.
using Element = std::int64_t;

// In-memory sequence of elements plus a caller-visible sortedness assertion.
// The `sorted` flag gates binary_search and two_pointer_pair_sum; it is an
// assertion of non-decreasing order, checkable in one pass.
struct Dataset {
    std::vector<Element> items;
    bool sorted = false;

    std::size_t size() const { return items.size(); }
};

// One-pass check of non-decreasing order.
bool is_nondecreasing(const std::vector<Element>& items);

// Index of the first element that is smaller than its predecessor, if any.
std::optional<std::size_t> first_order_violation(const std::vector<Element>& items);

enum class Status { Found, NotFound };

// Result of a single-index search. All indices are 0-based.
//
// `probes` counts probe steps: one loop iteration of the search. For the
// two-pointer scan one step inspects both cursor positions and still counts
// as one probe. `element_comparisons` counts individual equality/ordering
// tests against array elements, so both interpretations are observable.
struct SearchOutcome {
    Status status = Status::NotFound;
    std::optional<std::size_t> index;  // present iff Found
    std::uint64_t probes = 0;
    std::uint64_t element_comparisons = 0;

    bool found() const { return status == Status::Found; }
};

// Result of a find-all search: every matching index, strictly increasing.
struct MultiOutcome {
    std::vector<std::size_t> indices;
    std::uint64_t probes = 0;
    std::uint64_t element_comparisons = 0;

    bool found() const { return !indices.empty(); }
};

// Result of a targeted-sum search: a pair of positions i < j with
// items[i] + items[j] equal to the requested sum.
struct PairSumOutcome {
    Status status = Status::NotFound;
    std::optional<std::pair<std::size_t, std::size_t>> pair;  // i < j
    std::uint64_t probes = 0;
    std::uint64_t element_comparisons = 0;

    bool found() const { return status == Status::Found; }
};

}  // namespace tpsearch

#endif  // TPSEARCH_TYPES_HPP
