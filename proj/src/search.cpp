#include "tpsearch/search.hpp"

#include <stdexcept>

namespace tpsearch {

bool is_nondecreasing(const std::vector<Element>& items) {
    return !first_order_violation(items).has_value();
}

std::optional<std::size_t> first_order_violation(const std::vector<Element>& items) {
    for (std::size_t k = 1; k < items.size(); ++k) {
        if (items[k] < items[k - 1]) return k;
    }
    return std::nullopt;
}

SearchOutcome linear_search(const Dataset& data, Element target) {
    SearchOutcome out;
    for (std::size_t i = 0; i < data.items.size(); ++i) {
        ++out.probes;
        ++out.element_comparisons;
        if (data.items[i] == target) {
            out.status = Status::Found;
            out.index = i;
            return out;
        }
    }
    return out;
}

SearchOutcome binary_search(const Dataset& data, Element target) {
    if (!data.sorted) {
        throw std::invalid_argument("binary_search requires a dataset flagged sorted");
    }
    SearchOutcome out;
    std::ptrdiff_t beg = 0;
    std::ptrdiff_t end = static_cast<std::ptrdiff_t>(data.items.size()) - 1;
    while (beg <= end) {
        ++out.probes;
        const std::ptrdiff_t mid = beg + (end - beg) / 2;
        const Element v = data.items[static_cast<std::size_t>(mid)];
        ++out.element_comparisons;
        if (v == target) {
            out.status = Status::Found;
            out.index = static_cast<std::size_t>(mid);
            return out;
        }
        ++out.element_comparisons;
        if (v > target) {
            end = mid - 1;
        } else {
            beg = mid + 1;
        }
    }
    return out;
}

SearchOutcome two_pointer_find_first(const Dataset& data, Element target) {
    SearchOutcome out;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(data.items.size()) - 1;
    while (i <= j) {
        ++out.probes;
        ++out.element_comparisons;
        if (data.items[static_cast<std::size_t>(i)] == target) {
            out.status = Status::Found;
            out.index = static_cast<std::size_t>(i);
            return out;
        }
        if (i != j) {
            ++out.element_comparisons;
            if (data.items[static_cast<std::size_t>(j)] == target) {
                out.status = Status::Found;
                out.index = static_cast<std::size_t>(j);
                return out;
            }
        }
        ++i;
        --j;
    }
    return out;
}

MultiOutcome two_pointer_find_all(const Dataset& data, Element target) {
    MultiOutcome out;
    std::vector<std::size_t> high_matches;  // collected in decreasing index order
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(data.items.size()) - 1;
    // No early exit: later duplicates may exist anywhere, so the scan always
    // completes its ceil(n/2) steps.
    while (i <= j) {
        ++out.probes;
        ++out.element_comparisons;
        if (data.items[static_cast<std::size_t>(i)] == target) {
            out.indices.push_back(static_cast<std::size_t>(i));
        }
        if (i != j) {
            ++out.element_comparisons;
            if (data.items[static_cast<std::size_t>(j)] == target) {
                high_matches.push_back(static_cast<std::size_t>(j));
            }
        }
        ++i;
        --j;
    }
    out.indices.insert(out.indices.end(), high_matches.rbegin(), high_matches.rend());
    return out;
}

PairSumOutcome two_pointer_pair_sum(const Dataset& data, Element target_sum) {
    if (!data.sorted) {
        throw std::invalid_argument("two_pointer_pair_sum requires a dataset flagged sorted");
    }
    PairSumOutcome out;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(data.items.size()) - 1;
    while (i < j) {
        ++out.probes;
        ++out.element_comparisons;
        // Widened so extreme Element values cannot overflow the sum.
        const __int128 sum = static_cast<__int128>(data.items[static_cast<std::size_t>(i)]) +
                             static_cast<__int128>(data.items[static_cast<std::size_t>(j)]);
        if (sum == static_cast<__int128>(target_sum)) {
            out.status = Status::Found;
            out.pair = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
            return out;
        }
        if (sum < static_cast<__int128>(target_sum)) {
            ++i;
        } else {
            --j;
        }
    }
    return out;
}

}  // namespace tpsearch
