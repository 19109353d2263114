#include "tpsearch/search.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>

using namespace tpsearch;

namespace {

Dataset dataset(std::vector<Element> items, bool sorted = false) {
    Dataset d;
    d.items = std::move(items);
    d.sorted = sorted;
    return d;
}

const Dataset kTenSorted = dataset({10, 20, 30, 40, 50, 60, 70, 80, 90, 100}, true);

std::uint64_t ceil_half(std::size_t n) { return (n + 1) / 2; }

}  // namespace

TEST_CASE("linear_search: 9th of 10 costs 9 probes") {
    const SearchOutcome out = linear_search(kTenSorted, 90);
    REQUIRE(out.found());
    CHECK(*out.index == 8);
    CHECK(out.probes == 9);
    CHECK(out.element_comparisons == 9);
}

TEST_CASE("linear_search: empty dataset") {
    const SearchOutcome out = linear_search(dataset({}), 5);
    CHECK_FALSE(out.found());
    CHECK(out.probes == 0);
}

TEST_CASE("linear_search: absent target scans all 50 elements, oracle-checked") {
    std::mt19937_64 rng(101);
    const auto items = oracle::random_vector(rng, 50, 0, 1000);
    const Dataset d = dataset(items);
    const SearchOutcome out = linear_search(d, -7);  // outside the generated range
    REQUIRE_FALSE(oracle::full_scan_first(items, -7).has_value());
    CHECK_FALSE(out.found());
    CHECK(out.probes == 50);
}

TEST_CASE("linear_search: probes law on random instances") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 65;
        const auto items = oracle::random_vector(rng, n, -8, 8);
        const Element target = static_cast<Element>(rng() % 19) - 9;
        const SearchOutcome out = linear_search(dataset(items), target);
        const auto expect = oracle::full_scan_first(items, target);
        if (expect) {
            REQUIRE(out.found());
            CHECK(*out.index == *expect);
            CHECK(out.probes == *expect + 1);
        } else {
            CHECK_FALSE(out.found());
            CHECK(out.probes == n);
        }
    }
}

TEST_CASE("binary_search: 9th of 10 costs 3 probes under floor-mid") {
    const SearchOutcome out = binary_search(kTenSorted, 90);
    REQUIRE(out.found());
    CHECK(*out.index == 8);
    CHECK(out.probes == 3);
    CHECK(out.element_comparisons == 5);
}

TEST_CASE("binary_search: single element") {
    const SearchOutcome out = binary_search(dataset({7}, true), 7);
    REQUIRE(out.found());
    CHECK(*out.index == 0);
    CHECK(out.probes == 1);
}

TEST_CASE("binary_search: rejects a dataset not flagged sorted") {
    CHECK_THROWS_AS((void)binary_search(dataset({1, 2, 3}), 2), std::invalid_argument);
}

TEST_CASE("binary_search: status agrees with full-scan oracle on random sorted arrays") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 65;
        auto items = oracle::random_vector(rng, n, -30, 30);
        std::sort(items.begin(), items.end());
        const Element target = static_cast<Element>(rng() % 80) - 40;
        const SearchOutcome out = binary_search(dataset(items, true), target);
        const bool exists = oracle::full_scan_first(items, target).has_value();
        CHECK(out.found() == exists);
        if (out.found()) {
            CHECK(items[*out.index] == target);
        }
        if (n > 0) {
            CHECK(out.probes <= static_cast<std::uint64_t>(std::bit_width(n)));
        }
    }
}

TEST_CASE("two_pointer_find_first: 9th of 10 costs 2 probes") {
    const SearchOutcome out = two_pointer_find_first(kTenSorted, 90);
    REQUIRE(out.found());
    CHECK(*out.index == 8);
    CHECK(out.probes == 2);
    CHECK(out.element_comparisons == 4);
}

TEST_CASE("two_pointer_find_first: empty dataset") {
    const SearchOutcome out = two_pointer_find_first(dataset({}), 1);
    CHECK_FALSE(out.found());
    CHECK(out.probes == 0);
    CHECK(out.element_comparisons == 0);
}

TEST_CASE("two_pointer_find_first: i wins when both cursors see the target") {
    const SearchOutcome out = two_pointer_find_first(dataset({4, 4}), 4);
    REQUIRE(out.found());
    CHECK(*out.index == 0);
    CHECK(out.probes == 1);
    CHECK(out.element_comparisons == 1);  // short-circuits before the j check
}

TEST_CASE("two_pointer_find_first: middle element of odd n inspected once") {
    const SearchOutcome out = two_pointer_find_first(dataset({1, 2, 3}), 2);
    REQUIRE(out.found());
    CHECK(*out.index == 1);
    CHECK(out.probes == 2);
    CHECK(out.element_comparisons == 3);  // 2 in step one, 1 at the collision
}

TEST_CASE("two_pointer_find_first: oracle agreement and step bound") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 65;
        const auto items = oracle::random_vector(rng, n, -8, 8);  // duplicates likely
        const Element target = static_cast<Element>(rng() % 19) - 9;
        const SearchOutcome out = two_pointer_find_first(dataset(items), target);
        const bool exists = oracle::full_scan_first(items, target).has_value();
        CHECK(out.found() == exists);
        if (out.found()) {
            CHECK(items[*out.index] == target);
        }
        CHECK(out.probes <= ceil_half(n));
        if (!exists) CHECK(out.probes == ceil_half(n));
    }
}

TEST_CASE("two_pointer_find_first: either end costs exactly one probe") {
    std::mt19937_64 rng(505);
    for (std::size_t n = 1; n <= 40; ++n) {
        auto items = oracle::random_vector(rng, n, 100, 200);
        items[0] = 1;
        const SearchOutcome at_front = two_pointer_find_first(dataset(items), 1);
        REQUIRE(at_front.found());
        CHECK(at_front.probes == 1);

        auto items2 = oracle::random_vector(rng, n, 100, 200);
        items2[n - 1] = 2;
        const SearchOutcome at_back = two_pointer_find_first(dataset(items2), 2);
        REQUIRE(at_back.found());
        CHECK(at_back.probes == 1);
    }
}

TEST_CASE("two_pointer_find_first: reversal symmetry for unique targets") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        auto items = oracle::random_vector(rng, n, 0, 100);
        const Element target = 999;  // cannot occur naturally
        items[rng() % n] = target;
        const SearchOutcome fwd = two_pointer_find_first(dataset(items), target);
        REQUIRE(fwd.found());

        std::vector<Element> reversed(items.rbegin(), items.rend());
        const SearchOutcome rev = two_pointer_find_first(dataset(reversed), target);
        REQUIRE(rev.found());
        CHECK(*rev.index == n - 1 - *fwd.index);
        CHECK(rev.probes == fwd.probes);
    }
}

TEST_CASE("two_pointer_find_all: duplicates at both ends and the middle") {
    const MultiOutcome out = two_pointer_find_all(dataset({5, 1, 5, 2, 5}), 5);
    CHECK(out.indices == std::vector<std::size_t>{0, 2, 4});
    CHECK(out.probes == 3);
    CHECK(out.element_comparisons == 5);
}

TEST_CASE("two_pointer_find_all: no matches still completes the traversal") {
    const MultiOutcome out = two_pointer_find_all(dataset({1, 2, 3}), 9);
    CHECK(out.indices.empty());
    CHECK(out.probes == 2);
}

TEST_CASE("two_pointer_find_all: index set equals the oracle match set") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 65;
        const auto items = oracle::random_vector(rng, n, -3, 3);  // small range forces duplicates
        const Element target = static_cast<Element>(rng() % 9) - 4;
        const MultiOutcome out = two_pointer_find_all(dataset(items), target);
        CHECK(out.indices == oracle::full_scan_all(items, target));
        CHECK(std::is_sorted(out.indices.begin(), out.indices.end()));
        CHECK(out.probes == ceil_half(n));
        CHECK(out.element_comparisons == n);
    }
}

TEST_CASE("two_pointer_pair_sum: the only possible pair") {
    const PairSumOutcome out = two_pointer_pair_sum(dataset({1, 2}, true), 3);
    REQUIRE(out.found());
    CHECK(out.pair == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(out.probes == 1);
}

TEST_CASE("two_pointer_pair_sum: no pair sums to 20 in {1,3,5,7,9}") {
    const std::vector<Element> items{1, 3, 5, 7, 9};
    REQUIRE_FALSE(oracle::all_pairs_sum(items, 20).has_value());
    const PairSumOutcome out = two_pointer_pair_sum(dataset(items, true), 20);
    CHECK_FALSE(out.found());
    CHECK(out.probes == 4);
}

TEST_CASE("two_pointer_pair_sum: rejects a dataset not flagged sorted") {
    CHECK_THROWS_AS((void)two_pointer_pair_sum(dataset({1, 2, 3}), 4), std::invalid_argument);
}

TEST_CASE("two_pointer_pair_sum: existence agrees with the all-pairs oracle") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 65;
        auto items = oracle::random_vector(rng, n, -20, 20);
        std::sort(items.begin(), items.end());
        const Element target = static_cast<Element>(rng() % 81) - 40;
        const PairSumOutcome out = two_pointer_pair_sum(dataset(items, true), target);
        const bool exists = oracle::all_pairs_sum(items, target).has_value();
        CHECK(out.found() == exists);
        if (out.found()) {
            const auto [i, j] = *out.pair;
            REQUIRE(i < j);
            CHECK(items[i] + items[j] == target);
        }
        if (n > 0) CHECK(out.probes <= n - 1);
    }
}

TEST_CASE("pair sum near the Element limits does not overflow") {
    const Element big = std::numeric_limits<Element>::max();
    const Dataset d = dataset({big - 1, big}, true);
    const PairSumOutcome out = two_pointer_pair_sum(d, 0);
    CHECK_FALSE(out.found());
}

TEST_CASE("all operations are deterministic across repeated calls") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = rng() % 65;
        auto items = oracle::random_vector(rng, n, -10, 10);
        const Element target = static_cast<Element>(rng() % 25) - 12;
        const Dataset plain = dataset(items);
        auto sorted_items = items;
        std::sort(sorted_items.begin(), sorted_items.end());
        const Dataset sorted = dataset(sorted_items, true);

        const auto l1 = linear_search(plain, target);
        const auto l2 = linear_search(plain, target);
        CHECK(l1.status == l2.status);
        CHECK(l1.index == l2.index);
        CHECK(l1.probes == l2.probes);
        CHECK(l1.element_comparisons == l2.element_comparisons);

        const auto b1 = binary_search(sorted, target);
        const auto b2 = binary_search(sorted, target);
        CHECK(b1.index == b2.index);
        CHECK(b1.probes == b2.probes);

        const auto t1 = two_pointer_find_first(plain, target);
        const auto t2 = two_pointer_find_first(plain, target);
        CHECK(t1.index == t2.index);
        CHECK(t1.probes == t2.probes);

        const auto a1 = two_pointer_find_all(plain, target);
        const auto a2 = two_pointer_find_all(plain, target);
        CHECK(a1.indices == a2.indices);

        const auto p1 = two_pointer_pair_sum(sorted, target);
        const auto p2 = two_pointer_pair_sum(sorted, target);
        CHECK(p1.pair == p2.pair);
        CHECK(p1.probes == p2.probes);
    }
}

TEST_CASE("probes are zero only for empty datasets") {
    std::mt19937_64 rng(111);
    CHECK(linear_search(dataset({}), 0).probes == 0);
    CHECK(binary_search(dataset({}, true), 0).probes == 0);
    CHECK(two_pointer_find_first(dataset({}), 0).probes == 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        auto items = oracle::random_vector(rng, n, -5, 5);
        const Element target = static_cast<Element>(rng() % 13) - 6;
        CHECK(linear_search(dataset(items), target).probes > 0);
        CHECK(two_pointer_find_first(dataset(items), target).probes > 0);
        std::sort(items.begin(), items.end());
        CHECK(binary_search(dataset(items, true), target).probes > 0);
    }
}

TEST_CASE("sortedness helpers report the first violation") {
    CHECK(is_nondecreasing({}));
    CHECK(is_nondecreasing({1}));
    CHECK(is_nondecreasing({1, 1, 2}));
    CHECK_FALSE(is_nondecreasing({3, 1}));
    CHECK(first_order_violation({3, 1}) == std::size_t{1});
    CHECK(first_order_violation({1, 2, 2, 0, 5}) == std::size_t{3});
    CHECK_FALSE(first_order_violation({1, 2, 3}).has_value());
}
