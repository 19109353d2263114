#ifndef TPSEARCH_DATAGEN_HPP
#define TPSEARCH_DATAGEN_HPP

#include "tpsearch/types.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tpsearch {

// Parameters for dataset generation.
//
// Random generation is fully deterministic: values come from std::mt19937_64
// seeded directly with `seed`, reduced to [lo, hi] by rejection sampling.
// Identical (count, seed, range) yield a byte-identical sequence on every
// platform; std::uniform_int_distribution is deliberately not used because
// its output is implementation-defined.
struct GenSpec {
    enum class Kind { Sorted, Random };

    Kind kind = Kind::Sorted;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;                                    // Random only
    std::optional<std::pair<Element, Element>> value_range;    // Random only; default 1..count
};

// Ascending integers 1..count, sorted flag set. Rejects count = 0.
Dataset generate_sorted(const GenSpec& spec);

// `count` values drawn uniformly from the inclusive range (default 1..count),
// sorted flag clear. Rejects count = 0 and lo > hi.
Dataset generate_random(const GenSpec& spec);

// dataset.txt format (authoritative): ASCII decimal integers, optional
// leading '-', one per line, each line terminated by a single LF, no BOM,
// no padding, no headers. An empty dataset writes a 0-byte file.
void write_dataset(const Dataset& data, const std::string& path);

// Reads a dataset.txt file. With assert_sorted the sequence is verified
// non-decreasing in one pass and the sorted flag is set; otherwise the flag
// stays false. Errors name the offending 1-based line (parse failure) or
// the first violating 0-based index (order violation).
Dataset read_dataset(const std::string& path, bool assert_sorted);

}  // namespace tpsearch

#endif  // TPSEARCH_DATAGEN_HPP
