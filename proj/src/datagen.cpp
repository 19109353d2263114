#include "tpsearch/datagen.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

namespace tpsearch {

namespace {

// Unbiased draw from [lo, hi] via rejection sampling on the raw 64-bit
// stream. Stable across platforms, unlike std::uniform_int_distribution.
Element draw_in_range(std::mt19937_64& rng, Element lo, Element hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {  // full 64-bit range
        return static_cast<Element>(rng());
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return static_cast<Element>(static_cast<std::uint64_t>(lo) + x % span);
}

[[noreturn]] void throw_io_error(const std::string& what, const std::string& path) {
    const int err = errno;
    std::string msg = what + " '" + path + "'";
    if (err != 0) {
        msg += ": ";
        msg += std::strerror(err);
    }
    throw std::runtime_error(msg);
}

}  // namespace

Dataset generate_sorted(const GenSpec& spec) {
    if (spec.count == 0) {
        throw std::invalid_argument("generate_sorted: count must be at least 1");
    }
    Dataset out;
    out.items.reserve(spec.count);
    for (std::uint64_t i = 1; i <= spec.count; ++i) {
        out.items.push_back(static_cast<Element>(i));
    }
    out.sorted = true;
    return out;
}

Dataset generate_random(const GenSpec& spec) {
    if (spec.count == 0) {
        throw std::invalid_argument("generate_random: count must be at least 1");
    }
    const auto [lo, hi] = spec.value_range.value_or(
        std::pair<Element, Element>{1, static_cast<Element>(spec.count)});
    if (lo > hi) {
        throw std::invalid_argument("generate_random: empty value range (lo > hi)");
    }
    std::mt19937_64 rng(spec.seed);
    Dataset out;
    out.items.reserve(spec.count);
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        out.items.push_back(draw_in_range(rng, lo, hi));
    }
    out.sorted = false;
    return out;
}

void write_dataset(const Dataset& data, const std::string& path) {
    // Binary mode keeps the line ending a single LF on every platform.
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_io_error("cannot open for writing", path);
    std::string buf;
    buf.reserve(1 << 16);
    for (const Element v : data.items) {
        buf += std::to_string(v);
        buf += '\n';
        if (buf.size() >= (1 << 16) - 32) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    if (!buf.empty()) {
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    out.flush();
    if (!out) throw_io_error("write failed for", path);
}

Dataset read_dataset(const std::string& path, bool assert_sorted) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io_error("cannot open for reading", path);
    Dataset out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        Element value = 0;
        const char* first = line.data();
        const char* last = line.data() + line.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": cannot parse '" + line + "' as a 64-bit integer");
        }
        out.items.push_back(value);
    }
    if (in.bad()) throw_io_error("read failed for", path);
    if (assert_sorted) {
        if (const auto bad = first_order_violation(out.items)) {
            throw std::runtime_error(path + ": data not in non-decreasing order at index " +
                                     std::to_string(*bad));
        }
        out.sorted = true;
    }
    return out;
}

}  // namespace tpsearch
