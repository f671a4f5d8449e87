#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hyperseq/errors.hpp"
#include "hyperseq/gaussian.hpp"

namespace hyperseq {

/// Finite prefix x_0..x_N of a complex sequence. Nonempty by construction.
struct Sequence {
    std::vector<GaussianRational> entries;

    Sequence() = default;
    explicit Sequence(std::vector<GaussianRational> values) : entries(std::move(values)) {}
    Sequence(std::initializer_list<GaussianRational> values) : entries(values) {}

    std::size_t size() const { return entries.size(); }
    GaussianRational& operator[](std::size_t i) { return entries[i]; }
    const GaussianRational& operator[](std::size_t i) const { return entries[i]; }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }
};

} // namespace hyperseq
