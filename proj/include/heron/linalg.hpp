#pragma once

#include <vector>

#include "heron/exact.hpp"

namespace heron {

// Dense rational matrix, row major, rectangular.
struct RatMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rat> data;

    RatMatrix() = default;
    RatMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}

    Rat& at(size_t i, size_t j) { return data[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return data[i * cols + j]; }
};

// Basis of the right kernel {v : M v = 0}, computed by fraction-free
// (division-deferred) integer elimination with row pivoting by minimal bit
// length. Each basis vector is normalized so its first nonzero entry is 1.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

}  // namespace heron
