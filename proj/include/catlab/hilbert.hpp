#pragma once

#include <vector>

#include "catlab/errors.hpp"

namespace catlab {

/// Degree-indexed dimension sequence of a graded algebra, indexed from 0.
struct HilbertFunction {
    std::vector<int> values;

    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<int> v) : values(std::move(v)) {}

    int length() const { return static_cast<int>(values.size()); }

    int at(int j) const {
        if (j < 0 || j >= length())
            throw IndexOutOfRange("HilbertFunction: degree out of range");
        return values[static_cast<std::size_t>(j)];
    }

    friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) {
        return a.values == b.values;
    }
};

} // namespace catlab
