#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fractalpile/errors.hpp"

namespace fractalpile::algebra {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square matrix of arbitrary-precision integers. Everything in this
/// module stays exact; there is no floating point anywhere downstream of it.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(IntegerMatrix m);

} // namespace fractalpile::algebra
