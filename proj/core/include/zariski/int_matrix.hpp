#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "zariski/rat.hpp"

namespace zariski {

// Square matrix of arbitrary-precision integers, row-major. All intersection
// forms and negative-part systems live here; there is no floating-point path.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix identity(std::size_t dim);
    static IntMatrix diagonal(const IntVector& d);

    std::size_t dim() const { return dim_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    bool is_symmetric() const;

    // Rows and columns restricted to the given index set (kept in order).
    IntMatrix principal_submatrix(std::span<const std::size_t> indices) const;

    IntVector mul(const IntVector& v) const;
    IntMatrix mul(const IntMatrix& other) const;

    // Row vector v^t * M.
    IntVector premul(const IntVector& v) const;

    Int trace() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Int> e_;
};

}  // namespace zariski
