#include "zariski/int_matrix.hpp"

#include "zariski/errors.hpp"

namespace zariski {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_)
            throw DimensionMismatch("IntMatrix: ragged initializer");
        std::size_t j = 0;
        for (long v : row) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.dim_)
            throw DimensionMismatch("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < m.dim_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
    IntMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
    IntMatrix m(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= dim_)
            throw DimensionMismatch("principal_submatrix: index out of range");
        for (std::size_t j = 0; j < indices.size(); ++j)
            m.at(i, j) = at(indices[i], indices[j]);
    }
    return m;
}

IntVector IntMatrix::mul(const IntVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("IntMatrix::mul: size mismatch");
    IntVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("IntMatrix::mul: size mismatch");
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t j = 0; j < dim_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
    return out;
}

IntVector IntMatrix::premul(const IntVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("IntMatrix::premul: size mismatch");
    IntVector out(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) out[j] += v[i] * at(i, j);
    return out;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

}  // namespace zariski
