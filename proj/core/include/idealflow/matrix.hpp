#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "idealflow/errors.hpp"
#include "idealflow/scalar.hpp"

namespace idealflow {

// Dense square matrix over one scalar domain, row-major storage.
// Immutable in spirit: operations are free functions returning new values.
template <ScalarDomain T>
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(std::size_t order, const T& fill = T{})
        : order_(order), data_(order * order, fill) {
        if (order == 0) {
            throw DimensionError("matrix order must be positive");
        }
    }

    // Rejects ragged or non-square grids.
    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t n = rows.size();
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                throw DimensionError("grid is not square: row " + std::to_string(i) +
                                     " has " + std::to_string(rows[i].size()) +
                                     " entries, expected " + std::to_string(n));
            }
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_from_int<T>(1);
        return m;
    }

    // J, the matrix of ones.
    static SquareMatrix ones(std::size_t n) {
        return SquareMatrix(n, scalar_from_int<T>(1));
    }

    std::size_t order() const { return order_; }

    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < order_ && j < order_);
        return data_[i * order_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) {
        assert(i < order_ && j < order_);
        return data_[i * order_ + j];
    }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= order_ || j >= order_) {
            throw DimensionError("matrix index out of range");
        }
        return (*this)(i, j);
    }

    const std::vector<T>& entries() const { return data_; }

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<T> data_;
};

enum class SumOrientation { RowSum, ColumnSum };

// Length-n sum vector tagged with the direction it was taken in.
template <ScalarDomain T>
struct SumVector {
    std::vector<T> values;
    SumOrientation orientation;

    bool operator==(const SumVector&) const = default;
};

namespace detail {

template <ScalarDomain T>
void require_same_order(const SquareMatrix<T>& a, const SquareMatrix<T>& b,
                        const char* op) {
    if (a.order() != b.order()) {
        throw DimensionError(std::string(op) + ": order mismatch (" +
                             std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()) + ")");
    }
}

}  // namespace detail

// s2 = M j (paper orientation: a column vector).
template <ScalarDomain T>
SumVector<T> row_sums(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    SumVector<T> s{std::vector<T>(n, T{}), SumOrientation::RowSum};
    for (std::size_t i = 0; i < n; ++i) {
        T acc = T{};
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j);
        s.values[i] = acc;
    }
    return s;
}

// s1^T = j^T M.
template <ScalarDomain T>
SumVector<T> col_sums(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    SumVector<T> s{std::vector<T>(n, T{}), SumOrientation::ColumnSum};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.values[j] += m(i, j);
    }
    return s;
}

template <ScalarDomain T>
SquareMatrix<T> add(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    detail::require_same_order(a, b, "add");
    SquareMatrix<T> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <ScalarDomain T>
SquareMatrix<T> subtract(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    detail::require_same_order(a, b, "subtract");
    SquareMatrix<T> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <ScalarDomain T>
SquareMatrix<T> scale(const SquareMatrix<T>& m, const T& k) {
    SquareMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = m(i, j) * k;
    return out;
}

// Entrywise (Hadamard, direct) product.
template <ScalarDomain T>
SquareMatrix<T> hadamard(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    detail::require_same_order(a, b, "hadamard");
    SquareMatrix<T> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = a(i, j) * b(i, j);
    return out;
}

template <ScalarDomain T>
SquareMatrix<T> transpose(const SquareMatrix<T>& m) {
    SquareMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(j, i) = m(i, j);
    return out;
}

template <ScalarDomain T>
SquareMatrix<T> multiply(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    detail::require_same_order(a, b, "multiply");
    const std::size_t n = a.order();
    SquareMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const T& aik = a(i, k);
            if (aik == T{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

// M + k J.
template <ScalarDomain T>
SquareMatrix<T> shift(const SquareMatrix<T>& m, const T& k) {
    SquareMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = m(i, j) + k;
    return out;
}

// M + k I.
template <ScalarDomain T>
SquareMatrix<T> add_scaled_identity(const SquareMatrix<T>& m, const T& k) {
    SquareMatrix<T> out = m;
    for (std::size_t i = 0; i < m.order(); ++i) out(i, i) += k;
    return out;
}

// Zero out the diagonal: M - diag(M).
template <ScalarDomain T>
SquareMatrix<T> strip_diagonal(const SquareMatrix<T>& m) {
    SquareMatrix<T> out = m;
    for (std::size_t i = 0; i < m.order(); ++i) out(i, i) = T{};
    return out;
}

// Add delta to one diagonal element. Diagonal entries are free in the
// premagic calculus; only off-diagonal sums matter.
template <ScalarDomain T>
SquareMatrix<T> adjust_diagonal(const SquareMatrix<T>& m, std::size_t index,
                                const T& delta) {
    if (index >= m.order()) {
        throw DimensionError("adjust_diagonal: index out of range");
    }
    SquareMatrix<T> out = m;
    out(index, index) += delta;
    return out;
}

template <ScalarDomain T>
SquareMatrix<T> linear_combination(const std::vector<T>& coeffs,
                                   const std::vector<SquareMatrix<T>>& matrices) {
    if (coeffs.size() != matrices.size() || matrices.empty()) {
        throw DimensionError("linear_combination: need one coefficient per matrix");
    }
    SquareMatrix<T> out(matrices.front().order());
    for (std::size_t t = 0; t < matrices.size(); ++t) {
        detail::require_same_order(out, matrices[t], "linear_combination");
        for (std::size_t i = 0; i < out.order(); ++i)
            for (std::size_t j = 0; j < out.order(); ++j)
                out(i, j) += coeffs[t] * matrices[t](i, j);
    }
    return out;
}

// diag(v) * M: row i scaled by v[i].
template <ScalarDomain T>
SquareMatrix<T> scale_rows(const SquareMatrix<T>& m, const std::vector<T>& v) {
    if (v.size() != m.order()) {
        throw DimensionError("scale_rows: vector length mismatch");
    }
    SquareMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = v[i] * m(i, j);
    return out;
}

// A A^T for a rectangular grid given as rows. Result is r x r, symmetric.
template <ScalarDomain T>
SquareMatrix<T> gram_product(const std::vector<std::vector<T>>& a) {
    if (a.empty() || a.front().empty()) {
        throw DimensionError("gram_product: input needs at least one row and column");
    }
    const std::size_t r = a.size();
    const std::size_t c = a.front().size();
    for (const auto& row : a) {
        if (row.size() != c) {
            throw DimensionError("gram_product: ragged input grid");
        }
    }
    SquareMatrix<T> out(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            T acc = T{};
            for (std::size_t k = 0; k < c; ++k) acc += a[i][k] * a[j][k];
            out(i, j) = acc;
            out(j, i) = acc;
        }
    }
    return out;
}

// Maximum absolute column sum.
template <ScalarDomain T>
T norm_1(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    T best = T{};
    for (std::size_t j = 0; j < n; ++j) {
        T acc = T{};
        for (std::size_t i = 0; i < n; ++i) acc += abs_value(m(i, j));
        if (acc > best) best = acc;
    }
    return best;
}

// Maximum absolute row sum.
template <ScalarDomain T>
T norm_inf(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    T best = T{};
    for (std::size_t i = 0; i < n; ++i) {
        T acc = T{};
        for (std::size_t j = 0; j < n; ++j) acc += abs_value(m(i, j));
        if (acc > best) best = acc;
    }
    return best;
}

// Gauss-Jordan inverse. Exact over rationals; nullopt when singular.
// Pivot choice: largest |value| in the column (controls coefficient growth).
template <ScalarDomain T>
std::optional<SquareMatrix<T>> inverse(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    SquareMatrix<T> a = m;
    SquareMatrix<T> inv = SquareMatrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        T best = abs_value(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            T cand = abs_value(a(r, col));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (a(pivot, col) == T{}) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const T p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == T{}) continue;
            const T f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline SquareMatrix<double> to_float(const SquareMatrix<Rational>& m) {
    SquareMatrix<double> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

}  // namespace idealflow
