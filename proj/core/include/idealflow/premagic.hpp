#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idealflow/matrix.hpp"
#include "idealflow/rng.hpp"

namespace idealflow {

// A matrix is premagic when its row-sum vector equals its column-sum vector
// elementwise. Predicates are exact over rationals; the float overload takes
// a tolerance, defaulting to 1e-9 relative to norm_inf.

inline constexpr double kDefaultPremagicRelTol = 1e-9;

inline bool is_premagic(const SquareMatrix<Rational>& m) {
    const auto r = row_sums(m);
    const auto c = col_sums(m);
    return r.values == c.values;
}

inline bool is_premagic(const SquareMatrix<double>& m,
                        std::optional<double> tol = std::nullopt) {
    double eps = tol ? *tol : kDefaultPremagicRelTol * norm_inf(m);
    if (eps < 0) {
        throw DomainError("is_premagic: tolerance must be non-negative");
    }
    const auto r = row_sums(m);
    const auto c = col_sums(m);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (abs_value(r.values[i] - c.values[i]) > eps) return false;
    }
    return true;
}

// (M - M^T) j: the zero vector exactly when M is premagic. This is the
// second, equivalent premagic test (kernel of the antisymmetric part).
template <ScalarDomain T>
SumVector<T> antisymmetric_kernel_residual(const SquareMatrix<T>& m) {
    const std::size_t n = m.order();
    SumVector<T> out{std::vector<T>(n, T{}), SumOrientation::RowSum};
    for (std::size_t i = 0; i < n; ++i) {
        T acc = T{};
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) - m(j, i);
        out.values[i] = acc;
    }
    return out;
}

// Bijection on {0..n-1}; dense form has a single 1 per row and column.
class PermutationMatrix {
public:
    explicit PermutationMatrix(std::vector<std::size_t> mapping)
        : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t v : map_) {
            if (v >= map_.size() || seen[v]) {
                throw DomainError("permutation mapping is not a bijection");
            }
            seen[v] = true;
        }
    }

    static PermutationMatrix identity(std::size_t n) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        return PermutationMatrix(std::move(m));
    }

    // Fisher-Yates with our own RNG so results are platform-stable.
    static PermutationMatrix random(std::size_t n, Xoshiro256pp& rng) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::swap(m[i - 1], m[rng.bounded(i)]);
        }
        return PermutationMatrix(std::move(m));
    }

    std::size_t order() const { return map_.size(); }
    std::size_t image(std::size_t i) const { return map_[i]; }

    template <ScalarDomain T>
    SquareMatrix<T> to_dense() const {
        SquareMatrix<T> p(order());
        for (std::size_t i = 0; i < order(); ++i) {
            p(i, map_[i]) = scalar_from_int<T>(1);
        }
        return p;
    }

private:
    std::vector<std::size_t> map_;
};

// P^T M P: simultaneous row and column permutation.
// With P[i][p(i)] = 1, entry (i, j) of the result is M(p^-1(i), p^-1(j)).
template <ScalarDomain T>
SquareMatrix<T> permute(const SquareMatrix<T>& m, const PermutationMatrix& p) {
    if (p.order() != m.order()) {
        throw DimensionError("permute: order mismatch");
    }
    const std::size_t n = m.order();
    SquareMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(p.image(i), p.image(j)) = m(i, j);
    return out;
}

// C = B + A with B = (C + C^T)/2 symmetric and A = (C - C^T)/2 antisymmetric.
// Returned as (B, A). The symmetric part is premagic for any input.
template <ScalarDomain T>
std::pair<SquareMatrix<T>, SquareMatrix<T>> symmetric_antisymmetric_parts(
    const SquareMatrix<T>& c) {
    const std::size_t n = c.order();
    const T half = [] {
        if constexpr (std::same_as<T, Rational>) {
            return Rational(1, 2);
        } else {
            return 0.5;
        }
    }();
    SquareMatrix<T> sym(n);
    SquareMatrix<T> anti(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = (c(i, j) + c(j, i)) * half;
            anti(i, j) = (c(i, j) - c(j, i)) * half;
        }
    }
    return {std::move(sym), std::move(anti)};
}

// A (.) A^T: always symmetric, diagonal is the square of A's diagonal,
// hence premagic regardless of A.
template <ScalarDomain T>
SquareMatrix<T> hadamard_with_transpose(const SquareMatrix<T>& a) {
    const std::size_t n = a.order();
    SquareMatrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) * a(j, i);
    return out;
}

// Facts about a 2x2 premagic matrix [[a,b],[c,d]] (premagic forces b = c):
//   t        = a + 2b + d      (sum of the border sums e1, e2)
//   det      = ad - b^2
//   identity_a: t + det       = -b^2 + 2b + (a + d + ad)
//   identity_b: e1 e2 + det   = c(a + d) + 2ad
//   inverse  = [[d,-b],[-b,a]] / det when det != 0, itself premagic.
template <ScalarDomain T>
struct Premagic2x2Report {
    bool offdiag_equal = false;
    T t{};
    T det{};
    bool identity_a_holds = false;
    bool identity_b_holds = false;
    std::optional<SquareMatrix<T>> inverse;
};

template <ScalarDomain T>
Premagic2x2Report<T> premagic_2x2_report(const SquareMatrix<T>& m) {
    if (m.order() != 2) {
        throw DimensionError("premagic_2x2_report: matrix must have order 2");
    }
    if (!is_premagic(m)) {
        throw PreconditionError("premagic_2x2_report: input is not premagic");
    }
    const T a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    Premagic2x2Report<T> rep;
    rep.offdiag_equal = (b == c);
    rep.t = a + b + b + d;
    rep.det = a * d - b * c;
    const T e1 = a + b;
    const T e2 = c + d;
    const T two = scalar_from_int<T>(2);
    const auto close = [](const T& x, const T& y) {
        if constexpr (std::same_as<T, Rational>) {
            return x == y;
        } else {
            return abs_value(x - y) <= 1e-9 * (1.0 + abs_value(x) + abs_value(y));
        }
    };
    rep.identity_a_holds = close(rep.t + rep.det, -(b * b) + two * b + (a + d + a * d));
    rep.identity_b_holds = close(e1 * e2 + rep.det, c * (a + d) + two * a * d);
    if (rep.det != T{}) {
        SquareMatrix<T> inv(2);
        inv(0, 0) = d / rep.det;
        inv(0, 1) = -b / rep.det;
        inv(1, 0) = -b / rep.det;
        inv(1, 1) = a / rep.det;
        rep.inverse = std::move(inv);
    }
    return rep;
}

// Seeded generator of non-negative premagic matrices: a non-negative random
// combination of random permutation matrices plus a non-negative random
// diagonal. Permutation matrices have unit row and column sums, so any
// non-negative combination is premagic; the diagonal term keeps row sums
// unequal across nodes (diagonal entries are free in the calculus).
template <ScalarDomain T>
SquareMatrix<T> random_premagic(std::size_t order, std::uint64_t seed) {
    if (order == 0) {
        throw DimensionError("random_premagic: order must be positive");
    }
    Xoshiro256pp rng = split_stream(seed, 0x7072656d61676963ULL);
    const std::size_t terms = 2 + rng.bounded(3);
    SquareMatrix<Rational> acc(order);
    bool positive_seen = false;
    for (std::size_t t = 0; t < terms; ++t) {
        auto p = PermutationMatrix::random(order, rng);
        Rational coeff(static_cast<long>(rng.bounded(10)),
                       static_cast<long>(1 + rng.bounded(4)));
        coeff.canonicalize();
        if (t + 1 == terms && !positive_seen && coeff == 0) {
            coeff = 1;  // keep row sums positive for the Markov conversions
        }
        if (coeff > 0) positive_seen = true;
        acc = add(acc, scale(p.to_dense<Rational>(), coeff));
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (rng.bounded(2) == 0) continue;
        Rational bump(static_cast<long>(rng.bounded(8)),
                      static_cast<long>(1 + rng.bounded(3)));
        bump.canonicalize();
        acc(i, i) += bump;
    }
    if constexpr (std::same_as<T, Rational>) {
        return acc;
    } else {
        return to_float(acc);
    }
}

}  // namespace idealflow
