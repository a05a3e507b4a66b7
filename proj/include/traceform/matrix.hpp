#pragma once

#include <cstdint>
#include <vector>

#include "traceform/numeric.hpp"

namespace traceform {

/// Dense square matrix of GMP integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::int64_t n);

    std::int64_t dim() const noexcept { return n_; }
    const Int& at(std::int64_t i, std::int64_t j) const;
    Int& at(std::int64_t i, std::int64_t j);
    const std::vector<Int>& entries() const noexcept { return a_; }

    bool is_symmetric() const;
    Int row_sum(std::int64_t i) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::int64_t n_;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int determinant(const IntMatrix& m);

// Determinant of the top-left k x k block, 1 <= k <= dim.
Int leading_principal_minor(const IntMatrix& m, std::int64_t k);

// Sylvester criterion on the exact leading principal minors.
bool is_positive_definite(const IntMatrix& m);

// Characteristic polynomial det(xI - M) via Faddeev-LeVerrier; all the
// intermediate divisions are exact over Z. Returned coefficients are
// ordered by ascending power, c[dim] = 1.
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

// Eigenvalue signs of a nonsingular symmetric integer matrix, counted by
// Descartes' rule on the characteristic polynomial (exact: all roots are
// real and nonzero). Returns (positive count, negative count).
std::pair<std::int64_t, std::int64_t> inertia(const IntMatrix& m);

}  // namespace traceform
