#include "traceform/matrix.hpp"

#include <stdexcept>

namespace traceform {

IntMatrix::IntMatrix(std::int64_t n) : n_(n) {
    if (n < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Int(0));
}

const Int& IntMatrix::at(std::int64_t i, std::int64_t j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("IntMatrix::at");
    return a_[static_cast<std::size_t>(i * n_ + j)];
}

Int& IntMatrix::at(std::int64_t i, std::int64_t j) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("IntMatrix::at");
    return a_[static_cast<std::size_t>(i * n_ + j)];
}

bool IntMatrix::is_symmetric() const {
    for (std::int64_t i = 0; i < n_; ++i)
        for (std::int64_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Int IntMatrix::row_sum(std::int64_t i) const {
    Int s = 0;
    for (std::int64_t j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

Int leading_principal_minor(const IntMatrix& m, std::int64_t k) {
    if (k < 1 || k > m.dim()) throw std::out_of_range("leading_principal_minor");

    std::vector<std::vector<Int>> a(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
        a[i].reserve(static_cast<std::size_t>(k));
        for (std::int64_t j = 0; j < k; ++j) a[i].push_back(m.at(i, j));
    }

    int sign = 1;
    Int prev = 1;
    for (std::int64_t t = 0; t + 1 < k; ++t) {
        if (a[t][t] == 0) {
            std::int64_t r = -1;
            for (std::int64_t i = t + 1; i < k; ++i)
                if (a[i][t] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            std::swap(a[t], a[r]);
            sign = -sign;
        }
        for (std::int64_t i = t + 1; i < k; ++i) {
            for (std::int64_t j = t + 1; j < k; ++j) {
                Int num = a[i][j] * a[t][t] - a[i][t] * a[t][j];
                // Bareiss guarantees exact division by the previous pivot.
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][t] = 0;
        }
        prev = a[t][t];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

Int determinant(const IntMatrix& m) {
    if (m.dim() == 0) return 1;
    return leading_principal_minor(m, m.dim());
}

bool is_positive_definite(const IntMatrix& m) {
    for (std::int64_t k = 1; k <= m.dim(); ++k)
        if (leading_principal_minor(m, k) <= 0) return false;
    return true;
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
    const std::int64_t n = m.dim();
    std::vector<Int> coeff(static_cast<std::size_t>(n) + 1, Int(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return coeff;

    // Faddeev-LeVerrier: A_{k+1} = M (A_k + c_k I), c_k = -tr(A_k)/k.
    IntMatrix a = m;
    for (std::int64_t k = 1; k <= n; ++k) {
        Int trace = 0;
        for (std::int64_t i = 0; i < n; ++i) trace += a.at(i, i);
        if (trace % k != 0) throw std::logic_error("characteristic_polynomial: inexact division");
        Int c = -trace / k;
        coeff[static_cast<std::size_t>(n - k)] = c;
        if (k == n) break;
        for (std::int64_t i = 0; i < n; ++i) a.at(i, i) += c;
        IntMatrix next(n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j) {
                Int s = 0;
                for (std::int64_t l = 0; l < n; ++l) s += m.at(i, l) * a.at(l, j);
                next.at(i, j) = s;
            }
        a = next;
    }
    return coeff;
}

std::pair<std::int64_t, std::int64_t> inertia(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix must be symmetric");
    std::vector<Int> p = characteristic_polynomial(m);
    if (p[0] == 0) throw std::invalid_argument("inertia: matrix is singular");

    auto variations = [](const std::vector<Int>& c) {
        std::int64_t count = 0;
        int last = 0;
        for (const Int& v : c) {
            int s = sgn(v);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };

    std::int64_t pos = variations(p);
    std::vector<Int> q = p;  // q(x) = p(-x)
    for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
    std::int64_t neg = variations(q);
    if (pos + neg != m.dim()) throw std::logic_error("inertia: sign variation count mismatch");
    return {pos, neg};
}

}  // namespace traceform
