#include "traceform/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace traceform {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    std::int64_t r = 1 % m;
    std::int64_t b = ((base % m) + m) % m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64.
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    for (const auto& [p, k] : factorize(n))
        if (k > 1) return false;
    return true;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = 1;
    for (const auto& [p, k] : factorize(n)) {
        phi *= p - 1;
        for (int i = 1; i < k; ++i) phi *= p;
    }
    return phi;
}

int mobius(std::int64_t n) {
    int sign = 1;
    for (const auto& [p, k] : factorize(n)) {
        if (k > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, k] : factorize(n)) {
        std::size_t old = out.size();
        std::int64_t q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            for (std::size_t j = 0; j < old; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_primitive_root(std::int64_t t, std::int64_t p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("is_primitive_root: p must be prime");
    t = ((t % p) + p) % p;
    if (t == 0) return false;
    if (p == 2) return t == 1;
    for (const auto& [q, k] : factorize(p - 1))
        if (pow_mod(t, (p - 1) / q, p) == 1) return false;
    return true;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
    for (std::int64_t t = 1; t < p; ++t)
        if (is_primitive_root(t, p)) return t;
    throw std::logic_error("smallest_primitive_root: none found");
}

}  // namespace traceform
