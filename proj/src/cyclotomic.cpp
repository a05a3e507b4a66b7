#include "traceform/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "traceform/trace_form.hpp"

namespace traceform {

namespace {

// c_f(a) for every residue class, as a table indexed by gcd class:
// value[d] = mu(f/d) * phi(f) / phi(f/d) for each divisor d of f.
std::vector<std::int64_t> ramanujan_table(std::int64_t f) {
    std::vector<std::int64_t> table(static_cast<std::size_t>(f) + 1, 0);
    std::int64_t phi_f = euler_phi(f);
    for (std::int64_t d : divisors(f))
        table[static_cast<std::size_t>(d)] = mobius(f / d) * (phi_f / euler_phi(f / d));
    return table;
}

}  // namespace

std::int64_t ramanujan_sum(std::int64_t f, std::int64_t a) {
    if (f < 1) throw std::invalid_argument("ramanujan_sum: modulus must be >= 1");
    if (!is_squarefree(f))
        throw std::invalid_argument("ramanujan_sum: modulus must be squarefree");
    a %= f;
    if (a < 0) a += f;
    std::int64_t g = std::gcd(a, f);  // gcd(0, f) = f covers a = 0
    std::int64_t k = f / g;
    return mobius(k) * (euler_phi(f) / euler_phi(k));
}

FormalRootSum::FormalRootSum(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("FormalRootSum: modulus must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(modulus), Int(0));
}

FormalRootSum FormalRootSum::root_power(std::int64_t modulus, std::int64_t a) {
    FormalRootSum x(modulus);
    x.add_term(a, 1);
    return x;
}

const Int& FormalRootSum::coeff(std::int64_t a) const {
    a %= modulus_;
    if (a < 0) a += modulus_;
    return coeffs_[static_cast<std::size_t>(a)];
}

void FormalRootSum::add_term(std::int64_t a, const Int& value) {
    a %= modulus_;
    if (a < 0) a += modulus_;
    coeffs_[static_cast<std::size_t>(a)] += value;
}

bool FormalRootSum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

FormalRootSum FormalRootSum::operator+(const FormalRootSum& rhs) const {
    if (modulus_ != rhs.modulus_) throw std::invalid_argument("FormalRootSum: modulus mismatch");
    FormalRootSum out(modulus_);
    for (std::int64_t a = 0; a < modulus_; ++a)
        out.coeffs_[static_cast<std::size_t>(a)] =
            coeffs_[static_cast<std::size_t>(a)] + rhs.coeffs_[static_cast<std::size_t>(a)];
    return out;
}

FormalRootSum FormalRootSum::operator*(const FormalRootSum& rhs) const {
    if (modulus_ != rhs.modulus_) throw std::invalid_argument("FormalRootSum: modulus mismatch");
    FormalRootSum out(modulus_);
    for (std::int64_t a = 0; a < modulus_; ++a) {
        const Int& ca = coeffs_[static_cast<std::size_t>(a)];
        if (ca == 0) continue;
        for (std::int64_t b = 0; b < modulus_; ++b) {
            const Int& cb = rhs.coeffs_[static_cast<std::size_t>(b)];
            if (cb == 0) continue;
            std::int64_t c = a + b;
            if (c >= modulus_) c -= modulus_;
            out.coeffs_[static_cast<std::size_t>(c)] += ca * cb;
        }
    }
    return out;
}

FormalRootSum FormalRootSum::scaled(const Int& c) const {
    FormalRootSum out(modulus_);
    for (std::int64_t a = 0; a < modulus_; ++a)
        out.coeffs_[static_cast<std::size_t>(a)] = coeffs_[static_cast<std::size_t>(a)] * c;
    return out;
}

Int trace_full(const FormalRootSum& x) {
    std::int64_t f = x.modulus();
    if (!is_squarefree(f))
        throw std::invalid_argument("trace_full: modulus must be squarefree");
    std::vector<std::int64_t> table = ramanujan_table(f);
    Int acc = 0;
    for (std::int64_t a = 0; a < f; ++a) {
        const Int& c = x.coeff(a);
        if (c == 0) continue;
        acc += c * table[static_cast<std::size_t>(std::gcd(a, f))];
    }
    return acc;
}

const std::vector<std::int64_t>& FieldRealization::fiber(std::int64_t j) const {
    if (j < 0 || j >= spec_.degree) throw std::out_of_range("FieldRealization::fiber");
    return fibers_[static_cast<std::size_t>(j)];
}

FieldRealization realize(const FieldSpec& spec, const std::vector<std::int64_t>& primitive_roots,
                         const std::vector<std::int64_t>& chi_units) {
    ensure_valid(spec);
    const std::int64_t n = spec.degree;
    const std::size_t k = spec.ramified.size();

    FieldRealization r;
    r.spec_ = spec;

    std::int64_t f = 1;
    for (const auto& rp : spec.ramified) f *= rp.p;
    r.conductor_ = f;

    if (!primitive_roots.empty() && primitive_roots.size() != k)
        throw std::invalid_argument("realize: expected one primitive root per ramified prime");
    if (!chi_units.empty() && chi_units.size() != k)
        throw std::invalid_argument("realize: expected one chi unit per ramified prime");

    r.roots_.resize(k);
    r.units_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::int64_t p = spec.ramified[i].p;
        std::int64_t e = spec.ramified[i].e;
        std::int64_t t = primitive_roots.empty() ? smallest_primitive_root(p) : primitive_roots[i];
        if (!is_primitive_root(t, p))
            throw std::invalid_argument("realize: " + std::to_string(t) +
                                        " is not a primitive root mod " + std::to_string(p));
        std::int64_t u = chi_units.empty() ? 1 : ((chi_units[i] % e) + e) % e;
        if (std::gcd(u, e) != 1)
            throw std::invalid_argument("realize: chi unit not invertible mod " +
                                        std::to_string(e));
        r.roots_[i] = ((t % p) + p) % p;
        r.units_[i] = u;
    }

    // Discrete logarithm tables per prime, then chi via CRT: for x a unit,
    // chi(x) = sum_i dlog_i(x mod p_i) * u_i * (n / e_i) mod n.
    std::vector<std::vector<std::int64_t>> dlog(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::int64_t p = spec.ramified[i].p;
        dlog[i].assign(static_cast<std::size_t>(p), -1);
        std::int64_t x = 1;
        for (std::int64_t j = 0; j < p - 1; ++j) {
            dlog[i][static_cast<std::size_t>(x)] = j;
            x = mul_mod(x, r.roots_[i], p);
        }
    }
    std::vector<std::int64_t> image(k);
    for (std::size_t i = 0; i < k; ++i)
        image[i] = r.units_[i] % spec.ramified[i].e * (n / spec.ramified[i].e) % n;

    r.chi_.assign(static_cast<std::size_t>(f), -1);
    r.fibers_.assign(static_cast<std::size_t>(n), {});
    std::int64_t phi_f = 1;
    for (const auto& rp : spec.ramified) phi_f *= rp.p - 1;
    r.totient_ = phi_f;

    for (std::int64_t x = 0; x < f; ++x) {
        if (std::gcd(x, f) != 1) continue;
        std::int64_t value = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::int64_t lg = dlog[i][static_cast<std::size_t>(x % spec.ramified[i].p)];
            value = (value + lg % n * image[i]) % n;
        }
        r.chi_[static_cast<std::size_t>(x)] = value;
        r.fibers_[static_cast<std::size_t>(value)].push_back(x);
    }

    for (const auto& fib : r.fibers_)
        if (static_cast<std::int64_t>(fib.size()) * n != phi_f)
            throw std::logic_error("realize: chi is not equidistributed over Z/nZ");
    return r;
}

FieldRealization realize_random(const FieldSpec& spec, std::mt19937_64& rng) {
    ensure_valid(spec);
    auto bounded = [&rng](std::int64_t bound) {
        // Rejection sampling keeps the stream portable across platforms.
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t b = static_cast<std::uint64_t>(bound);
        std::uint64_t cut = limit - limit % b;
        std::uint64_t v;
        do {
            v = rng();
        } while (v >= cut);
        return static_cast<std::int64_t>(v % b);
    };

    std::vector<std::int64_t> roots, units;
    for (const auto& rp : spec.ramified) {
        std::int64_t t;
        do {
            t = 2 + bounded(rp.p - 2);  // candidates in [2, p-1]
        } while (!is_primitive_root(t, rp.p));
        roots.push_back(t);
        std::int64_t u;
        do {
            u = 1 + bounded(rp.e - 1);
        } while (std::gcd(u, rp.e) != 1);
        units.push_back(u);
    }
    return realize(spec, roots, units);
}

std::vector<FormalRootSum> nib(const FieldRealization& r) {
    std::vector<FormalRootSum> basis;
    basis.reserve(static_cast<std::size_t>(r.spec().degree));
    for (std::int64_t j = 0; j < r.spec().degree; ++j) {
        FormalRootSum e(r.conductor());
        for (std::int64_t u : r.fiber(j)) e.add_term(u, 1);
        basis.push_back(std::move(e));
    }
    return basis;
}

IntMatrix gram_oracle(const FieldRealization& r) {
    const std::int64_t n = r.spec().degree;
    const std::int64_t f = r.conductor();
    const std::int64_t phi_f = r.totient();

    std::vector<std::int64_t> table = ramanujan_table(f);
    std::vector<std::int64_t> trace_of(static_cast<std::size_t>(f));
    for (std::int64_t a = 0; a < f; ++a)
        trace_of[static_cast<std::size_t>(a)] = table[static_cast<std::size_t>(std::gcd(a, f))];

    // trace_full(e_i * e_j) unrolled over the fiber pairs: the product of
    // two Gauss periods has one term eta^(u+v) per pair, so the trace is a
    // plain sum of Ramanujan values.
    IntMatrix g(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i; j < n; ++j) {
            Int acc = 0;
            std::int64_t partial = 0;
            for (std::int64_t u : r.fiber(i)) {
                for (std::int64_t v : r.fiber(j)) {
                    std::int64_t w = u + v;
                    if (w >= f) w -= f;
                    partial += trace_of[static_cast<std::size_t>(w)];
                }
                // |partial| grows by at most phi(f)^2 per fiber; fold into
                // the big accumulator once per row to stay overflow-safe.
                acc += partial;
                partial = 0;
            }
            acc *= n;
            if (acc % phi_f != 0)
                throw std::logic_error("gram_oracle: trace not divisible by phi(f)/n");
            g.at(i, j) = acc / phi_f;
            g.at(j, i) = g.at(i, j);
        }
    }
    return g;
}

CertifyReport certify(const FieldSpec& spec, std::int64_t trials, std::uint64_t seed) {
    ensure_valid(spec);
    if (trials < 1) throw std::invalid_argument("certify: trials must be >= 1");

    CertifyReport report;
    report.trials = trials;
    report.seed = seed;

    IntMatrix expected = gram_matrix(spec);
    std::mt19937_64 rng(seed);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        FieldRealization r = trial == 0 ? realize(spec) : realize_random(spec, rng);
        IntMatrix got = gram_oracle(r);
        if (!(got == expected)) {
            report.pass = false;
            report.failed_trial = trial;
            report.failed_roots = r.primitive_roots();
            report.failed_units = r.chi_units();
            report.expected = expected;
            report.actual = got;
            return report;
        }
    }
    return report;
}

}  // namespace traceform
