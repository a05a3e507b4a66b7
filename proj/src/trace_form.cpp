#include "traceform/trace_form.hpp"

#include <numeric>
#include <stdexcept>

namespace traceform {

Circulant local_circulant(const RamifiedPrime& rp, std::int64_t degree) {
    FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(degree);
    std::int64_t h = rp.cofactor();
    if (h % 2 != 0 && degree % 2 != 0)
        throw std::logic_error("local_circulant: odd cofactor in odd degree");
    std::int64_t carrier = (h % 2 == 0) ? 0 : degree / 2;
    GroupRingElement s = GroupRingElement::basis(g, carrier).scaled(rp.p) -
                         sigma_subgroup(g, rp.e).scaled(h);
    return Circulant{std::move(s)};
}

Circulant field_circulant(const FieldSpec& spec) {
    ensure_valid(spec);
    GroupRingElement s = GroupRingElement::unit(FiniteAbelianGroup::cyclic(spec.degree));
    for (const auto& rp : spec.ramified) s = s * local_circulant(rp, spec.degree).element;
    if (!(s == s.involute())) throw std::logic_error("field_circulant: not involution-fixed");
    return Circulant{std::move(s)};
}

std::int64_t epsilon_count(const FieldSpec& spec) {
    std::int64_t eps = 0;
    for (const auto& rp : spec.ramified)
        if (rp.cofactor() % 2 != 0) ++eps;
    return eps;
}

namespace {

// Product of the primes with ramification index exactly d.
Int prime_block(const FieldSpec& spec, std::int64_t d) {
    Int w = 1;
    for (const auto& rp : spec.ramified)
        if (rp.e == d) w *= rp.p;
    return w;
}

CoefficientTable closed_form_prime_power(const FieldSpec& spec, std::int64_t q, int r) {
    // For degree q^r the factors chain: Sigma_<q^j> Sigma_<q^(j+1)> =
    // q^j Sigma_<q^(j+1)>, and the product telescopes to
    //   a_0 = prod p_i,   a_i = -f_i * prod_{j>i} m_j.
    CoefficientTable t;
    t.degree = spec.degree;
    t.epsilon = (q == 2) ? epsilon_count(spec) : 0;

    std::vector<Int> m(static_cast<std::size_t>(r) + 1, Int(1));
    std::vector<Int> f(static_cast<std::size_t>(r) + 1, Int(0));
    std::int64_t qi = 1;
    for (int i = 1; i <= r; ++i) {
        qi *= q;
        m[i] = prime_block(spec, qi);
        f[i] = (m[i] - 1) / qi;
    }

    t.a[1] = spec.conductor();
    qi = 1;
    for (int i = 1; i <= r; ++i) {
        qi *= q;
        Int tail = 1;
        for (int j = i + 1; j <= r; ++j) tail *= m[j];
        t.a[qi] = -f[i] * tail;
    }
    return t;
}

CoefficientTable closed_form_odd(const FieldSpec& spec) {
    // General odd degree: expand prod over divisors d of (w_d I - f_d Sigma_<d>)
    // with Sigma_<c1> Sigma_<c2> = gcd(c1,c2) Sigma_<lcm[c1,c2]>. For a subset
    // S of divisors the iterated gcd factors telescope to (prod S) / lcm(S).
    CoefficientTable t;
    t.degree = spec.degree;
    t.epsilon = 0;

    std::vector<std::int64_t> divs = divisors(spec.degree);
    for (std::int64_t d : divs) t.a[d] = 0;

    std::vector<std::int64_t> ds(divs.begin() + 1, divs.end());  // divisors > 1
    std::vector<Int> w(ds.size()), f(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        w[i] = prime_block(spec, ds[i]);
        f[i] = (w[i] - 1) / ds[i];
    }

    const std::size_t k = ds.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Int term = 1;
        Int prod_orders = 1;
        std::int64_t l = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                term *= -f[i];
                prod_orders *= ds[i];
                l = std::lcm(l, ds[i]);
            } else {
                term *= w[i];
            }
        }
        t.a[l] += term * prod_orders / l;
    }
    return t;
}

}  // namespace

CoefficientTable closed_form_coefficients(const FieldSpec& spec) {
    ensure_valid(spec);
    std::int64_t n = spec.degree;
    if (n == 1) {
        CoefficientTable t;
        t.a[1] = 1;
        return t;
    }
    auto fac = factorize(n);
    if (fac.size() == 1) {
        auto [q, r] = fac.front();
        if (q == 2 || n % 2 != 0) return closed_form_prime_power(spec, q, r);
    }
    if (n % 2 != 0) return closed_form_odd(spec);
    throw SpecException(SpecError::UnsupportedDegree,
                        "no closed form for even degree " + std::to_string(n) +
                            " with several prime factors");
}

CoefficientTable coefficient_table(const FieldSpec& spec) {
    Circulant s = field_circulant(spec);
    const std::int64_t n = spec.degree;

    CoefficientTable t;
    t.degree = n;
    t.epsilon = epsilon_count(spec);

    // Peel coefficients from the largest divisor down. An element of order
    // d carries sum of a[d'] over multiples d' of d; the identity and (for
    // even n) the order-2 element sigma additionally carry a[1].
    std::vector<std::int64_t> divs = divisors(n);
    // Every divisor d' > d that is a multiple of d (the subgroups containing
    // an element of order d).
    auto tail_multiples = [&](std::int64_t d) {
        Int s_ = 0;
        for (std::int64_t d2 : divs)
            if (d2 > d && d2 % d == 0) s_ += t.a[d2];
        return s_;
    };
    // Every divisor d' > d, optionally restricted to even d' (the subgroups
    // containing sigma).
    auto tail_all = [&](std::int64_t d, bool even_only) {
        Int s_ = 0;
        for (std::int64_t d2 : divs)
            if (d2 > d && (!even_only || d2 % 2 == 0)) s_ += t.a[d2];
        return s_;
    };

    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        std::int64_t d = *it;
        if (d <= 2 && n % 2 == 0) continue;  // identity and sigma handled below
        std::int64_t rep = (d == 1) ? 0 : n / d;
        t.a[d] = s.element.coefficient(rep) - tail_multiples(d);
    }
    if (n % 2 == 0) {
        Int at_e = s.element.coefficient(0);
        Int at_sigma = s.element.coefficient(n / 2);
        if (t.epsilon % 2 == 0) {
            t.a[2] = at_sigma - tail_all(2, true);
            t.a[1] = at_e - tail_all(1, false);
        } else {
            t.a[2] = at_e - tail_all(2, false);
            t.a[1] = at_sigma - t.a[2] - tail_all(2, true);
        }
    }

    if (t.a[1] != spec.conductor())
        throw std::logic_error("coefficient_table: a[1] disagrees with the prime product");
    if (!(reconstruct_circulant(t) == s))
        throw std::logic_error("coefficient_table: reconstruction mismatch");
    return t;
}

Circulant reconstruct_circulant(const CoefficientTable& table) {
    const std::int64_t n = table.degree;
    FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
    std::int64_t carrier = (table.epsilon % 2 != 0) ? n / 2 : 0;
    GroupRingElement s = GroupRingElement::basis(g, carrier).scaled(table.a.at(1));
    for (const auto& [d, coeff] : table.a) {
        if (d == 1) continue;
        s = s + sigma_subgroup(g, d).scaled(coeff);
    }
    return Circulant{std::move(s)};
}

IntMatrix circulant_to_matrix(const Circulant& c) {
    if (!(c.element == c.element.involute()))
        throw std::invalid_argument("circulant_to_matrix: element is not involution-fixed");
    const std::int64_t n = c.modulus();
    IntMatrix m(n);
    std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
    for (const auto& [g, coeff] : c.element.coefficients()) row[static_cast<std::size_t>(g)] = coeff;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            m.at(i, j) = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
    return m;
}

IntMatrix gram_matrix(const FieldSpec& spec) {
    return circulant_to_matrix(field_circulant(spec));
}

std::pair<std::int64_t, std::int64_t> signature(const FieldSpec& spec) {
    ensure_valid(spec);
    bool totally_real = (spec.degree % 2 != 0) || (epsilon_count(spec) % 2 == 0);
    if (totally_real) return {spec.degree, 0};
    return {spec.degree / 2, spec.degree / 2};
}

Int discriminant(const FieldSpec& spec) {
    ensure_valid(spec);
    Int d = 1;
    for (const auto& rp : spec.ramified) {
        Int power;
        // Exponent of p is n(1 - 1/e) = n(e-1)/e, an integer since e | n.
        std::int64_t exp = spec.degree / rp.e * (rp.e - 1);
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(rp.p),
                      static_cast<unsigned long>(exp));
        d *= power;
    }
    auto [pos, neg] = signature(spec);
    if (neg % 2 != 0) d = -d;
    return d;
}

IsometryDecision is_isometric(const FieldSpec& a, const FieldSpec& b) {
    IsometryDecision out;
    out.discriminant_a = discriminant(a);
    out.discriminant_b = discriminant(b);
    out.isometric = (a.degree == b.degree) && (out.discriminant_a == out.discriminant_b);
    if (out.isometric && !(gram_matrix(a) == gram_matrix(b)))
        throw std::logic_error("is_isometric: matched invariants but different Gram matrices");
    return out;
}

}  // namespace traceform
