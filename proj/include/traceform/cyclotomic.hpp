#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "traceform/field_spec.hpp"
#include "traceform/matrix.hpp"

namespace traceform {

/**
 * Trace of eta_f^a from the f-th cyclotomic field down to Q, for squarefree
 * f >= 1: the Ramanujan sum c_f(a) = mu(f/g) * phi(f) / phi(f/g) with
 * g = gcd(a, f). Throws std::invalid_argument for non-squarefree f.
 */
std::int64_t ramanujan_sum(std::int64_t f, std::int64_t a);

/**
 * Integer-coefficient formal sum of f-th roots of unity, indexed by Z/fZ.
 * Products add exponents mod f; the representation is not faithful (the
 * roots satisfy relations), but the trace functional extracted from it is
 * exact, which is all the oracle ever reads off. Coefficients are stored
 * densely; fine at desk scale.
 */
class FormalRootSum {
public:
    explicit FormalRootSum(std::int64_t modulus);

    static FormalRootSum root_power(std::int64_t modulus, std::int64_t a);  // eta_f^a

    std::int64_t modulus() const noexcept { return modulus_; }
    const Int& coeff(std::int64_t a) const;
    void add_term(std::int64_t a, const Int& value);
    bool is_zero() const;

    FormalRootSum operator+(const FormalRootSum& rhs) const;
    FormalRootSum operator*(const FormalRootSum& rhs) const;
    FormalRootSum scaled(const Int& c) const;

    bool operator==(const FormalRootSum&) const = default;

private:
    std::int64_t modulus_;
    std::vector<Int> coeffs_;
};

/// Trace to Q by linearity: sum of coeff(a) * c_f(a).
Int trace_full(const FormalRootSum& x);

/**
 * A concrete subfield of Q(eta_f) realizing a spec: per-prime primitive
 * roots t_i fix discrete logarithms, and the character
 * chi: (Z/fZ)* -> Z/nZ sends t_i to u_i * n/e_i. Distinct choices realize
 * the (generally several) fields sharing the same ramification data.
 */
class FieldRealization {
public:
    const FieldSpec& spec() const noexcept { return spec_; }
    std::int64_t conductor() const noexcept { return conductor_; }
    std::int64_t totient() const noexcept { return totient_; }
    const std::vector<std::int64_t>& primitive_roots() const noexcept { return roots_; }
    const std::vector<std::int64_t>& chi_units() const noexcept { return units_; }

    /// chi(x) for a unit x mod f; -1 marks non-units.
    std::int64_t chi(std::int64_t x) const { return chi_[static_cast<std::size_t>(x)]; }

    /// Fiber chi^{-1}(j), ascending residues; all fibers have size phi(f)/n.
    const std::vector<std::int64_t>& fiber(std::int64_t j) const;

private:
    friend FieldRealization realize(const FieldSpec&, const std::vector<std::int64_t>&,
                                    const std::vector<std::int64_t>&);
    FieldRealization() = default;

    FieldSpec spec_;
    std::int64_t conductor_ = 1;
    std::int64_t totient_ = 1;
    std::vector<std::int64_t> roots_;
    std::vector<std::int64_t> units_;
    std::vector<std::int64_t> chi_;
    std::vector<std::vector<std::int64_t>> fibers_;
};

/**
 * Build a realization. Empty `primitive_roots` picks the smallest primitive
 * root mod each p_i; empty `chi_units` uses 1 for every factor. Explicit
 * roots are checked (throws std::invalid_argument if one fails), units must
 * be invertible mod the respective e_i.
 */
FieldRealization realize(const FieldSpec& spec, const std::vector<std::int64_t>& primitive_roots = {},
                         const std::vector<std::int64_t>& chi_units = {});

/// Realization with seeded-random primitive roots and chi units.
FieldRealization realize_random(const FieldSpec& spec, std::mt19937_64& rng);

/// Normal integral basis as Gauss periods over the chi-fibers.
std::vector<FormalRootSum> nib(const FieldRealization& r);

/**
 * Gram matrix of the trace form in the Gauss-period basis, computed purely
 * inside the cyclotomic field: G[i][j] = trace_full(e_i * e_j) * n / phi(f).
 * The division is an algebraic identity; inexactness throws logic_error.
 */
IntMatrix gram_oracle(const FieldRealization& r);

struct CertifyReport {
    bool pass = true;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t failed_trial = -1;
    std::vector<std::int64_t> failed_roots;
    std::vector<std::int64_t> failed_units;
    std::optional<IntMatrix> expected;
    std::optional<IntMatrix> actual;
};

/**
 * Runs `trials` independent realizations (the first deterministic, the rest
 * seeded-random) and checks gram_oracle == gram_matrix entrywise on each.
 */
CertifyReport certify(const FieldSpec& spec, std::int64_t trials, std::uint64_t seed);

}  // namespace traceform
