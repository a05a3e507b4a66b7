#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "traceform/field_spec.hpp"
#include "traceform/group_ring.hpp"
#include "traceform/matrix.hpp"

namespace traceform {

/**
 * A symmetric circulant: an element s of Z[Z/nZ] with s equal to its own
 * involute. It encodes the trace pairing of the field in a normal integral
 * basis via beta(X, Y) = Pr(s X Ybar).
 */
struct Circulant {
    GroupRingElement element;

    std::int64_t modulus() const { return element.group().order(); }
    bool operator==(const Circulant&) const = default;
};

/**
 * Circulant of the one-prime building block: p*Y' - h*Sigma_<e> in Z[Z/nZ],
 * where h = (p-1)/e and Y' is the identity when h is even and the unique
 * element of order 2 when h is odd.
 */
Circulant local_circulant(const RamifiedPrime& rp, std::int64_t degree);

/// Convolution product of all local circulants (identity for n = 1).
Circulant field_circulant(const FieldSpec& spec);

/**
 * Coefficients of the canonical circulant in the subgroup-sum basis:
 *
 *   s = a[1] * sigma^(epsilon mod 2) + sum over divisors d > 1 of a[d] * Sigma_<d>
 *
 * where sigma is the shift by n/2 (only relevant for even n) and epsilon
 * counts the ramified primes with odd cofactor h. Every divisor of the
 * degree is present as a key; a[1] is always the product of the ramified
 * primes.
 */
struct CoefficientTable {
    std::int64_t degree = 1;
    std::map<std::int64_t, Int> a;
    std::int64_t epsilon = 0;

    bool operator==(const CoefficientTable&) const = default;
};

/**
 * Closed-form coefficient table. Covers degree 1, odd degrees, and powers
 * of two; throws SpecException(UnsupportedDegree) for other even degrees,
 * for which callers fall back to coefficient_table().
 */
CoefficientTable closed_form_coefficients(const FieldSpec& spec);

/// Coefficient table read off the expanded field circulant; any valid spec.
CoefficientTable coefficient_table(const FieldSpec& spec);

/// Rebuild the circulant a CoefficientTable describes.
Circulant reconstruct_circulant(const CoefficientTable& table);

/**
 * Gram matrix of the circulant: M[i][j] is the coefficient of residue
 * (j - i) mod n, symmetric because s is involution-fixed.
 */
IntMatrix circulant_to_matrix(const Circulant& c);

/// Canonical Gram matrix of the integral trace form of the field.
IntMatrix gram_matrix(const FieldSpec& spec);

/// Field discriminant: (-1)^(r2) * prod p^(n(1 - 1/e)).
Int discriminant(const FieldSpec& spec);

/// (n, 0) when the field is totally real, (n/2, n/2) when totally complex.
std::pair<std::int64_t, std::int64_t> signature(const FieldSpec& spec);

/// Number of ramified primes with odd cofactor h = (p-1)/e.
std::int64_t epsilon_count(const FieldSpec& spec);

struct IsometryDecision {
    bool isometric = false;
    Int discriminant_a;
    Int discriminant_b;
};

/**
 * Trace forms of tame cyclic fields are isometric exactly when degrees and
 * discriminants agree; a positive answer is cross-checked against entrywise
 * equality of the canonical Gram matrices.
 */
IsometryDecision is_isometric(const FieldSpec& a, const FieldSpec& b);

}  // namespace traceform
