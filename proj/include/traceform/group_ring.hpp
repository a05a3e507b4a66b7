#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "traceform/numeric.hpp"

namespace traceform {

/**
 * A finite abelian group presented as a direct product of cyclic groups,
 * Z/n_1 x ... x Z/n_k. Elements are tuples of residues, stored throughout
 * as a single mixed-radix index in [0, order) with the first factor
 * varying fastest. The factor list is not required to be in invariant
 * divisibility order; structural equality of groups is equality of the
 * factor lists.
 */
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    static FiniteAbelianGroup cyclic(std::int64_t n);
    static FiniteAbelianGroup trivial();

    std::int64_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }

    // Tuple <-> index conversion; encode reduces each coordinate first.
    std::int64_t encode(const std::vector<std::int64_t>& tuple) const;
    std::vector<std::int64_t> decode(std::int64_t index) const;

    std::int64_t identity() const noexcept { return 0; }
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t negate(std::int64_t a) const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_;
};

/**
 * An element of the integral group ring Z[G]. Coefficients are kept in a
 * canonical sparse form: an ordered map from element index to a nonzero
 * GMP integer. Values are immutable once built; every operation returns
 * a fresh element.
 */
class GroupRingElement {
public:
    explicit GroupRingElement(FiniteAbelianGroup group);  // zero element

    // 1 * identity, 1 * g, and a general term list (summed, zeros dropped).
    static GroupRingElement unit(const FiniteAbelianGroup& g);
    static GroupRingElement basis(const FiniteAbelianGroup& g, std::int64_t index);
    static GroupRingElement from_terms(const FiniteAbelianGroup& g,
                                       const std::vector<std::pair<std::int64_t, Int>>& terms);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::map<std::int64_t, Int>& coefficients() const noexcept { return coeffs_; }
    Int coefficient(std::int64_t index) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;  // convolution
    GroupRingElement scaled(const Int& c) const;

    /// Coefficient of g moves to g^{-1}; an involutory ring automorphism.
    GroupRingElement involute() const;

    /// Coefficient of the identity element.
    Int pr() const;

    /// Augmentation: sum of all coefficients (a ring homomorphism to Z).
    Int aug() const;

    bool operator==(const GroupRingElement&) const = default;

private:
    void add_term(std::int64_t index, const Int& value);

    FiniteAbelianGroup group_;
    std::map<std::int64_t, Int> coeffs_;
};

// Sum of all elements of the unique subgroup of order d of a cyclic group.
GroupRingElement sigma_subgroup(const FiniteAbelianGroup& g, std::int64_t d);

// Sum over the subgroup generated by the given element indices. Named apart
// from the by-order form so that a braced single-generator list cannot
// silently select the wrong overload.
GroupRingElement sigma_subgroup_generated(const FiniteAbelianGroup& g,
                                          const std::vector<std::int64_t>& generators);

// All elements of the subgroup generated by `generators`, ascending indices.
std::vector<std::int64_t> subgroup_closure(const FiniteAbelianGroup& g,
                                           const std::vector<std::int64_t>& generators);

/**
 * The canonical projection G -> G/H for the subgroup generated by the given
 * generators, with the quotient presented again as a product of cyclic
 * groups (computed via a Smith normal form of the relation lattice).
 */
class QuotientMap {
public:
    QuotientMap(const FiniteAbelianGroup& source, const std::vector<std::int64_t>& generators);

    const FiniteAbelianGroup& source() const noexcept { return source_; }
    const FiniteAbelianGroup& quotient() const noexcept { return quotient_; }
    std::int64_t apply(std::int64_t index) const;

private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup quotient_;
    std::vector<std::vector<Int>> row_transform_;  // U with D = U*A*V
    std::vector<std::int64_t> kept_rows_;          // rows of U with diagonal > 1
    std::vector<std::int64_t> kept_moduli_;
};

// Image of x under the ring homomorphism Z[G] -> Z[G/H].
GroupRingElement quotient_push(const GroupRingElement& x,
                               const std::vector<std::int64_t>& generators);

// Image of (a, b) under Z[G1] (x) Z[G2] ~ Z[G1 x G2].
GroupRingElement tensor_embed(const GroupRingElement& a, const GroupRingElement& b);

}  // namespace traceform
