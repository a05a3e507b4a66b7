#include "traceform/group_ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace traceform {

namespace {

void require_same_group(const GroupRingElement& a, const GroupRingElement& b, const char* op) {
    if (!(a.group() == b.group()))
        throw std::invalid_argument(std::string(op) + ": elements live in different groups");
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) factors_ = {1};
    __int128 order = 1;
    for (std::int64_t f : factors_) {
        if (f < 1) throw std::invalid_argument("FiniteAbelianGroup: factors must be >= 1");
        order *= f;
        if (order > (static_cast<__int128>(1) << 62))
            throw std::invalid_argument("FiniteAbelianGroup: order too large");
    }
    order_ = static_cast<std::int64_t>(order);
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
    return FiniteAbelianGroup({n});
}

FiniteAbelianGroup FiniteAbelianGroup::trivial() {
    return FiniteAbelianGroup({1});
}

std::int64_t FiniteAbelianGroup::encode(const std::vector<std::int64_t>& tuple) const {
    if (tuple.size() != factors_.size())
        throw std::invalid_argument("encode: tuple length does not match group rank");
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t r = tuple[i] % factors_[i];
        if (r < 0) r += factors_[i];
        index += r * stride;
        stride *= factors_[i];
    }
    return index;
}

std::vector<std::int64_t> FiniteAbelianGroup::decode(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("decode: index out of range");
    std::vector<std::int64_t> tuple(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        tuple[i] = index % factors_[i];
        index /= factors_[i];
    }
    return tuple;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t a, std::int64_t b) const {
    if (rank() == 1) {
        std::int64_t s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::int64_t f : factors_) {
        std::int64_t r = (a % f + b % f) % f;
        index += r * stride;
        stride *= f;
        a /= f;
        b /= f;
    }
    return index;
}

std::int64_t FiniteAbelianGroup::negate(std::int64_t a) const {
    if (rank() == 1) return a == 0 ? 0 : order_ - a;
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::int64_t f : factors_) {
        std::int64_t r = a % f;
        index += (r == 0 ? 0 : f - r) * stride;
        stride *= f;
        a /= f;
    }
    return index;
}

GroupRingElement::GroupRingElement(FiniteAbelianGroup group) : group_(std::move(group)) {}

GroupRingElement GroupRingElement::unit(const FiniteAbelianGroup& g) {
    return basis(g, g.identity());
}

GroupRingElement GroupRingElement::basis(const FiniteAbelianGroup& g, std::int64_t index) {
    GroupRingElement x(g);
    x.add_term(index, 1);
    return x;
}

GroupRingElement GroupRingElement::from_terms(
    const FiniteAbelianGroup& g, const std::vector<std::pair<std::int64_t, Int>>& terms) {
    GroupRingElement x(g);
    for (const auto& [index, value] : terms) {
        if (index < 0 || index >= g.order())
            throw std::out_of_range("from_terms: element index out of range");
        x.add_term(index, value);
    }
    return x;
}

void GroupRingElement::add_term(std::int64_t index, const Int& value) {
    if (value == 0) return;
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
        coeffs_.emplace(index, value);
    } else {
        it->second += value;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Int GroupRingElement::coefficient(std::int64_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Int(0) : it->second;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    require_same_group(*this, rhs, "add");
    GroupRingElement out = *this;
    for (const auto& [g, c] : rhs.coeffs_) out.add_term(g, c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    require_same_group(*this, rhs, "sub");
    GroupRingElement out = *this;
    for (const auto& [g, c] : rhs.coeffs_) out.add_term(g, -c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(group_);
    for (const auto& [g, c] : coeffs_) out.coeffs_.emplace(g, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    require_same_group(*this, rhs, "mul");
    GroupRingElement out(group_);
    for (const auto& [g, c] : coeffs_)
        for (const auto& [h, d] : rhs.coeffs_) out.add_term(group_.add(g, h), c * d);
    return out;
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
    GroupRingElement out(group_);
    if (c == 0) return out;
    for (const auto& [g, v] : coeffs_) out.coeffs_.emplace(g, c * v);
    return out;
}

GroupRingElement GroupRingElement::involute() const {
    GroupRingElement out(group_);
    for (const auto& [g, c] : coeffs_) out.coeffs_.emplace(group_.negate(g), c);
    return out;
}

Int GroupRingElement::pr() const {
    return coefficient(group_.identity());
}

Int GroupRingElement::aug() const {
    Int s = 0;
    for (const auto& [g, c] : coeffs_) s += c;
    return s;
}

GroupRingElement sigma_subgroup(const FiniteAbelianGroup& g, std::int64_t d) {
    if (g.rank() != 1)
        throw std::invalid_argument("sigma_subgroup: subgroup-by-order requires a cyclic group");
    std::int64_t n = g.order();
    if (d < 1 || n % d != 0)
        throw std::invalid_argument("sigma_subgroup: order does not divide the group order");
    std::vector<std::pair<std::int64_t, Int>> terms;
    std::int64_t step = n / d;
    for (std::int64_t k = 0; k < d; ++k) terms.emplace_back(k * step, 1);
    return GroupRingElement::from_terms(g, terms);
}

std::vector<std::int64_t> subgroup_closure(const FiniteAbelianGroup& g,
                                           const std::vector<std::int64_t>& generators) {
    std::set<std::int64_t> seen{g.identity()};
    std::vector<std::int64_t> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<std::int64_t> next;
        for (std::int64_t x : frontier) {
            for (std::int64_t gen : generators) {
                if (gen < 0 || gen >= g.order())
                    throw std::out_of_range("subgroup_closure: generator out of range");
                std::int64_t y = g.add(x, gen);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

GroupRingElement sigma_subgroup_generated(const FiniteAbelianGroup& g,
                                          const std::vector<std::int64_t>& generators) {
    std::vector<std::pair<std::int64_t, Int>> terms;
    for (std::int64_t x : subgroup_closure(g, generators)) terms.emplace_back(x, 1);
    return GroupRingElement::from_terms(g, terms);
}

namespace {

// Diagonalization of A (rows x cols) by unimodular row/column operations,
// recording row operations in U so that diag = U * A * V for some unimodular
// V that is never materialized. Returns the diagonal entries, nonnegative.
// The divisibility chain is not enforced; any diagonal presentation of the
// quotient lattice is good enough for a cyclic factor list.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> a, std::vector<std::vector<Int>>& u) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    u.assign(rows, std::vector<Int>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < cols; ++k) a[dst][k] += c * a[src][k];
        for (std::size_t k = 0; k < rows; ++k) u[dst][k] += c * u[src][k];
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find a pivot.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // Euclidean reduction until the pivot divides its row and column.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) {
                    swap_rows(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    again = true;
                }
            }
        }
        ++t;
    }

    std::vector<Int> diag(rows, 0);
    for (std::size_t i = 0; i < rows && i < cols; ++i) diag[i] = abs(a[i][i]);
    return diag;
}

}  // namespace

QuotientMap::QuotientMap(const FiniteAbelianGroup& source,
                         const std::vector<std::int64_t>& generators)
    : source_(source), quotient_(FiniteAbelianGroup::trivial()) {
    const std::size_t k = source.rank();
    const auto& factors = source.invariant_factors();

    // Relation lattice of G/H inside Z^k: the group relations diag(n_i)
    // together with one column per subgroup generator.
    std::vector<std::vector<Int>> rel(k, std::vector<Int>(k + generators.size(), 0));
    for (std::size_t i = 0; i < k; ++i) rel[i][i] = factors[i];
    for (std::size_t j = 0; j < generators.size(); ++j) {
        std::int64_t gen = generators[j];
        if (gen < 0 || gen >= source.order())
            throw std::out_of_range("QuotientMap: generator out of range");
        auto tuple = source.decode(gen);
        for (std::size_t i = 0; i < k; ++i) rel[i][k + j] = tuple[i];
    }

    std::vector<Int> diag = smith_diagonal(std::move(rel), row_transform_);
    std::vector<std::int64_t> moduli;
    for (std::size_t i = 0; i < k; ++i) {
        if (diag[i] == 0)
            throw std::logic_error("QuotientMap: relation lattice not of full rank");
        if (diag[i] == 1) continue;
        kept_rows_.push_back(static_cast<std::int64_t>(i));
        kept_moduli_.push_back(diag[i].get_si());
        moduli.push_back(diag[i].get_si());
    }
    quotient_ = moduli.empty() ? FiniteAbelianGroup::trivial() : FiniteAbelianGroup(moduli);
}

std::int64_t QuotientMap::apply(std::int64_t index) const {
    auto tuple = source_.decode(index);
    std::vector<std::int64_t> image(kept_rows_.size(), 0);
    for (std::size_t out = 0; out < kept_rows_.size(); ++out) {
        const auto& row = row_transform_[static_cast<std::size_t>(kept_rows_[out])];
        Int acc = 0;
        for (std::size_t j = 0; j < tuple.size(); ++j) acc += row[j] * tuple[j];
        Int m(kept_moduli_[out]);
        Int r = acc % m;
        if (r < 0) r += m;
        image[out] = r.get_si();
    }
    if (image.empty()) return quotient_.identity();
    return quotient_.encode(image);
}

GroupRingElement quotient_push(const GroupRingElement& x,
                               const std::vector<std::int64_t>& generators) {
    QuotientMap q(x.group(), generators);
    std::vector<std::pair<std::int64_t, Int>> terms;
    for (const auto& [g, c] : x.coefficients()) terms.emplace_back(q.apply(g), c);
    return GroupRingElement::from_terms(q.quotient(), terms);
}

GroupRingElement tensor_embed(const GroupRingElement& a, const GroupRingElement& b) {
    std::vector<std::int64_t> factors = a.group().invariant_factors();
    const auto& bf = b.group().invariant_factors();
    factors.insert(factors.end(), bf.begin(), bf.end());
    FiniteAbelianGroup product(factors);

    // Index arithmetic: the combined index is ia + |G1| * ib.
    std::vector<std::pair<std::int64_t, Int>> terms;
    for (const auto& [ga, ca] : a.coefficients())
        for (const auto& [gb, cb] : b.coefficients())
            terms.emplace_back(ga + a.group().order() * gb, ca * cb);
    return GroupRingElement::from_terms(product, terms);
}

}  // namespace traceform
