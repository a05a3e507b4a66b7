#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "traceform/trace_form.hpp"

using namespace traceform;

namespace {

FieldSpec spec_of(std::int64_t degree, std::vector<std::pair<std::int64_t, std::int64_t>> data) {
    FieldSpec s;
    s.degree = degree;
    for (auto [p, e] : data) s.ramified.push_back({p, e});
    return s;
}

IntMatrix matrix_of(std::vector<std::vector<long>> rows) {
    IntMatrix m(static_cast<std::int64_t>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = rows[i][j];
    return m;
}

SpecError error_of(FieldSpec s) {
    try {
        validate_spec(std::move(s));
    } catch (const SpecException& e) {
        return e.kind();
    }
    throw std::logic_error("expected validation to fail");
}

}  // namespace

TEST_CASE("validation accepts and normalizes") {
    FieldSpec ok = validate_spec(spec_of(6, {{7, 3}, {5, 2}}));
    CHECK(ok.ramified[0].p == 5);  // sorted on ingest
    CHECK(ok.ramified[1].p == 7);
    CHECK(ok.conductor() == 35);
    CHECK(validate_spec(spec_of(1, {})).degree == 1);
}

TEST_CASE("validation rejects with the specific error") {
    CHECK(error_of(spec_of(4, {{5, 2}})) == SpecError::BadLcm);
    CHECK(error_of(spec_of(3, {{3, 3}})) == SpecError::WildRamification);
    CHECK(error_of(spec_of(6, {{7, 3}, {3, 2}})) == SpecError::WildRamification);  // 3 | 6
    CHECK(error_of(spec_of(3, {{9, 3}})) == SpecError::NonPrime);
    CHECK(error_of(spec_of(3, {{5, 3}})) == SpecError::BadCongruence);
    CHECK(error_of(spec_of(2, {{5, 2}, {5, 2}})) == SpecError::DuplicatePrime);
    CHECK(error_of(spec_of(0, {})) == SpecError::InvalidArgument);
    CHECK(error_of(spec_of(2, {{3, 1}})) == SpecError::InvalidArgument);
    CHECK(error_of(spec_of(4, {{5, 3}})) == SpecError::BadLcm);  // 3 does not divide 4
}

TEST_CASE("local circulants") {
    FiniteAbelianGroup g3 = FiniteAbelianGroup::cyclic(3);
    CHECK(local_circulant({7, 3}, 3).element ==
          GroupRingElement::unit(g3).scaled(7) - sigma_subgroup(g3, 3).scaled(2));

    FiniteAbelianGroup g2 = FiniteAbelianGroup::cyclic(2);
    CHECK(local_circulant({3, 2}, 2).element ==
          GroupRingElement::basis(g2, 1).scaled(3) - sigma_subgroup(g2, 2));

    FiniteAbelianGroup g4 = FiniteAbelianGroup::cyclic(4);
    CHECK(local_circulant({13, 4}, 4).element ==
          GroupRingElement::basis(g4, 2).scaled(13) - sigma_subgroup(g4, 4).scaled(3));
}

TEST_CASE("field circulants") {
    SUBCASE("two primes of index 3 in degree 3") {
        FieldSpec s = validate_spec(spec_of(3, {{7, 3}, {13, 3}}));
        FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(3);
        CHECK(field_circulant(s).element ==
              GroupRingElement::unit(g).scaled(91) - sigma_subgroup(g, 3).scaled(30));
    }
    SUBCASE("empty product is the identity") {
        FieldSpec s = validate_spec(spec_of(1, {}));
        CHECK(field_circulant(s).element ==
              GroupRingElement::unit(FiniteAbelianGroup::cyclic(1)));
    }
    SUBCASE("Eisenstein case: -I + 2 sigma") {
        FieldSpec s = validate_spec(spec_of(2, {{3, 2}}));
        FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(2);
        CHECK(field_circulant(s).element ==
              GroupRingElement::basis(g, 1).scaled(2) - GroupRingElement::unit(g));
    }
    SUBCASE("always involution-fixed with augmentation 1") {
        for (const FieldSpec& s :
             {spec_of(6, {{5, 2}, {7, 3}}), spec_of(8, {{17, 8}, {41, 8}}),
              spec_of(12, {{13, 12}}), spec_of(10, {{11, 10}, {31, 5}})}) {
            Circulant c = field_circulant(validate_spec(s));
            CHECK(c.element == c.element.involute());
            CHECK(c.element.aug() == 1);
        }
    }
}

TEST_CASE("closed-form coefficient tables") {
    SUBCASE("degree 3, two ramified primes") {
        CoefficientTable t = closed_form_coefficients(validate_spec(spec_of(3, {{7, 3}, {13, 3}})));
        CHECK(t.a.at(1) == 91);
        CHECK(t.a.at(3) == -30);
        CHECK(t.epsilon == 0);
    }
    SUBCASE("degree 9, one ramified prime of index 9") {
        CoefficientTable t = closed_form_coefficients(validate_spec(spec_of(9, {{19, 9}})));
        CHECK(t.a.at(1) == 19);
        CHECK(t.a.at(3) == 0);
        CHECK(t.a.at(9) == -2);
        CHECK(t.epsilon == 0);
    }
    SUBCASE("degree 2") {
        CoefficientTable t = closed_form_coefficients(validate_spec(spec_of(2, {{3, 2}})));
        CHECK(t.a.at(1) == 3);
        CHECK(t.a.at(2) == -1);
        CHECK(t.epsilon == 1);
    }
    SUBCASE("unsupported even composite degree") {
        CHECK_THROWS_AS(closed_form_coefficients(validate_spec(spec_of(6, {{5, 2}, {7, 3}}))),
                        SpecException);
        // ... while the expansion-based table still works there:
        CoefficientTable t = coefficient_table(validate_spec(spec_of(6, {{5, 2}, {7, 3}})));
        CHECK(t.a.at(1) == 35);
        CHECK(reconstruct_circulant(t) == field_circulant(validate_spec(spec_of(6, {{5, 2}, {7, 3}}))));
    }
}

TEST_CASE("closed form equals expansion on mixed odd degrees") {
    // Degree 15 with all three nontrivial divisors ramified exercises the
    // multiplicity factor on non-chain divisor subsets.
    for (FieldSpec s : {spec_of(15, {{31, 15}, {11, 5}, {7, 3}}), spec_of(15, {{31, 15}}),
                        spec_of(45, {{181, 45}, {19, 9}, {11, 5}}),
                        spec_of(105, {{211, 105}})}) {
        FieldSpec v = validate_spec(std::move(s));
        CoefficientTable closed = closed_form_coefficients(v);
        CoefficientTable expanded = coefficient_table(v);
        CHECK(closed == expanded);
        CHECK(reconstruct_circulant(closed) == field_circulant(v));
    }
}

TEST_CASE("closed form equals expansion exhaustively on small prime powers") {
    for (std::int64_t n : {2, 3, 4, 5, 8, 9}) {
        for (const FieldSpec& s : enumerate_specs(n, 400)) {
            CoefficientTable closed = closed_form_coefficients(s);
            CoefficientTable expanded = coefficient_table(s);
            REQUIRE(closed == expanded);
        }
    }
}

TEST_CASE("gram matrices match the displayed forms") {
    CHECK(gram_matrix(validate_spec(spec_of(3, {{7, 3}}))) ==
          matrix_of({{5, -2, -2}, {-2, 5, -2}, {-2, -2, 5}}));
    CHECK(gram_matrix(validate_spec(spec_of(2, {{5, 2}}))) == matrix_of({{3, -2}, {-2, 3}}));
    CHECK(gram_matrix(validate_spec(spec_of(1, {}))) == matrix_of({{1}}));
    CHECK(gram_matrix(validate_spec(spec_of(2, {{3, 2}}))) == matrix_of({{-1, 2}, {2, -1}}));
    CHECK(gram_matrix(validate_spec(spec_of(4, {{5, 4}}))) ==
          matrix_of({{-1, -1, 4, -1}, {-1, -1, -1, 4}, {4, -1, -1, -1}, {-1, 4, -1, -1}}));
}

TEST_CASE("circulant to matrix rejects asymmetric input") {
    FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(4);
    Circulant bad{GroupRingElement::basis(g, 1)};  // g != g^{-1}
    CHECK_THROWS_AS(circulant_to_matrix(bad), std::invalid_argument);
}

TEST_CASE("discriminants") {
    CHECK(discriminant(validate_spec(spec_of(3, {{7, 3}}))) == 49);
    CHECK(discriminant(validate_spec(spec_of(2, {{3, 2}}))) == -3);
    CHECK(discriminant(validate_spec(spec_of(4, {{5, 4}}))) == 125);
    CHECK(discriminant(validate_spec(spec_of(1, {}))) == 1);
}

TEST_CASE("signatures") {
    CHECK(signature(validate_spec(spec_of(3, {{7, 3}}))) ==
          std::pair<std::int64_t, std::int64_t>(3, 0));
    CHECK(signature(validate_spec(spec_of(2, {{3, 2}}))) ==
          std::pair<std::int64_t, std::int64_t>(1, 1));
    CHECK(signature(validate_spec(spec_of(2, {{5, 2}}))) ==
          std::pair<std::int64_t, std::int64_t>(2, 0));
}

TEST_CASE("isometry decisions") {
    FieldSpec a = validate_spec(spec_of(3, {{7, 3}}));
    FieldSpec b = validate_spec(spec_of(3, {{13, 3}}));
    FieldSpec c = validate_spec(spec_of(2, {{5, 2}}));
    FieldSpec d = validate_spec(spec_of(4, {{5, 4}}));

    CHECK(is_isometric(a, a).isometric);
    IsometryDecision ab = is_isometric(a, b);
    CHECK_FALSE(ab.isometric);
    CHECK(ab.discriminant_a == 49);
    CHECK(ab.discriminant_b == 169);
    CHECK_FALSE(is_isometric(c, d).isometric);  // degree mismatch
}

TEST_CASE("spec enumeration") {
    std::vector<FieldSpec> quadratic = enumerate_specs(2, 7);
    REQUIRE(quadratic.size() == 3);
    CHECK(quadratic[0] == validate_spec(spec_of(2, {{3, 2}})));
    CHECK(quadratic[1] == validate_spec(spec_of(2, {{5, 2}})));
    CHECK(quadratic[2] == validate_spec(spec_of(2, {{7, 2}})));

    CHECK(enumerate_specs(3, 6).empty());
    REQUIRE(enumerate_specs(1, 10).size() == 1);
    CHECK(enumerate_specs(1, 10)[0].degree == 1);

    // Every enumerated spec validates, respects the bound, and appears once,
    // sorted by conductor.
    std::vector<FieldSpec> mixed = enumerate_specs(4, 120);
    Int last = 0;
    for (const FieldSpec& s : mixed) {
        CHECK(validate_spec(s) == s);
        CHECK(s.conductor() <= 120);
        CHECK(s.conductor() >= last);
        last = s.conductor();
    }
    for (std::size_t i = 0; i < mixed.size(); ++i)
        for (std::size_t j = i + 1; j < mixed.size(); ++j) REQUIRE(!(mixed[i] == mixed[j]));
}

TEST_CASE("row sums of any gram matrix are 1") {
    for (std::int64_t n : {2, 4, 6, 9, 12}) {
        for (const FieldSpec& s : enumerate_specs(n, 150)) {
            IntMatrix m = gram_matrix(s);
            for (std::int64_t i = 0; i < m.dim(); ++i) REQUIRE(m.row_sum(i) == 1);
        }
    }
}

TEST_CASE("canonical matrix is invariant under group automorphisms") {
    std::mt19937_64 rng(0x5eed0005);
    for (const FieldSpec& raw :
         {spec_of(6, {{5, 2}, {7, 3}}), spec_of(8, {{17, 8}}), spec_of(12, {{13, 12}, {5, 2}}),
          spec_of(9, {{19, 9}, {7, 3}})}) {
        FieldSpec s = validate_spec(raw);
        IntMatrix m = gram_matrix(s);
        std::int64_t n = s.degree;
        for (int iter = 0; iter < 8; ++iter) {
            std::int64_t u;
            do {
                u = 1 + oracles::bounded(rng, n - 1);
            } while (std::gcd(u, n) != 1);
            // Relabel residue i as u*i mod n and compare P^T M P with M.
            IntMatrix relabeled(n);
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = 0; j < n; ++j)
                    relabeled.at(i, j) = m.at((u * i) % n, (u * j) % n);
            REQUIRE(relabeled == m);
        }
    }
}

TEST_CASE("determinant equals discriminant on a sample") {
    for (const FieldSpec& raw :
         {spec_of(2, {{3, 2}}), spec_of(4, {{5, 4}}), spec_of(6, {{5, 2}, {7, 3}}),
          spec_of(5, {{11, 5}}), spec_of(8, {{41, 8}})}) {
        FieldSpec s = validate_spec(raw);
        CHECK(determinant(gram_matrix(s)) == discriminant(s));
    }
}
