#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "traceform/numeric.hpp"

using namespace traceform;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK(is_prime(2147483647));          // 2^31 - 1
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(3215031751));    // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime(341550071728321));
}

TEST_CASE("factorization and friends") {
    CHECK(factorize(1).empty());
    CHECK(factorize(360) ==
          std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(97) == 96);
    CHECK(mobius(1) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
}

TEST_CASE("modular helpers") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(pow_mod(-1, 3, 7) == 6);
    CHECK(mul_mod(1000000007, 998244353, 1000000009) ==
          (static_cast<__int128>(1000000007) * 998244353 % 1000000009));
}

TEST_CASE("primitive roots") {
    CHECK(is_primitive_root(3, 7));
    CHECK_FALSE(is_primitive_root(2, 7));  // 2^3 = 1 mod 7
    CHECK_FALSE(is_primitive_root(4, 7));
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(2) == 1);
    CHECK(smallest_primitive_root(41) == 6);
    // The order of the smallest primitive root is exactly p - 1.
    for (std::int64_t p : {3, 5, 11, 13, 101, 997}) {
        std::int64_t t = smallest_primitive_root(p);
        std::int64_t x = 1;
        int order = 0;
        do {
            x = mul_mod(x, t, p);
            ++order;
        } while (x != 1);
        CHECK(order == p - 1);
    }
}
