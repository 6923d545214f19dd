#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pencils/gf.hpp"

#include <set>
#include <stdexcept>
#include <vector>

using namespace pencils;

TEST_CASE("modulus choice is the lexicographically smallest irreducible") {
    CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(make_field(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(make_field(3, 3)->modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
    CHECK(make_field(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
}

TEST_CASE("fields are cached by (p, r)") {
    CHECK(make_field(7, 1).get() == make_field(7, 1).get());
    CHECK(make_field(2, 5).get() == make_field(2, 5).get());
}

TEST_CASE("GF(9) value checks against the modulus x^2 + 1") {
    auto k = make_field(3, 2);
    // code 3 is the class of x, so 3*3 = x^2 = -1 = 2
    CHECK(k->mul(3, 3) == 2);
    // (1 + x)^2 = 1 + 2x + x^2 = 2x, code 6
    CHECK(k->mul(4, 4) == 6);
    CHECK(k->inv(3) == 6);
    CHECK(k->mul(3, 6) == 1);
    CHECK(k->neg(3) == 6);
    CHECK(k->add(4, 8) == 0); // (1+x) + (2+2x)
}

TEST_CASE("field axioms and Fermat over every prime power up to 100") {
    for (std::uint64_t q = 2; q <= 100; q = next_prime_power(q)) {
        auto pr = factor_prime_power(q);
        REQUIRE(pr.has_value());
        auto k = make_field(static_cast<std::uint32_t>(pr->first),
                            static_cast<std::uint32_t>(pr->second));
        CAPTURE(q);
        for (Fe a = 0; a < k->q(); ++a) {
            CHECK(k->add(a, k->neg(a)) == 0);
            CHECK(k->pow(a, q) == a);
            if (a != 0) {
                CHECK(k->mul(a, k->inv(a)) == 1);
                CHECK(k->pow(a, q - 1) == 1);
            }
        }
        // distributivity and Frobenius additivity on all pairs
        const std::uint32_t p = k->p();
        for (Fe a = 0; a < k->q(); ++a)
            for (Fe b = 0; b < k->q(); ++b) {
                CHECK(k->mul(a, k->add(b, 1)) == k->add(k->mul(a, b), a));
                CHECK(k->pow(k->add(a, b), p) ==
                      k->add(k->pow(a, p), k->pow(b, p)));
            }
    }
}

TEST_CASE("square detection matches the brute-force square set") {
    for (std::uint64_t q = 3; q <= 81; q = next_prime_power(q)) {
        if (q % 2 == 0) continue;
        auto pr = factor_prime_power(q);
        auto k = make_field(static_cast<std::uint32_t>(pr->first),
                            static_cast<std::uint32_t>(pr->second));
        CAPTURE(q);
        std::set<Fe> squares;
        for (Fe a = 0; a < k->q(); ++a) squares.insert(k->mul(a, a));
        CHECK(k->count_squares() == squares.size());
        for (Fe a = 0; a < k->q(); ++a)
            CHECK(k->is_square(a) == (squares.count(a) > 0));
    }
}

TEST_CASE("char-2 square roots invert squaring") {
    for (std::uint32_t r = 1; r <= 6; ++r) {
        auto k = make_field(2, r);
        for (Fe a = 0; a < k->q(); ++a) {
            Fe s = k->sqrt_char2(a);
            CHECK(k->mul(s, s) == a);
        }
    }
}

TEST_CASE("trace lands in the prime field and is additive") {
    auto k4 = make_field(2, 2);
    CHECK(k4->trace_to_prime(0) == 0);
    CHECK(k4->trace_to_prime(1) == 0); // 1 + 1
    CHECK(k4->trace_to_prime(2) == 1); // x + x^2 = 1 for x^2+x+1
    CHECK(k4->trace_to_prime(3) == 1);
    for (std::uint32_t q : {8u, 9u, 27u}) {
        auto pr = factor_prime_power(q);
        auto k = make_field(static_cast<std::uint32_t>(pr->first),
                            static_cast<std::uint32_t>(pr->second));
        for (Fe a = 0; a < k->q(); ++a) {
            CHECK(k->trace_to_prime(a) < k->p());
            for (Fe b = 0; b < k->q(); ++b)
                CHECK(k->trace_to_prime(k->add(a, b)) ==
                      (k->trace_to_prime(a) + k->trace_to_prime(b)) % k->p());
        }
    }
}

TEST_CASE("pow conventions") {
    auto k = make_field(5, 1);
    CHECK(k->pow(0, 0) == 1);
    CHECK(k->pow(0, 7) == 0);
    CHECK(k->pow(2, 0) == 1);
    auto k8 = make_field(2, 3);
    CHECK(k8->pow(0, 0) == 1);
    for (Fe a = 1; a < 8; ++a)
        CHECK(k8->mul(k8->mul(a, a), a) == k8->pow(a, 3));
}

TEST_CASE("from_int reduces through the prime subfield") {
    auto k4 = make_field(2, 2);
    CHECK(k4->from_int(2) == 0);
    CHECK(k4->from_int(-1) == 1);
    auto k7 = make_field(7, 1);
    CHECK(k7->from_int(-4) == 3);
    CHECK(k7->from_int(21) == 0);
}

TEST_CASE("embeddings are field homomorphisms pinned to the smallest root") {
    auto sub = make_field(2, 2);
    auto sup = make_field(2, 4);
    Embedding emb(sub, sup);

    // the image of the class of x must be a root of x^2 + x + 1 upstairs
    Fe rho = emb(2);
    Fe value = sup->add(sup->add(sup->mul(rho, rho), rho), 1);
    CHECK(value == 0);

    std::set<Fe> image;
    for (Fe a = 0; a < sub->q(); ++a) {
        image.insert(emb(a));
        for (Fe b = 0; b < sub->q(); ++b) {
            CHECK(emb(sub->add(a, b)) == sup->add(emb(a), emb(b)));
            CHECK(emb(sub->mul(a, b)) == sup->mul(emb(a), emb(b)));
        }
    }
    CHECK(image.size() == sub->q()); // injective
    CHECK(emb(0) == 0);
    CHECK(emb(1) == 1);

    // no smaller code is a root of the subfield modulus
    for (Fe c = 0; c < rho; ++c) {
        Fe v = sup->add(sup->add(sup->mul(c, c), c), 1);
        CHECK(v != 0);
    }

    Embedding down(make_field(3, 1), make_field(3, 2));
    CHECK(down(2) == 2);
    CHECK_THROWS_AS(Embedding(make_field(2, 2), make_field(2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Embedding(make_field(2, 1), make_field(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1048583, 1), std::invalid_argument);
    CHECK_NOTHROW(make_field(2, 20));
}

TEST_CASE("element operations reject invalid input") {
    auto k = make_field(3, 1);
    CHECK_THROWS_AS(k->inv(0), std::domain_error);
    CHECK_THROWS_AS(make_field(2, 2)->is_square(1), std::domain_error);
    CHECK_THROWS_AS(make_field(2, 2)->count_squares(), std::domain_error);
    CHECK_THROWS_AS(k->sqrt_char2(1), std::domain_error);
}

TEST_CASE("field spec parsing") {
    CHECK(parse_field_spec("9")->p() == 3);
    CHECK(parse_field_spec("9")->r() == 2);
    CHECK(parse_field_spec("2^10")->q() == 1024);
    CHECK(parse_field_spec("53")->q() == 53);
    CHECK_THROWS_AS(parse_field_spec("12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("2^40"), std::invalid_argument);
}

TEST_CASE("prime power helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(841));
    CHECK(factor_prime_power(841) == std::make_pair(std::uint64_t{29}, 2u));
    CHECK(factor_prime_power(64) == std::make_pair(std::uint64_t{2}, 6u));
    CHECK_FALSE(factor_prime_power(12).has_value());
    CHECK(next_prime_power(7) == 8);
    CHECK(next_prime_power(8) == 9);
    CHECK(next_prime_power(9) == 11);
    CHECK(next_prime_power(840) == 841);
}

TEST_CASE("enumeration is the code order") {
    auto k = make_field(2, 2);
    CHECK(k->enumerate() == std::vector<Fe>{0, 1, 2, 3});
}
