/*
   Copyright 2026 The skein Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "laurent.hpp"

using namespace skein;
using testing::Rng;

namespace {

LaurentPolynomial from_pairs(std::initializer_list<std::pair<long, long>> pairs) {
    LaurentPolynomial p;
    for (const auto& [e, c] : pairs) p += LaurentPolynomial::term(e, Rational(c));
    return p;
}

} // namespace

TEST_CASE("addition cancels inverses and merges terms") {
    const LaurentPolynomial a = from_pairs({{2, 1}, {-2, 1}});
    CHECK((a + (-a)).is_zero());
    CHECK(from_pairs({{3, 1}}) + from_pairs({{3, 1}}) == from_pairs({{3, 2}}));

    // kappa_1 of the trefoil assembled from its halves
    const LaurentPolynomial high = from_pairs({{18, 1}, {10, -1}});
    const LaurentPolynomial low = from_pairs({{6, -1}, {2, -1}});
    CHECK(high + low == from_pairs({{18, 1}, {10, -1}, {6, -1}, {2, -1}}));
}

TEST_CASE("multiplication") {
    const LaurentPolynomial diff = from_pairs({{2, 1}, {-2, -1}});
    const LaurentPolynomial sum = from_pairs({{2, 1}, {-2, 1}});
    CHECK(diff * sum == from_pairs({{4, 1}, {-4, -1}}));

    Rng rng(101);
    for (int i = 0; i < 50; ++i) {
        const LaurentPolynomial x = testing::random_laurent(rng);
        CHECK(LaurentPolynomial::one() * x == x);
    }

    // middle coefficient of (l+t^2)(l+t^-2)
    CHECK(sum * LaurentPolynomial::one() == sum);
}

TEST_CASE("ring laws on random values") {
    Rng rng(102);
    for (int i = 0; i < 200; ++i) {
        const LaurentPolynomial a = testing::random_laurent(rng);
        const LaurentPolynomial b = testing::random_laurent(rng);
        const LaurentPolynomial c = testing::random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("multiplication adds degree spans") {
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const LaurentPolynomial a = testing::random_nonzero_laurent(rng);
        const LaurentPolynomial b = testing::random_nonzero_laurent(rng);
        CHECK((a * b).span() == a.span() + b.span());
    }
}

TEST_CASE("divide_exact") {
    const LaurentPolynomial denom = from_pairs({{2, 1}, {-2, -1}});

    SUBCASE("long-division example") {
        const LaurentPolynomial num = from_pairs({{6, 1}, {-6, -1}});
        CHECK(num.divide_exact(denom) == from_pairs({{4, 1}, {0, 1}, {-4, 1}}));
    }
    SUBCASE("x / x = 1") {
        Rng rng(104);
        for (int i = 0; i < 30; ++i) {
            const LaurentPolynomial x = testing::random_nonzero_laurent(rng);
            CHECK(x.divide_exact(x) == LaurentPolynomial::one());
        }
    }
    SUBCASE("nonzero remainder is an error") {
        const LaurentPolynomial num = from_pairs({{4, 1}, {0, 1}});
        CHECK_THROWS_WITH_AS(num.divide_exact(denom), doctest::Contains("no exact"), Error);
        try {
            num.divide_exact(denom);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotDivisible);
        }
    }
    SUBCASE("division by zero") {
        CHECK_THROWS_AS(denom.divide_exact(LaurentPolynomial()), Error);
    }
    SUBCASE("round trip on random pairs") {
        Rng rng(105);
        for (int i = 0; i < 200; ++i) {
            const LaurentPolynomial a = testing::random_laurent(rng);
            const LaurentPolynomial b = testing::random_nonzero_laurent(rng);
            CHECK((a * b).divide_exact(b) == a);
        }
    }
}

TEST_CASE("substitutions") {
    const LaurentPolynomial p = from_pairs({{3, 1}, {2, 1}});
    CHECK(p.negate_t() == from_pairs({{3, -1}, {2, 1}}));
    CHECK(from_pairs({{18, 1}, {2, -1}}).invert_t() == from_pairs({{-18, 1}, {-2, -1}}));
    CHECK(from_pairs({{2, 1}, {-2, 1}}).eval_at(Rational(-1)) == Rational(2));

    CHECK_THROWS_AS(p.eval_at(Rational(0)), Error);

    Rng rng(106);
    for (int i = 0; i < 100; ++i) {
        const LaurentPolynomial x = testing::random_laurent(rng);
        CHECK(x.negate_t().negate_t() == x);
        CHECK(x.invert_t().invert_t() == x);
    }
}

TEST_CASE("text form") {
    CHECK(from_pairs({{18, 1}, {10, -1}, {6, -1}, {2, -1}}).to_text() ==
          "t^18 - t^10 - t^6 - t^2");
    CHECK(LaurentPolynomial().to_text() == "0");
    CHECK(from_pairs({{0, 2}}).to_text() == "2");
    CHECK(from_pairs({{1, 1}}).to_text() == "t");
    CHECK(from_pairs({{-2, -3}}).to_text() == "-3*t^-2");
    CHECK(LaurentPolynomial::term(4, Rational(1, 2)).to_text() == "1/2*t^4");
}
