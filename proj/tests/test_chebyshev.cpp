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

#include "chebyshev.hpp"

using namespace skein;

namespace {

IntPolynomial poly(std::initializer_list<std::pair<long, long>> pairs) {
    IntPolynomial p;
    for (const auto& [e, c] : pairs) p.emplace(e, Integer(c));
    return p;
}

IntPolynomial times_x(const IntPolynomial& p) {
    IntPolynomial r;
    for (const auto& [e, c] : p) r.emplace(e + 1, c);
    return r;
}

IntPolynomial minus(IntPolynomial a, const IntPolynomial& b) {
    for (const auto& [e, c] : b) {
        auto [it, inserted] = a.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) a.erase(it);
        }
    }
    return a;
}

} // namespace

TEST_CASE("small values") {
    CHECK(chebyshev(ChebyshevKind::T, 0) == poly({{0, 2}}));
    CHECK(chebyshev(ChebyshevKind::T, 1) == poly({{1, 1}}));
    CHECK(chebyshev(ChebyshevKind::T, 2) == poly({{2, 1}, {0, -2}}));
    CHECK(chebyshev(ChebyshevKind::S, 0) == poly({{0, 1}}));
    CHECK(chebyshev(ChebyshevKind::S, 1) == poly({{1, 1}}));
    CHECK(chebyshev(ChebyshevKind::S, 4) == poly({{4, 1}, {2, -3}, {0, 1}}));
    CHECK(chebyshev(ChebyshevKind::T, 4) == poly({{4, 1}, {2, -4}, {0, 2}}));
}

TEST_CASE("negative indices via the symmetry identities") {
    CHECK(chebyshev(ChebyshevKind::S, -1).empty());
    CHECK(chebyshev(ChebyshevKind::S, -2) == poly({{0, -1}}));

    // backward recurrence oracle: T_{n-1} = x T_n - T_{n+1}
    IntPolynomial t_next = chebyshev(ChebyshevKind::T, 1);
    IntPolynomial t_curr = chebyshev(ChebyshevKind::T, 0);
    for (long n = -1; n >= -8; --n) {
        const IntPolynomial t_prev = minus(times_x(t_curr), t_next);
        CHECK(chebyshev(ChebyshevKind::T, n) == t_prev);
        t_next = t_curr;
        t_curr = t_prev;
    }
    CHECK(chebyshev(ChebyshevKind::T, -3) == poly({{3, 1}, {1, -3}}));

    IntPolynomial s_next = chebyshev(ChebyshevKind::S, 1);
    IntPolynomial s_curr = chebyshev(ChebyshevKind::S, 0);
    for (long n = -1; n >= -8; --n) {
        const IntPolynomial s_prev = minus(times_x(s_curr), s_next);
        CHECK(chebyshev(ChebyshevKind::S, n) == s_prev);
        s_next = s_curr;
        s_curr = s_prev;
    }
}

TEST_CASE("recurrence holds in both directions") {
    for (const ChebyshevKind kind : {ChebyshevKind::T, ChebyshevKind::S}) {
        for (long n = -20; n <= 20; ++n) {
            const IntPolynomial lhs = chebyshev(kind, n + 1);
            const IntPolynomial rhs = minus(times_x(chebyshev(kind, n)), chebyshev(kind, n - 1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("symmetry identities") {
    for (long n = 0; n <= 20; ++n) {
        CHECK(chebyshev(ChebyshevKind::T, -n) == chebyshev(ChebyshevKind::T, n));
    }
    for (long k = 1; k <= 20; ++k) {
        IntPolynomial negated;
        for (const auto& [e, c] : chebyshev(ChebyshevKind::S, k - 2)) negated.emplace(e, -c);
        CHECK(chebyshev(ChebyshevKind::S, -k) == negated);
    }
}

TEST_CASE("T in the S basis") {
    CHECK(t_in_s_basis(0) == std::map<long, Integer>{{0, Integer(2)}});
    CHECK(t_in_s_basis(1) == std::map<long, Integer>{{1, Integer(1)}});
    CHECK(t_in_s_basis(4) == std::map<long, Integer>{{4, Integer(1)}, {2, Integer(-1)}});

    // T_n = S_n - S_{n-2} as polynomials
    for (long n = 0; n <= 20; ++n) {
        const IntPolynomial lhs = chebyshev(ChebyshevKind::T, n);
        const IntPolynomial rhs =
            minus(chebyshev(ChebyshevKind::S, n), chebyshev(ChebyshevKind::S, n - 2));
        CHECK(lhs == rhs);
    }

    // and the n = 4 identity written out: x^4-4x^2+2 = (x^4-3x^2+1) - (x^2-1)
    CHECK(minus(poly({{4, 1}, {2, -3}, {0, 1}}), poly({{2, 1}, {0, -1}})) ==
          poly({{4, 1}, {2, -4}, {0, 2}}));
}
