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

// Deterministic random-value generators for the property tests. Fixed seeds
// keep failures reproducible.

#ifndef SKEIN_TESTS_GENERATORS_HPP
#define SKEIN_TESTS_GENERATORS_HPP

#include <random>

#include "peripheral.hpp"
#include "quantum_torus.hpp"
#include "solid_torus.hpp"

namespace skein::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng) {
    long num = rand_int(rng, -5, 5);
    if (num == 0) num = 1;
    const long den = (rand_int(rng, 0, 3) == 0) ? rand_int(rng, 2, 3) : 1;
    Rational value(num, den);
    value.canonicalize();
    return value;
}

inline LaurentPolynomial random_laurent(Rng& rng, int max_terms = 4, long exp_range = 6) {
    LaurentPolynomial p;
    const int terms = static_cast<int>(rand_int(rng, 0, max_terms));
    for (int i = 0; i < terms; ++i)
        p += LaurentPolynomial::term(rand_int(rng, -exp_range, exp_range), random_rational(rng));
    return p;
}

inline LaurentPolynomial random_nonzero_laurent(Rng& rng, int max_terms = 4, long exp_range = 6) {
    for (;;) {
        LaurentPolynomial p = random_laurent(rng, max_terms, exp_range);
        if (!p.is_zero()) return p;
    }
}

inline TorusElement random_torus(Rng& rng, int max_terms = 4, int pq_range = 10) {
    TorusElement result;
    const int terms = static_cast<int>(rand_int(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) {
        const int p = static_cast<int>(rand_int(rng, -pq_range, pq_range));
        const int q = static_cast<int>(rand_int(rng, -pq_range, pq_range));
        result.add_term({p, q}, random_laurent(rng, 2, 4));
    }
    return result;
}

inline CosineElement random_cosine(Rng& rng, int max_terms = 3, int pq_range = 6) {
    CosineElement result;
    const int terms = static_cast<int>(rand_int(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) {
        const int p = static_cast<int>(rand_int(rng, -pq_range, pq_range));
        const int q = static_cast<int>(rand_int(rng, -pq_range, pq_range));
        result.add_term({p, q}, random_laurent(rng, 2, 4));
    }
    return result;
}

inline CosineElement random_nonzero_cosine(Rng& rng, int max_terms = 3, int pq_range = 6) {
    for (;;) {
        CosineElement c = random_cosine(rng, max_terms, pq_range);
        if (!c.is_zero()) return c;
    }
}

inline SolidTorusElement random_solid(Rng& rng, SolidBasis basis, long max_index = 8) {
    SolidTorusElement result(basis);
    const int terms = static_cast<int>(rand_int(rng, 1, 3));
    for (int i = 0; i < terms; ++i)
        result.add_term(rand_int(rng, 0, max_index), random_laurent(rng, 2, 4));
    return result;
}

inline IdealPolynomial random_ideal(Rng& rng, int max_terms = 4, int pq_range = 4) {
    IdealPolynomial result;
    const int terms = static_cast<int>(rand_int(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) {
        const int p = static_cast<int>(rand_int(rng, 0, pq_range));
        const int q = static_cast<int>(rand_int(rng, 0, pq_range));
        result.add_term({p, q}, random_laurent(rng, 2, 4));
    }
    return result;
}

} // namespace skein::testing

#endif
