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

// Closed-form transcriptions of the action of a single cosine (p,q)_T on
// T_n(alpha). These are test fixtures: the library computes the action by
// lift-multiply-project, and these formulas are checked against it.
//
// The "corrected" left action is
//
//   (p,q)_T . T_n = t^{-(2n+p)q} [ (-t^-2)^q S_{n+p} - (-t^2)^q S_{n+p-2} ]
//                 + t^{(2n-p)q}  [ (-t^-2)^q S_{p-n} - (-t^2)^q S_{p-n-2} ]
//
// The "verbatim" variant repeats (-t^-2)^q in the second slot of the first
// bracket. Deriving the first bracket from the product-to-sum formula and the
// closed form of x_{p+n,q} forces (-t^2)^q there, and the verbatim variant
// disagrees with the lift-multiply-project action for q odd; the suite pins
// both facts.

#ifndef SKEIN_TESTS_LEMMA1_FORMS_HPP
#define SKEIN_TESTS_LEMMA1_FORMS_HPP

#include "solid_torus.hpp"

namespace skein::testing {

inline SolidTorusElement lemma1_left_corrected(int p, int q, long n) {
    SolidTorusElement result(SolidBasis::ChebS);
    const LaurentPolynomial first = t_power(-(2 * n + p) * static_cast<long>(q));
    result.add_term(n + p, first * neg_tm2_pow(q));
    result.add_term(n + p - 2, -(first * neg_t2_pow(q)));
    const LaurentPolynomial second = t_power((2 * n - p) * static_cast<long>(q));
    result.add_term(p - n, second * neg_tm2_pow(q));
    result.add_term(p - n - 2, -(second * neg_t2_pow(q)));
    return result;
}

inline SolidTorusElement lemma1_left_verbatim(int p, int q, long n) {
    SolidTorusElement result(SolidBasis::ChebS);
    const LaurentPolynomial first = t_power(-(2 * n + p) * static_cast<long>(q));
    result.add_term(n + p, first * neg_tm2_pow(q));
    result.add_term(n + p - 2, -(first * neg_tm2_pow(q))); // the misprinted slot
    const LaurentPolynomial second = t_power((2 * n - p) * static_cast<long>(q));
    result.add_term(p - n, second * neg_tm2_pow(q));
    result.add_term(p - n - 2, -(second * neg_t2_pow(q)));
    return result;
}

// Right action as printed:
//   T_n . (p,q)_T = t^{(2n+p)q} [ (-t^2)^q S_{p+n} - (-t^-2)^q S_{p+n-2} ]
//                 + t^{-(2n-p)q}[ (-t^2)^q S_{p-n} - (-t^-2)^q S_{p-n-2} ]
inline SolidTorusElement lemma1_right(int p, int q, long n) {
    SolidTorusElement result(SolidBasis::ChebS);
    const LaurentPolynomial first = t_power((2 * n + p) * static_cast<long>(q));
    result.add_term(p + n, first * neg_t2_pow(q));
    result.add_term(p + n - 2, -(first * neg_tm2_pow(q)));
    const LaurentPolynomial second = t_power(-(2 * n - p) * static_cast<long>(q));
    result.add_term(p - n, second * neg_t2_pow(q));
    result.add_term(p - n - 2, -(second * neg_tm2_pow(q)));
    return result;
}

} // namespace skein::testing

#endif
