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

#ifndef SKEIN_CHEBYSHEV_HPP
#define SKEIN_CHEBYSHEV_HPP

#include <map>

#include "rational.hpp"

namespace skein {

/// The two Chebyshev families used on the torus and in the solid torus:
///   T_0 = 2, T_1 = x   (trace-normalized first kind)
///   S_0 = 1, S_1 = x   (second kind)
/// both extended to all integer indices by T_{n+1} = x T_n - T_{n-1} and the
/// same recurrence for S. The extensions satisfy T_{-n} = T_n and
/// S_{-k} = -S_{k-2}; negative indices are produced through these identities.
enum class ChebyshevKind { T, S };

/// Integer-coefficient polynomial in one variable x, exponent -> coefficient.
using IntPolynomial = std::map<long, Integer>;

/// T_n or S_n as a polynomial in x, for any integer n. Memoized; safe for
/// concurrent callers.
const IntPolynomial& chebyshev(ChebyshevKind kind, long n);

/// Exact S-basis expansion of T_n for n >= 0, negative S-indices already
/// folded away: T_0 = 2 S_0, T_1 = S_1, T_n = S_n - S_{n-2} for n >= 2.
std::map<long, Integer> t_in_s_basis(long n);

} // namespace skein

#endif
