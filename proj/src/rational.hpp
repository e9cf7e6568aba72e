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

#ifndef SKEIN_RATIONAL_HPP
#define SKEIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace skein {

// Exact scalar types. All coefficient arithmetic in the library goes through
// these; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (optionally signed) into a canonical rational.
inline Rational rational_from_string(const std::string& text) {
    Rational value;
    if (text.empty() || value.set_str(text, 10) != 0)
        throw Error(ErrorCode::SyntaxError, "invalid rational literal '" + text + "'");
    if (value.get_den() == 0)
        throw Error(ErrorCode::DivisionByZero, "rational literal with zero denominator");
    value.canonicalize();
    return value;
}

inline std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace skein

#endif
