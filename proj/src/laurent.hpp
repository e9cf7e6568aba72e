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

#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <map>
#include <string>

#include "rational.hpp"

namespace skein {

/// Sparse Laurent polynomial in one variable t with exact rational
/// coefficients: the coefficient ring for the whole library.
///
/// Canonical form: zero coefficients are never stored, so operator== is
/// structural equality of values. All operations are exact; the only numeric
/// escape hatch is eval_at, which still returns an exact rational.
class LaurentPolynomial {
  public:
    using TermMap = std::map<long, Rational>;

    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& constant) { set(0, constant); }
    LaurentPolynomial(long constant) { set(0, Rational(constant)); }

    /// c * t^exponent
    static LaurentPolynomial term(long exponent, const Rational& coeff = Rational(1)) {
        LaurentPolynomial p;
        p.set(exponent, coeff);
        return p;
    }

    static const LaurentPolynomial& zero();
    static const LaurentPolynomial& one();

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    // pre: !is_zero()
    long min_exponent() const;
    long max_exponent() const;
    long span() const { return max_exponent() - min_exponent(); }

    const TermMap& terms() const { return terms_; }
    Rational coefficient(long exponent) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);

    bool operator==(const LaurentPolynomial& rhs) const { return terms_ == rhs.terms_; }

    /// Exact quotient: returns q with q * divisor == *this. Long division runs
    /// from the top exponent; a nonzero remainder throws NotDivisible rather
    /// than truncating.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    /// t -> -t
    LaurentPolynomial negate_t() const;
    /// t -> 1/t
    LaurentPolynomial invert_t() const;
    /// Evaluate at a nonzero rational point.
    Rational eval_at(const Rational& value) const;

    /// Nonnegative integer power.
    LaurentPolynomial pow(long exponent) const;

    /// Sum of c*t^k pieces, highest exponent first, e.g. "t^18 - t^10 - t^6 - t^2".
    std::string to_text() const;

  private:
    void set(long exponent, const Rational& coeff) {
        if (coeff != 0) terms_[exponent] = coeff;
    }
    void add_term(long exponent, const Rational& coeff);

    TermMap terms_;
};

/// (-t^2)^q and (-t^-2)^q as exact monomials, for any integer q. These show up
/// throughout the solid-torus projection formulas.
LaurentPolynomial neg_t2_pow(long q);
LaurentPolynomial neg_tm2_pow(long q);

/// +-t^k monomial.
LaurentPolynomial t_power(long k, bool negative = false);

} // namespace skein

#endif
