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

#include "laurent.hpp"

#include <sstream>

namespace skein {

const LaurentPolynomial& LaurentPolynomial::zero() {
    static const LaurentPolynomial z;
    return z;
}

const LaurentPolynomial& LaurentPolynomial::one() {
    static const LaurentPolynomial o(1);
    return o;
}

long LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "min_exponent of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPolynomial::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    LaurentPolynomial result;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) result.add_term(ea + eb, ca * cb);
    return result;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
    if (is_zero()) return {};

    // If an exact quotient q exists, its exponent range is forced:
    // q.min = a.min - b.min and q.max = a.max - b.max.
    const long quotient_min = min_exponent() - divisor.min_exponent();
    LaurentPolynomial remainder = *this;
    LaurentPolynomial quotient;
    while (!remainder.is_zero()) {
        const long exp = remainder.max_exponent() - divisor.max_exponent();
        if (exp < quotient_min)
            throw Error(ErrorCode::NotDivisible,
                        "no exact Laurent quotient: remainder " + remainder.to_text());
        const Rational coeff =
            remainder.terms_.rbegin()->second / divisor.terms_.rbegin()->second;
        const LaurentPolynomial piece = term(exp, coeff);
        quotient += piece;
        remainder -= piece * divisor;
    }
    return quotient;
}

LaurentPolynomial LaurentPolynomial::negate_t() const {
    LaurentPolynomial result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, (e % 2 == 0) ? c : -c);
    return result;
}

LaurentPolynomial LaurentPolynomial::invert_t() const {
    LaurentPolynomial result;
    for (const auto& [e, c] : terms_) result.terms_.emplace(-e, c);
    return result;
}

Rational LaurentPolynomial::eval_at(const Rational& value) const {
    if (value == 0) throw Error(ErrorCode::EvalAtZero, "evaluation point must be nonzero");
    Rational result(0);
    for (const auto& [e, c] : terms_) {
        Integer num = value.get_num();
        Integer den = value.get_den();
        const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Integer num_pow, den_pow;
        mpz_pow_ui(num_pow.get_mpz_t(), num.get_mpz_t(), k);
        mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), k);
        Rational power = (e < 0) ? Rational(den_pow, num_pow) : Rational(num_pow, den_pow);
        power.canonicalize();
        result += c * power;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::pow(long exponent) const {
    if (exponent < 0)
        throw Error(ErrorCode::InvalidArgument, "negative power of a general Laurent polynomial");
    LaurentPolynomial result = one();
    LaurentPolynomial base = *this;
    long k = exponent;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::string LaurentPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPolynomial neg_t2_pow(long q) { return t_power(2 * q, (q % 2) != 0); }

LaurentPolynomial neg_tm2_pow(long q) { return t_power(-2 * q, (q % 2) != 0); }

LaurentPolynomial t_power(long k, bool negative) {
    return LaurentPolynomial::term(k, Rational(negative ? -1 : 1));
}

} // namespace skein
