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

#include "quantum_torus.hpp"

#include <sstream>

#include "error.hpp"

namespace skein {

TorusElement TorusElement::exponential(int p, int q, const LaurentPolynomial& coeff) {
    TorusElement e;
    e.add_term({p, q}, coeff);
    return e;
}

const TorusElement& TorusElement::unit() {
    static const TorusElement u = exponential(0, 0);
    return u;
}

LaurentPolynomial TorusElement::coefficient(const PQ& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void TorusElement::add_term(const PQ& key, const LaurentPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement TorusElement::operator-() const {
    TorusElement result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, -coeff);
    return result;
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
    return *this;
}

TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs) {
    TorusElement result;
    for (const auto& [a, ca] : lhs.terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            const long det = static_cast<long>(a.p) * b.q - static_cast<long>(a.q) * b.p;
            result.add_term({a.p + b.p, a.q + b.q}, ca * cb * t_power(det));
        }
    }
    return result;
}

TorusElement TorusElement::scaled(const LaurentPolynomial& factor) const {
    TorusElement result;
    if (factor.is_zero()) return result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, coeff * factor);
    return result;
}

bool TorusElement::is_symmetric() const {
    for (const auto& [key, coeff] : terms_) {
        if (coefficient({-key.p, -key.q}) != coeff) return false;
    }
    return true;
}

PQ TorusElement::symmetry_violation() const {
    for (const auto& [key, coeff] : terms_) {
        if (coefficient({-key.p, -key.q}) != coeff) return key;
    }
    return {0, 0};
}

TorusElement TorusElement::flip_q() const {
    TorusElement result;
    for (const auto& [key, coeff] : terms_) result.add_term({key.p, -key.q}, coeff);
    return result;
}

TorusElement TorusElement::mirror_t() const {
    TorusElement result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, coeff.invert_t());
    return result;
}

PQ CosineElement::normalize_key(PQ key) {
    if (key.p < 0 || (key.p == 0 && key.q < 0)) return {-key.p, -key.q};
    return key;
}

CosineElement CosineElement::basis(int p, int q, const LaurentPolynomial& coeff) {
    CosineElement c;
    c.add_term({p, q}, coeff);
    return c;
}

CosineElement CosineElement::scalar(const LaurentPolynomial& value) {
    // (0,0)_T embeds as 2 e_{0,0}, so the scalar s carries coefficient s/2.
    return basis(0, 0, value * LaurentPolynomial(Rational(1, 2)));
}

LaurentPolynomial CosineElement::coefficient(const PQ& key) const {
    auto it = terms_.find(normalize_key(key));
    return it == terms_.end() ? LaurentPolynomial() : it->second;
}

int CosineElement::max_p() const {
    int result = 0;
    for (const auto& [key, coeff] : terms_) result = std::max(result, key.p);
    return result;
}

void CosineElement::add_term(PQ key, const LaurentPolynomial& coeff) {
    if (coeff.is_zero()) return;
    key = normalize_key(key);
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CosineElement CosineElement::operator-() const {
    CosineElement result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, -coeff);
    return result;
}

CosineElement& CosineElement::operator+=(const CosineElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
    return *this;
}

CosineElement& CosineElement::operator-=(const CosineElement& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
    return *this;
}

CosineElement CosineElement::scaled(const LaurentPolynomial& factor) const {
    CosineElement result;
    if (factor.is_zero()) return result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, coeff * factor);
    return result;
}

TorusElement CosineElement::embed() const {
    TorusElement result;
    for (const auto& [key, coeff] : terms_) {
        result.add_term(key, coeff);
        result.add_term({-key.p, -key.q}, coeff); // doubles the (0,0) term
    }
    return result;
}

CosineElement CosineElement::flip_q() const {
    CosineElement result;
    for (const auto& [key, coeff] : terms_) result.add_term({key.p, -key.q}, coeff);
    return result;
}

CosineElement cosine_multiply(const CosineElement& a, const CosineElement& b) {
    return to_cosine(a.embed() * b.embed());
}

CosineElement to_cosine(const TorusElement& a) {
    if (!a.is_symmetric()) {
        const PQ bad = a.symmetry_violation();
        std::ostringstream msg;
        msg << "element is not symmetric: coefficient at (" << bad.p << "," << bad.q
            << ") differs from (" << -bad.p << "," << -bad.q << ")";
        throw Error(ErrorCode::NotSymmetric, msg.str());
    }
    CosineElement result;
    for (const auto& [key, coeff] : a.terms()) {
        if (key.p == 0 && key.q == 0) {
            result.add_term(key, coeff * LaurentPolynomial(Rational(1, 2)));
        } else if (key == CosineElement::normalize_key(key)) {
            result.add_term(key, coeff);
        }
        // the mirror half of each pair is implied by the basis
    }
    return result;
}

CosineElement product_to_sum_formula(PQ a, PQ b) {
    const long det = static_cast<long>(a.p) * b.q - static_cast<long>(a.q) * b.p;
    CosineElement result;
    result.add_term({a.p + b.p, a.q + b.q}, t_power(det));
    result.add_term({a.p - b.p, a.q - b.q}, t_power(-det));
    return result;
}

} // namespace skein
