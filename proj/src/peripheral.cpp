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

#include "peripheral.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace skein {

IdealPolynomial IdealPolynomial::monomial(int p, int q, const LaurentPolynomial& coeff) {
    IdealPolynomial result;
    result.add_term({p, q}, coeff);
    return result;
}

LaurentPolynomial IdealPolynomial::coefficient(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? LaurentPolynomial() : it->second;
}

int IdealPolynomial::l_degree() const {
    int degree = 0;
    for (const auto& [key, coeff] : terms_) degree = std::max(degree, key.p);
    return degree;
}

void IdealPolynomial::add_term(PQ key, const LaurentPolynomial& coeff) {
    if (coeff.is_zero()) return;
    if (key.p < 0 || key.q < 0)
        throw Error(ErrorCode::InvalidArgument, "ideal polynomials take nonnegative exponents");
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

IdealPolynomial IdealPolynomial::operator-() const {
    IdealPolynomial result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, -coeff);
    return result;
}

IdealPolynomial& IdealPolynomial::operator+=(const IdealPolynomial& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
    return *this;
}

IdealPolynomial& IdealPolynomial::operator-=(const IdealPolynomial& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
    return *this;
}

IdealPolynomial operator*(const IdealPolynomial& lhs, const IdealPolynomial& rhs) {
    IdealPolynomial result;
    for (const auto& [a, ca] : lhs.terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            // (l^p m^q)(l^r m^s): commuting m^q past l^r costs t^{-2qr}.
            const long twist = -2L * a.q * b.p;
            result.add_term({a.p + b.p, a.q + b.q}, ca * cb * t_power(twist));
        }
    }
    return result;
}

IdealPolynomial IdealPolynomial::scaled(const LaurentPolynomial& factor) const {
    IdealPolynomial result;
    if (factor.is_zero()) return result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, coeff * factor);
    return result;
}

TorusElement IdealPolynomial::to_torus() const {
    TorusElement result;
    for (const auto& [key, coeff] : terms_)
        result.add_term(key, coeff * t_power(static_cast<long>(key.p) * key.q));
    return result;
}

IdealPolynomial nc_expand(const std::vector<IdealPolynomial>& factors) {
    IdealPolynomial result = IdealPolynomial::scalar(LaurentPolynomial::one());
    for (const auto& factor : factors) result = result * factor;
    return result;
}

namespace {

struct SupportBox {
    int p_min, p_max, q_min, q_max;
};

SupportBox support_box(const TorusElement& t) {
    SupportBox box{0, 0, 0, 0};
    bool first = true;
    for (const auto& [key, coeff] : t.terms()) {
        if (first) {
            box = {key.p, key.p, key.q, key.q};
            first = false;
        } else {
            box.p_min = std::min(box.p_min, key.p);
            box.p_max = std::max(box.p_max, key.p);
            box.q_min = std::min(box.q_min, key.q);
            box.q_max = std::max(box.q_max, key.q);
        }
    }
    return box;
}

// e_{a,b} * X, expanded through the exponential rule.
TorusElement left_mul_exponential(int a, int b, const TorusElement& x) {
    return TorusElement::exponential(a, b) * x;
}

// Divides a unit monomial out of every coefficient. The unit is picked from
// the lexicographically largest support pair: sign and exponent of its
// coefficient's lowest-degree term.
LaurentPolynomial normalization_unit(const CosineElement& c) {
    if (c.is_zero()) return LaurentPolynomial::one();
    const auto& [key, coeff] = *c.terms().rbegin();
    const long low = coeff.min_exponent();
    const bool negative = coeff.terms().begin()->second < 0;
    return t_power(low, negative);
}

} // namespace

IdealToPeripheralResult ideal_to_peripheral(const IdealPolynomial& poly) {
    if (poly.is_zero())
        throw Error(ErrorCode::InvalidArgument, "cannot symmetrize the zero polynomial");
    const TorusElement exponential = poly.to_torus();
    const SupportBox box = support_box(exponential);

    // A symmetrizing shift must send the support box to one centered at the
    // origin, so the centroid pins the candidate; scan the whole box anyway.
    for (int p0 = box.p_min; p0 <= box.p_max; ++p0) {
        for (int q0 = box.q_min; q0 <= box.q_max; ++q0) {
            const TorusElement shifted = left_mul_exponential(-p0, -q0, exponential);
            if (!shifted.is_symmetric()) continue;
            CosineElement cosine = to_cosine(shifted);
            const LaurentPolynomial unit = normalization_unit(cosine);
            cosine = cosine.scaled(LaurentPolynomial::one().divide_exact(unit));
            return {{cosine, ""}, {p0, q0}, unit};
        }
    }
    std::ostringstream msg;
    msg << "no recentering in [" << box.p_min << "," << box.p_max << "]x[" << box.q_min << ","
        << box.q_max << "] symmetrizes the element";
    throw Error(ErrorCode::NoSymmetrization, msg.str());
}

IdealPolynomial peripheral_to_ideal(const PeripheralElement& el) {
    const TorusElement embedded = el.element.embed();
    if (embedded.is_zero()) return {};
    const SupportBox box = support_box(embedded);
    const int p0 = std::max(0, -box.p_min);
    const int q0 = std::max(0, -box.q_min);
    const TorusElement shifted = left_mul_exponential(p0, q0, embedded);
    return ideal_from_torus(shifted);
}

IdealPolynomial ideal_from_torus(const TorusElement& t) {
    IdealPolynomial result;
    for (const auto& [key, coeff] : t.terms())
        result.add_term(key, coeff * t_power(-static_cast<long>(key.p) * key.q));
    return result;
}

std::map<PQ, Rational> classical_specialization(const IdealPolynomial& poly) {
    std::map<PQ, Rational> result;
    for (const auto& [key, coeff] : poly.terms()) {
        Rational value = coeff.eval_at(Rational(-1));
        if ((key.p + key.q) % 2 != 0) value = -value;
        if (value != 0) result.emplace(key, value);
    }
    return result;
}

} // namespace skein
