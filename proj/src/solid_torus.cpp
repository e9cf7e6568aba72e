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

#include "solid_torus.hpp"

#include "chebyshev.hpp"
#include "error.hpp"

namespace skein {

SolidTorusElement SolidTorusElement::basis_vector(SolidBasis basis, long index,
                                                  const LaurentPolynomial& coeff) {
    SolidTorusElement u(basis);
    u.add_term(index, coeff);
    return u;
}

LaurentPolynomial SolidTorusElement::coefficient(long index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? LaurentPolynomial() : it->second;
}

long SolidTorusElement::max_index() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "max_index of zero element");
    return terms_.rbegin()->first;
}

void SolidTorusElement::add_term(long index, const LaurentPolynomial& coeff) {
    if (coeff.is_zero()) return;
    if (index < 0) {
        switch (basis_) {
            case SolidBasis::Monomial:
                throw Error(ErrorCode::InvalidArgument, "negative power of alpha");
            case SolidBasis::ChebT:
                add_term(-index, coeff); // T_{-n} = T_n
                return;
            case SolidBasis::ChebS:
                if (index == -1) return;        // S_{-1} = 0
                add_term(-index - 2, -coeff);   // S_{-k} = -S_{k-2}
                return;
        }
    }
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SolidTorusElement SolidTorusElement::operator-() const {
    SolidTorusElement result(basis_);
    for (const auto& [index, coeff] : terms_) result.terms_.emplace(index, -coeff);
    return result;
}

SolidTorusElement& SolidTorusElement::operator+=(const SolidTorusElement& rhs) {
    if (basis_ != rhs.basis_)
        throw Error(ErrorCode::TypeMismatch, "adding solid-torus elements in different bases");
    for (const auto& [index, coeff] : rhs.terms_) add_term(index, coeff);
    return *this;
}

SolidTorusElement& SolidTorusElement::operator-=(const SolidTorusElement& rhs) {
    if (basis_ != rhs.basis_)
        throw Error(ErrorCode::TypeMismatch, "subtracting solid-torus elements in different bases");
    for (const auto& [index, coeff] : rhs.terms_) add_term(index, -coeff);
    return *this;
}

SolidTorusElement SolidTorusElement::scaled(const LaurentPolynomial& factor) const {
    SolidTorusElement result(basis_);
    if (factor.is_zero()) return result;
    for (const auto& [index, coeff] : terms_) result.terms_.emplace(index, coeff * factor);
    return result;
}

namespace {

ChebyshevKind kind_of(SolidBasis basis) {
    return basis == SolidBasis::ChebT ? ChebyshevKind::T : ChebyshevKind::S;
}

SolidTorusElement to_monomial(const SolidTorusElement& u) {
    SolidTorusElement result(SolidBasis::Monomial);
    for (const auto& [index, coeff] : u.terms()) {
        for (const auto& [power, c] : chebyshev(kind_of(u.basis()), index))
            result.add_term(power, coeff * LaurentPolynomial(Rational(c)));
    }
    return result;
}

// Top-down elimination against the (monic above index 0) Chebyshev family.
SolidTorusElement from_monomial(const SolidTorusElement& u, SolidBasis target) {
    SolidTorusElement result(target);
    SolidTorusElement::TermMap rest = u.terms();
    const ChebyshevKind kind = kind_of(target);
    while (!rest.empty()) {
        const auto [degree, coeff] = *rest.rbegin();
        LaurentPolynomial lead = coeff;
        if (degree == 0 && kind == ChebyshevKind::T)
            lead = lead * LaurentPolynomial(Rational(1, 2)); // T_0 = 2
        result.add_term(degree, lead);
        for (const auto& [power, c] : chebyshev(kind, degree)) {
            auto it = rest.find(power);
            const LaurentPolynomial delta = lead * LaurentPolynomial(Rational(c));
            if (it == rest.end()) {
                if (!delta.is_zero()) rest.emplace(power, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rest.erase(it);
            }
        }
    }
    return result;
}

} // namespace

SolidTorusElement convert_basis(const SolidTorusElement& u, SolidBasis target) {
    if (u.basis() == target) return u;
    if (u.basis() == SolidBasis::Monomial) return from_monomial(u, target);
    const SolidTorusElement mono = to_monomial(u);
    return target == SolidBasis::Monomial ? mono : from_monomial(mono, target);
}

SolidTorusElement x_pq(int p, int q) {
    if (p < 0) {
        p = -p;
        q = -q;
    }
    SolidTorusElement result(SolidBasis::ChebS);
    const LaurentPolynomial shift = t_power(-static_cast<long>(p) * q);
    result.add_term(p, shift * neg_tm2_pow(q));
    result.add_term(p - 2, -(shift * neg_t2_pow(q)));
    return result;
}

SolidTorusElement x_map(const CosineElement& a) {
    SolidTorusElement result(SolidBasis::ChebS);
    for (const auto& [key, coeff] : a.terms()) result += x_pq(key.p, key.q).scaled(coeff);
    return result;
}

SolidTorusElement left_act(const CosineElement& a, const SolidTorusElement& u) {
    const SolidTorusElement in_t = convert_basis(u, SolidBasis::ChebT);
    CosineElement lifted;
    for (const auto& [index, coeff] : in_t.terms())
        lifted.add_term({static_cast<int>(index), 0}, coeff);
    return x_map(cosine_multiply(a, lifted));
}

SolidTorusElement right_act(const SolidTorusElement& u, const CosineElement& a) {
    return left_act(a.flip_q(), u);
}

RecurrenceCheckReport xpq_recurrence_check(int p_max, int q_lo, int q_hi) {
    if (p_max < 2) throw Error(ErrorCode::InvalidArgument, "xpq_recurrence_check needs p_max >= 2");
    RecurrenceCheckReport report;
    const CosineElement one_zero = CosineElement::basis(1, 0);
    for (int q = q_lo; q <= q_hi; ++q) {
        for (int p = 1; p < p_max; ++p) {
            const SolidTorusElement lhs = x_pq(p + 1, q);
            SolidTorusElement rhs = left_act(one_zero, x_pq(p, q)).scaled(t_power(-q));
            rhs -= x_pq(p - 1, q).scaled(t_power(-2L * q));
            ++report.instances;
            if (!(lhs == rhs)) {
                report.ok = false;
                report.failed_p = p;
                report.failed_q = q;
                return report;
            }
        }
    }
    return report;
}

} // namespace skein
