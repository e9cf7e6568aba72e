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

#ifndef SKEIN_PERIPHERAL_HPP
#define SKEIN_PERIPHERAL_HPP

#include <string>
#include <vector>

#include "quantum_torus.hpp"

namespace skein {

/// Normal-ordered noncommutative polynomial in l and m with nonnegative
/// exponents: sum of gamma_{p,q} l^p m^q, all l factors to the left. Products
/// are re-sorted through m^q l^r = t^{-2qr} l^r m^q before storage, so the
/// representation is canonical.
class IdealPolynomial {
  public:
    using TermMap = std::map<PQ, LaurentPolynomial>;

    IdealPolynomial() = default;

    /// gamma * l^p m^q, p,q >= 0.
    static IdealPolynomial monomial(int p, int q,
                                    const LaurentPolynomial& coeff = LaurentPolynomial::one());
    static IdealPolynomial scalar(const LaurentPolynomial& value) { return monomial(0, 0, value); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    LaurentPolynomial coefficient(int p, int q) const;
    /// Degree in l (0 for the zero polynomial).
    int l_degree() const;

    void add_term(PQ key, const LaurentPolynomial& coeff);

    IdealPolynomial operator-() const;
    IdealPolynomial& operator+=(const IdealPolynomial& rhs);
    IdealPolynomial& operator-=(const IdealPolynomial& rhs);
    friend IdealPolynomial operator+(IdealPolynomial lhs, const IdealPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend IdealPolynomial operator-(IdealPolynomial lhs, const IdealPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    /// Normal-ordered product: (l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}.
    friend IdealPolynomial operator*(const IdealPolynomial& lhs, const IdealPolynomial& rhs);
    IdealPolynomial scaled(const LaurentPolynomial& factor) const;

    bool operator==(const IdealPolynomial& rhs) const { return terms_ == rhs.terms_; }

    /// Exponential form under l^p m^q = t^{pq} e_{p,q}.
    TorusElement to_torus() const;

  private:
    TermMap terms_;
};

/// Product of a list of factors, left to right.
IdealPolynomial nc_expand(const std::vector<IdealPolynomial>& factors);

/// A cosine element known to annihilate the empty link in the complement of a
/// specific knot (empty tag for ad-hoc elements).
struct PeripheralElement {
    CosineElement element;
    std::string knot;
};

struct IdealToPeripheralResult {
    PeripheralElement peripheral;
    /// The recentering monomial e_{-p0,-q0} that symmetrized the support.
    PQ recentering;
    /// Unit monomial (+-t^k) divided out of the recentred element so the
    /// lexicographically largest cosine coefficient has a positive
    /// lowest-degree term at exponent zero.
    LaurentPolynomial unit;
};

/// Inverts the contraction step: writes the polynomial in the exponential
/// basis, searches recentering monomials over the window spanned by the
/// support's coordinate ranges, and returns the first left-recentering whose
/// exponential form is symmetric, as a cosine element together with the
/// normalization divided out. Throws NoSymmetrization when the window holds
/// no symmetrizing monomial.
IdealToPeripheralResult ideal_to_peripheral(const IdealPolynomial& poly);

/// Contraction: embed to exponentials, left-multiply by the minimal monomial
/// e_{p0,q0} clearing negative exponents, rewrite e_{p,q} -> t^{-pq} l^p m^q.
IdealPolynomial peripheral_to_ideal(const PeripheralElement& el);

/// Classical specialization t = -1, l -> -l, m -> -m. The result commutes;
/// exponent pair -> rational coefficient.
std::map<PQ, Rational> classical_specialization(const IdealPolynomial& poly);

/// Inverse of IdealPolynomial::to_torus on nonnegative supports; rejects
/// negative exponents.
IdealPolynomial ideal_from_torus(const TorusElement& t);

} // namespace skein

#endif
