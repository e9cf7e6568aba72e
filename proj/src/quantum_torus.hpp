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

#ifndef SKEIN_QUANTUM_TORUS_HPP
#define SKEIN_QUANTUM_TORUS_HPP

#include <compare>
#include <map>

#include "laurent.hpp"

namespace skein {

/// An exponent pair on the torus.
struct PQ {
    int p = 0;
    int q = 0;
    auto operator<=>(const PQ&) const = default;
};

/// Element of the trigonometric part of the noncommutative torus
/// C_t[l^{+-1}, m^{+-1}], l*m = t^2 m*l, stored in the exponential basis
/// e_{p,q} = t^{-pq} l^p m^q with
///
///     e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}.
///
/// The generators are l = e_{1,0} and m = e_{0,1}. Values are immutable in
/// spirit: every operation returns a fresh canonical element (no zero
/// coefficients stored).
class TorusElement {
  public:
    using TermMap = std::map<PQ, LaurentPolynomial>;

    TorusElement() = default;

    static TorusElement exponential(int p, int q,
                                    const LaurentPolynomial& coeff = LaurentPolynomial::one());
    static TorusElement generator_l() { return exponential(1, 0); }
    static TorusElement generator_m() { return exponential(0, 1); }
    static TorusElement scalar(const LaurentPolynomial& value) { return exponential(0, 0, value); }
    static const TorusElement& unit();

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    LaurentPolynomial coefficient(const PQ& key) const;

    void add_term(const PQ& key, const LaurentPolynomial& coeff);

    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement& operator-=(const TorusElement& rhs);
    friend TorusElement operator+(TorusElement lhs, const TorusElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend TorusElement operator-(TorusElement lhs, const TorusElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    /// Noncommutative product by the exponential rule, extended bilinearly.
    friend TorusElement operator*(const TorusElement& lhs, const TorusElement& rhs);
    TorusElement scaled(const LaurentPolynomial& factor) const;

    bool operator==(const TorusElement& rhs) const { return terms_ == rhs.terms_; }

    /// a_{p,q} == a_{-p,-q} for all pairs.
    bool is_symmetric() const;
    /// First pair violating symmetry; meaningful only when !is_symmetric().
    PQ symmetry_violation() const;

    /// Basis map e_{p,q} -> e_{p,-q}. An anti-automorphism of the product
    /// (flip_q(x*y) == flip_q(y)*flip_q(x)); see the characterization test.
    TorusElement flip_q() const;
    /// Applies t -> 1/t to every coefficient (basis map, not a ring map).
    TorusElement mirror_t() const;

  private:
    TermMap terms_;
};

/// Element of the Kauffman bracket skein algebra of the cylinder over the
/// torus, written in the cosine basis: (p,q)_T maps to e_{p,q} + e_{-p,-q}
/// under the isomorphism onto symmetric torus elements, and (0,0)_T is the
/// scalar 2. Keys are normalized to the fundamental domain p > 0, or p == 0
/// and q >= 0.
class CosineElement {
  public:
    using TermMap = std::map<PQ, LaurentPolynomial>;

    CosineElement() = default;

    /// (p,q)_T for any integer pair; the key is normalized, so
    /// basis(-p,-q) == basis(p,q).
    static CosineElement basis(int p, int q,
                               const LaurentPolynomial& coeff = LaurentPolynomial::one());
    /// The scalar s, i.e. (s/2) * (0,0)_T.
    static CosineElement scalar(const LaurentPolynomial& value);

    static PQ normalize_key(PQ key);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    LaurentPolynomial coefficient(const PQ& key) const;
    /// Largest p over the support (0 for pure scalars).
    int max_p() const;

    void add_term(PQ key, const LaurentPolynomial& coeff);

    CosineElement operator-() const;
    CosineElement& operator+=(const CosineElement& rhs);
    CosineElement& operator-=(const CosineElement& rhs);
    friend CosineElement operator+(CosineElement lhs, const CosineElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend CosineElement operator-(CosineElement lhs, const CosineElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    CosineElement scaled(const LaurentPolynomial& factor) const;

    bool operator==(const CosineElement& rhs) const { return terms_ == rhs.terms_; }

    TorusElement embed() const;
    /// (p,q) -> (p,-q) on the support.
    CosineElement flip_q() const;

  private:
    TermMap terms_;
};

/// Product in the cosine subalgebra, computed by embedding into the
/// exponential basis, multiplying there and projecting back. The printed
/// product-to-sum formula is a consequence, checked against this routine by
/// tests rather than transcribed into it.
CosineElement cosine_multiply(const CosineElement& a, const CosineElement& b);

/// Converts a symmetric torus element to the cosine basis; throws
/// NotSymmetric (naming a violating pair) otherwise.
CosineElement to_cosine(const TorusElement& a);

/// The product-to-sum formula for single cosines,
///   (p,q)_T * (r,s)_T = t^{ps-qr} (p+r,q+s)_T + t^{-(ps-qr)} (p-r,q-s)_T,
/// transcribed literally. Used as the independent route against
/// cosine_multiply in tests and the acceptance suite.
CosineElement product_to_sum_formula(PQ a, PQ b);

} // namespace skein

#endif
