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

#ifndef SKEIN_SOLID_TORUS_HPP
#define SKEIN_SOLID_TORUS_HPP

#include "quantum_torus.hpp"

namespace skein {

/// The three working bases of the skein module of the solid torus
/// C[t,t^-1][alpha]: powers of the core curve alpha, and the two Chebyshev
/// families evaluated at alpha.
enum class SolidBasis { Monomial, ChebT, ChebS };

/// Finitely supported vector over one of the three bases with Laurent
/// coefficients. Indices are kept nonnegative: in the S basis a negative
/// index is folded away at insertion via S_{-k} = -S_{k-2} (and S_{-1} = 0),
/// in the T basis via T_{-n} = T_n, so downstream consumers never see a
/// negative index.
class SolidTorusElement {
  public:
    using TermMap = std::map<long, LaurentPolynomial>;

    explicit SolidTorusElement(SolidBasis basis = SolidBasis::ChebS) : basis_(basis) {}

    static SolidTorusElement basis_vector(SolidBasis basis, long index,
                                          const LaurentPolynomial& coeff = LaurentPolynomial::one());
    /// alpha = T_1(alpha) = S_1(alpha).
    static SolidTorusElement alpha() { return basis_vector(SolidBasis::Monomial, 1); }

    SolidBasis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    LaurentPolynomial coefficient(long index) const;
    long max_index() const;

    /// Adds coeff at the given (possibly negative) index, folding per basis.
    void add_term(long index, const LaurentPolynomial& coeff);

    SolidTorusElement operator-() const;
    SolidTorusElement& operator+=(const SolidTorusElement& rhs);
    SolidTorusElement& operator-=(const SolidTorusElement& rhs);
    friend SolidTorusElement operator+(SolidTorusElement lhs, const SolidTorusElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend SolidTorusElement operator-(SolidTorusElement lhs, const SolidTorusElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    SolidTorusElement scaled(const LaurentPolynomial& factor) const;

    /// Structural equality; elements in different bases compare unequal even
    /// if they denote the same skein (convert first).
    bool operator==(const SolidTorusElement& rhs) const = default;

  private:
    SolidBasis basis_;
    TermMap terms_;
};

/// Exact change of basis; roundtrips are identities.
SolidTorusElement convert_basis(const SolidTorusElement& u, SolidBasis target);

/// Image x_{p,q} in the solid torus of the boundary cosine (p,q)_T, by the
/// closed form
///
///   x_{p,q} = t^{-pq} ( (-t^-2)^q S_p(alpha) - (-t^2)^q S_{p-2}(alpha) ),
///
/// valid for every integer pair after normalizing to the fundamental domain
/// (the form is itself symmetric under (p,q) -> (-p,-q)). Result in the S
/// basis. x_{0,0} = 2 falls out of the same formula.
SolidTorusElement x_pq(int p, int q);

/// Linear extension of x_{p,q} over a cosine element; the scalar part passes
/// through unchanged.
SolidTorusElement x_map(const CosineElement& a);

/// Left action of the boundary algebra: lift u through the T basis
/// (T_n(alpha) -> (n,0)_T), multiply in the cosine algebra, project back with
/// x_map. Bilinear in both arguments; result in the S basis.
SolidTorusElement left_act(const CosineElement& a, const SolidTorusElement& u);

/// Right action u . a, equal to the left action of the q-flipped element:
/// T_n(alpha) . (p,q)_T = (p,-q)_T . T_n(alpha).
SolidTorusElement right_act(const SolidTorusElement& u, const CosineElement& a);

struct RecurrenceCheckReport {
    bool ok = true;
    int failed_p = 0;
    int failed_q = 0;
    long instances = 0;
};

/// Verifies that the closed form satisfies
///   x_{p+1,q} = t^{-q} (1,0).x_{p,q} - t^{-2q} x_{p-1,q}
/// for all 1 <= p < p_max and q in [q_lo, q_hi]; stops at the first
/// counterexample.
RecurrenceCheckReport xpq_recurrence_check(int p_max, int q_lo, int q_hi);

} // namespace skein

#endif
