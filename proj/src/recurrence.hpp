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

#ifndef SKEIN_RECURRENCE_HPP
#define SKEIN_RECURRENCE_HPP

#include <vector>

#include "peripheral.hpp"
#include "solid_torus.hpp"

namespace skein {

/// Table of colored Kauffman brackets kappa_n. Nonnegative indices are stored
/// values; the accessor extends to all integers through the boundary data
/// kappa_0 = 1, kappa_{-1} = 0 and the fold kappa_{-k} = -kappa_{k-2}.
class KappaSequence {
  public:
    KappaSequence() { table_.emplace(0, LaurentPolynomial::one()); }

    bool has(long n) const;
    /// Folded accessor, defined for every integer with has(|fold target|).
    LaurentPolynomial at(long n) const;
    /// Stores kappa_n for n >= 1.
    void set(long n, const LaurentPolynomial& value);
    /// Largest stored index.
    long max_index() const { return table_.rbegin()->first; }
    const std::map<long, LaurentPolynomial>& table() const { return table_; }

    bool operator==(const KappaSequence& rhs) const { return table_ == rhs.table_; }

  private:
    std::map<long, LaurentPolynomial> table_;
};

/// One instance of the orthogonality relation: sum over j of
/// coefficients[j] * kappa_j == 0 for the knot the element belongs to.
/// Negative kappa indices are already folded into nonnegative ones (which can
/// merge coefficients, e.g. the factor 2 in front of kappa_1 at n = 0 for
/// elements of top p-degree 1).
struct LinearRelation {
    long n = 0;
    std::map<long, LaurentPolynomial> coefficients;

    LaurentPolynomial at(long index) const {
        auto it = coefficients.find(index);
        return it == coefficients.end() ? LaurentPolynomial() : it->second;
    }
};

/// The relation obtained by pairing the element against T_n(alpha): the
/// module action T_n(alpha) . a is computed by lift-multiply-project, expanded
/// in the S basis, and each S_j coefficient is read as the coefficient of
/// kappa_j.
LinearRelation orthogonality_relation(const PeripheralElement& a, long n);

/// Coefficient of kappa_{n + p_max} in orthogonality_relation(a, n), where
/// p_max is the largest p in the element's cosine support.
LaurentPolynomial leading_coefficient(const PeripheralElement& a, long n);

struct RecurrenceAnalysis {
    int p_max = 0;
    /// All n >= 0 whose leading coefficient is identically zero. Complete:
    /// beyond checked_up_to the q-blocks of the leading coefficient cannot
    /// overlap, so it is nonzero.
    std::vector<long> vanishing_n;
    /// Smallest N with nonzero leading coefficient for every n >= N, so
    /// kappa_{n + p_max} is determined by lower values for all n >= N.
    long nu = 0;
    /// Last n that required an explicit zero test (-1 when separation holds
    /// from the start).
    long checked_up_to = -1;
    /// Would signal a support whose whole top-p row cancels; unreachable for
    /// canonical elements and always false.
    bool degenerate = false;
};

RecurrenceAnalysis analyze(const PeripheralElement& a);

struct Theorem2Report {
    bool holds = false;
    long violating_n = -1;
    /// Last n explicitly tested; beyond it nonvanishing is automatic.
    long checked_up_to = -1;
};

/// Degree-2 criterion: extracts gamma_{2,q} from a polynomial of l-degree
/// exactly 2 and tests E_n(t) = sum_q gamma_{2,q} (-1)^q t^{(2n+2)q} for
/// identical vanishing at each n from 0 up to the separation bound.
Theorem2Report check_theorem2(const IdealPolynomial& poly);

/// Solves the orthogonality recurrence for kappa_1..kappa_{n_max}. The seed
/// supplies values the recursion cannot reach: indices 1..p_max-1, plus
/// kappa_{n+p_max} for every n where the leading coefficient vanishes. For
/// top-degree-1 elements the n = 0 relation bootstraps kappa_1, so no seed is
/// needed. Every division must be exact; NotDivisible signals an element/seed
/// pair that is not consistent with any knot.
KappaSequence solve_kappa(const PeripheralElement& a,
                          const std::map<long, LaurentPolynomial>& seed, long n_max);

/// (-1)^n (t^{2n+2} - t^{-2n-2}) / (t^2 - t^{-2}), evaluated by exact
/// division.
LaurentPolynomial kappa_closed_form_unknot(long n);

} // namespace skein

#endif
