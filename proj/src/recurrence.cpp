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

#include "recurrence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "error.hpp"

namespace skein {

bool KappaSequence::has(long n) const {
    if (n >= 0) return table_.count(n) > 0;
    if (n == -1) return true;
    return has(-n - 2);
}

LaurentPolynomial KappaSequence::at(long n) const {
    if (n >= 0) {
        auto it = table_.find(n);
        if (it == table_.end()) {
            std::ostringstream msg;
            msg << "kappa_" << n << " has not been computed";
            throw Error(ErrorCode::InvalidArgument, msg.str());
        }
        return it->second;
    }
    if (n == -1) return LaurentPolynomial();
    return -at(-n - 2); // kappa_{-k} = -kappa_{k-2}
}

void KappaSequence::set(long n, const LaurentPolynomial& value) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "only kappa_n with n >= 1 can be assigned");
    table_[n] = value;
}

LinearRelation orthogonality_relation(const PeripheralElement& a, long n) {
    if (a.element.is_zero())
        throw Error(ErrorCode::InvalidArgument, "orthogonality relation of the zero element");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "orthogonality relation needs n >= 0");
    const SolidTorusElement acted =
        right_act(SolidTorusElement::basis_vector(SolidBasis::ChebT, n), a.element);
    LinearRelation relation;
    relation.n = n;
    for (const auto& [index, coeff] : acted.terms()) relation.coefficients.emplace(index, coeff);
    return relation;
}

LaurentPolynomial leading_coefficient(const PeripheralElement& a, long n) {
    return orthogonality_relation(a, n).at(n + a.element.max_p());
}

namespace {

// Separation bound shared by analyze and check_theorem2: blocks of the
// expression  sum_j c_j t^{w q_j}  (distinct integers q_j, weight w > 0)
// occupy disjoint exponent ranges once w * mingap exceeds the total
// coefficient span, so the sum cannot vanish there.
struct BlockData {
    long min_gap = 0;  // 0 means a single block
    long span = 0;
};

BlockData block_data(const std::vector<std::pair<long, LaurentPolynomial>>& blocks) {
    BlockData data;
    std::set<long> multipliers;
    bool have_span = false;
    long lo = 0, hi = 0;
    for (const auto& [q, coeff] : blocks) {
        multipliers.insert(q);
        if (!have_span) {
            lo = coeff.min_exponent();
            hi = coeff.max_exponent();
            have_span = true;
        } else {
            lo = std::min(lo, coeff.min_exponent());
            hi = std::max(hi, coeff.max_exponent());
        }
    }
    data.span = have_span ? hi - lo : 0;
    long gap = 0;
    long prev = 0;
    bool first = true;
    for (long q : multipliers) {
        if (!first) gap = (gap == 0) ? q - prev : std::min(gap, q - prev);
        prev = q;
        first = false;
    }
    data.min_gap = gap;
    return data;
}

// Largest n with (2n + 2 + p) * gap <= span, i.e. the last n that needs an
// explicit vanishing test; -1 when none do.
long separation_limit(const BlockData& data, long p) {
    if (data.min_gap == 0) return -1; // single q-block never cancels
    const long numerator = data.span - (2 + p) * data.min_gap;
    if (numerator < 0) return -1;
    return numerator / (2 * data.min_gap);
}

} // namespace

RecurrenceAnalysis analyze(const PeripheralElement& a) {
    if (a.element.is_zero())
        throw Error(ErrorCode::DegenerateElement, "cannot analyze the zero element");
    RecurrenceAnalysis report;
    report.p_max = a.element.max_p();

    // Top-row blocks. For p_max >= 1 each support pair (p_max, q) contributes
    // the multiplier q; a p_max = 0 element acts symmetrically, contributing
    // q and -q.
    std::vector<std::pair<long, LaurentPolynomial>> blocks;
    for (const auto& [key, coeff] : a.element.terms()) {
        if (key.p != report.p_max) continue;
        blocks.push_back({key.q, coeff});
        if (report.p_max == 0 && key.q != 0) blocks.push_back({-key.q, coeff});
    }
    if (blocks.empty()) {
        // Unreachable for canonical elements: max_p always has a nonzero row.
        report.degenerate = true;
        throw Error(ErrorCode::DegenerateElement, "top p-row of the element is empty");
    }

    report.checked_up_to = separation_limit(block_data(blocks), report.p_max);
    for (long n = 0; n <= report.checked_up_to; ++n) {
        if (leading_coefficient(a, n).is_zero()) report.vanishing_n.push_back(n);
    }
    report.nu = report.vanishing_n.empty() ? 0 : report.vanishing_n.back() + 1;
    return report;
}

Theorem2Report check_theorem2(const IdealPolynomial& poly) {
    if (poly.l_degree() != 2)
        throw Error(ErrorCode::WrongDegree, "criterion applies to polynomials of l-degree 2");
    std::vector<std::pair<long, LaurentPolynomial>> blocks;
    for (const auto& [key, coeff] : poly.terms()) {
        if (key.p == 2) blocks.push_back({key.q, coeff});
    }

    Theorem2Report report;
    report.checked_up_to = separation_limit(block_data(blocks), 0);
    for (long n = 0; n <= report.checked_up_to; ++n) {
        LaurentPolynomial e_n;
        for (const auto& [q, gamma] : blocks)
            e_n += gamma * t_power((2 * n + 2) * q, (q % 2) != 0);
        if (e_n.is_zero()) {
            report.holds = false;
            report.violating_n = n;
            return report;
        }
    }
    report.holds = true;
    return report;
}

namespace {

// Plugs known kappa values into a relation; nonzero residual means the
// element and seed cannot both belong to one knot.
void verify_relation(const LinearRelation& relation, const KappaSequence& seq) {
    LaurentPolynomial residual;
    for (const auto& [index, coeff] : relation.coefficients) residual += coeff * seq.at(index);
    if (!residual.is_zero()) {
        std::ostringstream msg;
        msg << "relation at n = " << relation.n
            << " is not annihilated: element and seed are inconsistent (residual "
            << residual.to_text() << ")";
        throw Error(ErrorCode::NotDivisible, msg.str());
    }
}

} // namespace

KappaSequence solve_kappa(const PeripheralElement& a,
                          const std::map<long, LaurentPolynomial>& seed, long n_max) {
    if (a.element.is_zero())
        throw Error(ErrorCode::InvalidArgument, "cannot solve against the zero element");
    if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");

    KappaSequence seq;
    for (const auto& [index, value] : seed) {
        if (index < 1)
            throw Error(ErrorCode::InvalidArgument, "seed indices must be >= 1 (kappa_0 is fixed)");
        seq.set(index, value);
    }

    const int p_max = a.element.max_p();
    for (long j = 1; j < p_max; ++j) {
        if (!seq.has(j)) {
            std::ostringstream msg;
            msg << "kappa_" << j << " is below the recursion's reach; supply it as a seed";
            throw Error(ErrorCode::SeedRequired, msg.str(), j);
        }
    }

    for (long n = 0; n + p_max <= n_max; ++n) {
        const long top = n + p_max;
        const LinearRelation relation = orthogonality_relation(a, n);
        const LaurentPolynomial top_coeff = relation.at(top);
        if (top_coeff.is_zero()) {
            if (!seq.has(top)) {
                std::ostringstream msg;
                msg << "leading coefficient vanishes at n = " << n << "; supply kappa_" << top
                    << " as a seed";
                throw Error(ErrorCode::LeadingCoefficientVanishes, msg.str(), n);
            }
            verify_relation(relation, seq);
            continue;
        }
        if (seq.has(top)) {
            verify_relation(relation, seq);
            continue;
        }
        LaurentPolynomial rhs;
        for (const auto& [index, coeff] : relation.coefficients) {
            if (index == top) continue;
            if (index >= 1 && !seq.has(index)) {
                std::ostringstream msg;
                msg << "kappa_" << index << " is not reachable by the recursion; supply it as a seed";
                throw Error(ErrorCode::SeedRequired, msg.str(), index);
            }
            rhs += coeff * seq.at(index);
        }
        seq.set(top, (-rhs).divide_exact(top_coeff));
    }

    for (long j = 1; j <= n_max; ++j) {
        if (!seq.has(j)) {
            std::ostringstream msg;
            msg << "kappa_" << j << " was not determined; supply it as a seed";
            throw Error(ErrorCode::SeedRequired, msg.str(), j);
        }
    }
    return seq;
}

LaurentPolynomial kappa_closed_form_unknot(long n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "closed form defined for n >= 0");
    const LaurentPolynomial numerator = t_power(2 * n + 2) - t_power(-2 * n - 2);
    const LaurentPolynomial denominator = t_power(2) - t_power(-2);
    LaurentPolynomial value = numerator.divide_exact(denominator);
    if (n % 2 != 0) value = -value;
    return value;
}

} // namespace skein
