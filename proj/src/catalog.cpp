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

#include "catalog.hpp"

#include "error.hpp"

namespace skein {

namespace {

IdealPolynomial lit_l() { return IdealPolynomial::monomial(1, 0); }
IdealPolynomial lit_m(int power = 1) { return IdealPolynomial::monomial(0, power); }
IdealPolynomial lit_t(long k) { return IdealPolynomial::scalar(t_power(k)); }

// l + t^k
IdealPolynomial l_plus(long k) { return lit_l() + lit_t(k); }

KnotEntry build_unknot() {
    KnotEntry entry;
    entry.name = "unknot";
    entry.generator_factors = {
        {l_plus(2), l_plus(-2)},
        // l m^2 (l + t^2) + t^2 (l + t^-2); a sum of products, kept as one factor
        {lit_l() * lit_m(2) * l_plus(2) + lit_t(2) * l_plus(-2)},
    };
    for (const auto& factors : entry.generator_factors)
        entry.generators.push_back(nc_expand(factors));
    for (const auto& generator : entry.generators) {
        PeripheralElement el = ideal_to_peripheral(generator).peripheral;
        el.knot = entry.name;
        entry.peripheral_elements.push_back(std::move(el));
    }
    entry.has_closed_form = true;
    entry.known_kappa[1] = kappa_closed_form_unknot(1); // -t^2 - t^-2
    return entry;
}

KnotEntry build_trefoil_left() {
    KnotEntry entry;
    entry.name = "trefoil_left";

    // m^4 (l + t^10) - t^-4 (l + t^2)
    const IdealPolynomial head = lit_m(4) * l_plus(10) - lit_t(-4) * l_plus(2);
    // l - t^6 m^6
    const IdealPolynomial tail = lit_l() - lit_m(6).scaled(t_power(6));
    const IdealPolynomial m2_shift = lit_m(2) - lit_t(-22); // m^2 - t^-22

    entry.generator_factors = {
        {head, tail},
        {l_plus(24), l_plus(10), l_plus(2), tail},
        {m2_shift, l_plus(10), l_plus(2), tail},
    };
    for (const auto& factors : entry.generator_factors)
        entry.generators.push_back(nc_expand(factors));

    // Peripheral element (1,-5)_T - t^-8 (1,-1)_T + t^-3 (0,5)_T - t (0,1)_T.
    // The (0,5)_T coefficient must be t^-3: it is forced by the action of
    // (0,5)_T on T_0(alpha), and only this value lets the element annihilate
    // the trefoil's colored brackets (with t^3 the n = 0 relation has no
    // Laurent solution; see the recurrence tests for both readings).
    CosineElement el = CosineElement::basis(1, -5);
    el += CosineElement::basis(1, -1, -t_power(-8));
    el += CosineElement::basis(0, 5, t_power(-3));
    el += CosineElement::basis(0, 1, -t_power(1));
    entry.peripheral_elements.push_back({el, entry.name});

    // kappa_1: the Kauffman bracket of the zero-framed left trefoil.
    entry.known_kappa[1] =
        t_power(18) - t_power(10) - t_power(6) - t_power(2);
    return entry;
}

} // namespace

const KnotEntry& catalog(const std::string& name) {
    static const KnotEntry unknot = build_unknot();
    static const KnotEntry trefoil = build_trefoil_left();
    if (name == "unknot") return unknot;
    if (name == "trefoil_left") return trefoil;
    throw Error(ErrorCode::UnknownKnot, "unknown knot '" + name + "' (try: unknot, trefoil_left)");
}

std::vector<std::string> catalog_names() { return {"unknot", "trefoil_left"}; }

} // namespace skein
