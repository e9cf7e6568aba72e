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

#ifndef SKEIN_CATALOG_HPP
#define SKEIN_CATALOG_HPP

#include "recurrence.hpp"

namespace skein {

/// Built-in data for one knot: A-ideal generators kept in factored form (and
/// expanded on load through the normal-ordering product), peripheral-ideal
/// elements for the recurrence engine, and the known colored brackets.
struct KnotEntry {
    std::string name;
    std::vector<std::vector<IdealPolynomial>> generator_factors;
    std::vector<IdealPolynomial> generators;
    std::vector<PeripheralElement> peripheral_elements;
    /// True when kappa_closed_form_unknot applies.
    bool has_closed_form = false;
    /// Directly known values (at least kappa_1).
    std::map<long, LaurentPolynomial> known_kappa;
};

/// Entries: "unknot", "trefoil_left". Throws UnknownKnot otherwise.
/// Read-only after first construction; safe for shared access.
const KnotEntry& catalog(const std::string& name);

/// All catalog names, for error messages and the CLI.
std::vector<std::string> catalog_names();

} // namespace skein

#endif
