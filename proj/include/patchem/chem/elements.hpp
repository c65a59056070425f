//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_CHEM_ELEMENTS_HPP_
#define PATCHEM_CHEM_ELEMENTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace patchem::chem {

inline constexpr int kMaxAtomicNumber = 118;

// Symbol for Z in [1, 118]; empty for anything else.
std::string_view element_symbol(int atomic_number);

// Inverse lookup, case-sensitive ("Cl", not "CL").
std::optional<int> atomic_number_of(std::string_view symbol);

// Conventional atomic weight (most-stable-isotope mass for elements
// without one).
double atomic_weight(int atomic_number);

// True for the ten elements writable without brackets.
bool in_organic_subset(int atomic_number);

// Elements that may carry the aromatic flag (lowercase SMILES form).
bool aromatic_capable(int atomic_number);

// Daylight-style default valences, lowest first. Empty for elements outside
// the organic subset (those always carry an explicit H count).
const std::vector<int> &default_valences(int atomic_number);

}  // namespace patchem::chem

#endif  // PATCHEM_CHEM_ELEMENTS_HPP_
