//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_CHEM_CANON_HPP_
#define PATCHEM_CHEM_CANON_HPP_

#include <vector>

#include "patchem/chem/molecule.hpp"

namespace patchem::chem {

// Morgan-style iterative refinement. Atoms start from the invariant
// (atomic number, charge, degree, hydrogen count, aromatic flag, isotope)
// and are repeatedly re-ranked by their sorted neighbor (bond order, rank)
// multisets until the partition stabilizes. Ranks are dense, start at 0,
// and depend only on the graph, never on input atom order; symmetric atoms
// (benzene carbons) share a rank.
std::vector<int> canonical_ranks(const Molecule &mol);

}  // namespace patchem::chem

#endif  // PATCHEM_CHEM_CANON_HPP_
