//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_CHEM_AROMATIZE_HPP_
#define PATCHEM_CHEM_AROMATIZE_HPP_

#include "patchem/chem/molecule.hpp"

namespace patchem::chem {

// Marks every SSSR ring passing the Hueckel 4n+2 electron count as aromatic
// (atoms and in-ring bonds). Kekule double bonds inside such rings become
// aromatic bonds; hydrogen counts of newly aromatized atoms are frozen so
// the molecule's hydrogens never change. Rings already written aromatic are
// left as-is; this pass only adds aromaticity, it never kekulizes.
Molecule perceive_aromaticity(const Molecule &mol);

}  // namespace patchem::chem

#endif  // PATCHEM_CHEM_AROMATIZE_HPP_
