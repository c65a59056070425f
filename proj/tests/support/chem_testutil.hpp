//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_TESTS_SUPPORT_CHEM_TESTUTIL_HPP_
#define PATCHEM_TESTS_SUPPORT_CHEM_TESTUTIL_HPP_

#include <random>
#include <string>
#include <vector>

#include "patchem/chem/molecule.hpp"

namespace patchem::testutil {

// Exact graph isomorphism by label-aware backtracking. Deliberately
// independent of canonical ranks so it can referee the canonicalizer.
bool graphs_isomorphic(const chem::Molecule &a, const chem::Molecule &b);

// Injective subgraph match: every atom/bond of `pattern` maps into `target`
// (atoms on atomic number + aromatic flag, bonds on order). Not induced.
bool contains_subgraph(const chem::Molecule &target,
                       const chem::Molecule &pattern);

// Random chemically-valid molecule: trees of organic-subset atoms with
// occasional rings, aromatic cores, charges, and isotopes.
chem::Molecule random_molecule(std::mt19937_64 &rng, int max_heavy = 12);

// Random relabeling of mol's atoms.
chem::Molecule shuffle_atoms(const chem::Molecule &mol,
                             std::mt19937_64 &rng);

// Repo-relative data file path (PATCHEM_SOURCE_DIR compile definition).
std::string data_path(const std::string &relative);

}  // namespace patchem::testutil

#endif  // PATCHEM_TESTS_SUPPORT_CHEM_TESTUTIL_HPP_
