//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_FEAT_DESCRIPTORS_HPP_
#define PATCHEM_FEAT_DESCRIPTORS_HPP_

#include <array>
#include <string_view>

#include "patchem/chem/molecule.hpp"

namespace patchem::feat {

inline constexpr int kDescriptorCount = 9;

struct DescriptorVector {
  double molecular_weight = 0.0;  // Da, incl. implicit hydrogens
  int heavy_atom_count = 0;
  int ring_count = 0;  // cyclomatic number
  int aromatic_ring_count = 0;
  int hbd = 0;  // N/O bearing at least one hydrogen
  int hba = 0;  // all N/O atoms
  int rotatable_bonds = 0;
  int formal_charge_sum = 0;
  double fraction_aromatic_atoms = 0.0;

  std::array<double, kDescriptorCount> values() const {
    return {molecular_weight,
            static_cast<double>(heavy_atom_count),
            static_cast<double>(ring_count),
            static_cast<double>(aromatic_ring_count),
            static_cast<double>(hbd),
            static_cast<double>(hba),
            static_cast<double>(rotatable_bonds),
            static_cast<double>(formal_charge_sum),
            fraction_aromatic_atoms};
  }
};

const std::array<std::string_view, kDescriptorCount> &descriptor_names();

DescriptorVector descriptors(const chem::Molecule &mol);

}  // namespace patchem::feat

#endif  // PATCHEM_FEAT_DESCRIPTORS_HPP_
