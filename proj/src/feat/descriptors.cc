//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/feat/descriptors.hpp"

#include "patchem/chem/elements.hpp"

namespace patchem::feat {

const std::array<std::string_view, kDescriptorCount> &descriptor_names() {
  static const std::array<std::string_view, kDescriptorCount> kNames{
      "mol_weight",     "heavy_atoms",     "rings",
      "aromatic_rings", "hbd",             "hba",
      "rotatable_bonds", "charge_sum",     "aromatic_fraction",
  };
  return kNames;
}

DescriptorVector descriptors(const chem::Molecule &mol) {
  DescriptorVector d;
  int heavy = 0;
  int aromatic_heavy = 0;
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    const chem::Atom &a = mol.atom(static_cast<int>(i));
    double mass = a.isotope ? static_cast<double>(*a.isotope)
                            : chem::atomic_weight(a.atomic_number);
    d.molecular_weight += mass;
    d.molecular_weight +=
        1.008 * mol.hydrogen_count(static_cast<int>(i));
    d.formal_charge_sum += a.formal_charge;
    if (a.atomic_number > 1) {
      ++heavy;
      if (a.aromatic) {
        ++aromatic_heavy;
      }
    }
    if (a.atomic_number == 7 || a.atomic_number == 8) {
      ++d.hba;
      if (mol.total_hydrogens(static_cast<int>(i)) >= 1) {
        ++d.hbd;
      }
    }
  }
  d.heavy_atom_count = heavy;
  d.ring_count = mol.cyclomatic_number();
  for (const chem::RingInfo &ring : mol.sssr()) {
    bool aromatic = true;
    for (int a : ring.atoms) {
      aromatic = aromatic && mol.atom(a).aromatic;
    }
    for (int b : ring.bonds) {
      aromatic = aromatic && mol.bond(b).order == chem::BondOrder::kAromatic;
    }
    if (aromatic) {
      ++d.aromatic_ring_count;
    }
  }
  for (std::size_t b = 0; b < mol.bond_count(); ++b) {
    const chem::Bond &bond = mol.bond(static_cast<int>(b));
    if (bond.order == chem::BondOrder::kSingle &&
        !mol.bond_in_ring(static_cast<int>(b)) &&
        mol.heavy_degree(bond.a) >= 2 && mol.heavy_degree(bond.b) >= 2) {
      ++d.rotatable_bonds;
    }
  }
  d.fraction_aromatic_atoms =
      heavy > 0 ? static_cast<double>(aromatic_heavy) / heavy : 0.0;
  return d;
}

}  // namespace patchem::feat
