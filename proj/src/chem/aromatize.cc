//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/chem/aromatize.hpp"

#include <vector>

#include "patchem/chem/smiles.hpp"

namespace patchem::chem {

namespace {

// Pi electrons atom i donates to candidate ring `in_ring`, or -1 when the
// atom cannot sit in an aromatic ring at all.
int pi_contribution(const Molecule &m, int i, const std::vector<bool> &in_ring) {
  const Atom &a = m.atom(i);
  const int z = a.atomic_number;
  const int q = a.formal_charge;
  const bool eligible_element = z == 5 || z == 6 || z == 7 || z == 8 ||
                                z == 15 || z == 16 || z == 33 || z == 34;
  if (!eligible_element) {
    return -1;
  }
  const int connections = m.degree(i) + m.hydrogen_count(i);
  if (connections > 3) {
    return -1;  // four sigma partners; cannot be planar sp2
  }

  // A double bond into the candidate ring, or across a fusion into another
  // ring, donates one electron here (the naphthalene fusion case). A double
  // bond to a chain atom (quinone C=O) donates nothing.
  bool double_to_ring = false;
  bool double_to_chain = false;
  for (auto [v, b] : m.neighbors(i)) {
    BondOrder order = m.bond(b).order;
    if (order == BondOrder::kTriple) {
      return -1;
    }
    if (order == BondOrder::kDouble) {
      if (in_ring[static_cast<std::size_t>(v)] || m.atom_in_ring(v)) {
        double_to_ring = true;
      } else {
        double_to_chain = true;
      }
    }
  }

  if (a.aromatic) {
    // Input already written lowercase; trust the flag, count electrons.
    switch (z) {
    case 6:
      if (double_to_chain) return 0;
      if (q == -1) return 2;
      if (q == 1) return 0;
      return 1;
    case 7:
    case 15:
    case 33:
      if (q == 1) return 1;
      if (q == -1) return 2;
      return (m.total_hydrogens(i) > 0 || m.degree(i) == 3) ? 2 : 1;
    case 8:
    case 16:
    case 34:
      return q == 1 ? 1 : 2;
    case 5:
      return 0;
    default:
      return -1;
    }
  }

  if (double_to_ring) {
    return 1;
  }
  if (double_to_chain) {
    // Quinone-type carbon (or N-oxide nitrogen): sp2 but donates nothing.
    return 0;
  }
  // Saturated atom: only lone pairs or charges can contribute.
  switch (z) {
  case 6:
    if (q == -1) return 2;  // cyclopentadienide
    if (q == 1) return 0;   // tropylium
    return -1;
  case 7:
  case 15:
  case 33:
    return q == 1 ? -1 : 2;  // pyrrole-type lone pair
  case 8:
  case 16:
  case 34:
    return q == 1 ? -1 : 2;  // furan / thiophene
  case 5:
    return 0;  // empty p orbital
  default:
    return -1;
  }
}

}  // namespace

Molecule perceive_aromaticity(const Molecule &mol) {
  std::vector<bool> make_atom_aromatic(mol.atom_count(), false);
  std::vector<bool> make_bond_aromatic(mol.bond_count(), false);

  for (const RingInfo &ring : mol.sssr()) {
    std::vector<bool> in_ring(mol.atom_count(), false);
    for (int a : ring.atoms) {
      in_ring[static_cast<std::size_t>(a)] = true;
    }
    int electrons = 0;
    bool ok = true;
    for (int a : ring.atoms) {
      int pi = pi_contribution(mol, a, in_ring);
      if (pi < 0) {
        ok = false;
        break;
      }
      electrons += pi;
    }
    if (!ok || electrons % 4 != 2) {
      continue;
    }
    for (int a : ring.atoms) {
      make_atom_aromatic[static_cast<std::size_t>(a)] = true;
    }
    for (int b : ring.bonds) {
      make_bond_aromatic[static_cast<std::size_t>(b)] = true;
    }
  }

  bool any = false;
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    if (make_atom_aromatic[i] && !mol.atom(static_cast<int>(i)).aromatic) {
      any = true;
    }
  }
  for (std::size_t b = 0; b < mol.bond_count(); ++b) {
    if (make_bond_aromatic[b] &&
        mol.bond(static_cast<int>(b)).order != BondOrder::kAromatic) {
      any = true;
    }
  }
  if (!any) {
    return mol;
  }

  std::vector<Atom> atoms = mol.atoms();
  std::vector<Bond> bonds = mol.bonds();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!make_atom_aromatic[i] || atoms[i].aromatic) {
      continue;
    }
    atoms[i].aromatic = true;
    // Hydrogens were derived from the Kekule form; pin them so the aromatic
    // rewrite cannot change the molecular formula ([nH] stays protonated).
    atoms[i].explicit_h = mol.hydrogen_count(static_cast<int>(i));
  }
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    if (make_bond_aromatic[b]) {
      bonds[b].order = BondOrder::kAromatic;
    }
  }
  return Molecule(std::move(atoms), std::move(bonds), mol.annotations());
}

std::string standardize(std::string_view smiles) {
  return write_smiles(perceive_aromaticity(parse_smiles(smiles)));
}

}  // namespace patchem::chem
