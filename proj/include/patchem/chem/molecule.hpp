//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_CHEM_MOLECULE_HPP_
#define PATCHEM_CHEM_MOLECULE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace patchem::chem {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Numeric weight of a bond order for valence bookkeeping. Aromatic bonds
// count one sigma bond; the pi contribution is handled separately.
int bond_order_weight(BondOrder order);

struct Atom {
  int atomic_number = 6;
  int formal_charge = 0;
  std::optional<int> isotope;
  bool aromatic = false;
  // Bracket-atom hydrogen count. Absent means the valence model decides.
  std::optional<int> explicit_h;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::kSingle;

  int other(int atom) const { return atom == a ? b : a; }
};

// Stereo marks are parsed and kept as annotations only; they never take part
// in graph identity, canonicalization, or fingerprints.
struct StereoAnnotation {
  enum class Kind { kTetrahedral, kBondDirection };
  Kind kind = Kind::kTetrahedral;
  int atom = -1;  // for kTetrahedral
  int bond = -1;  // for kBondDirection
};

struct RingInfo {
  std::vector<int> atoms;          // in cycle order
  std::vector<int> bonds;          // bond indices of the cycle
  std::vector<std::uint64_t> key;  // bond-set bitmask, for dedup/tests
};

// An attributed molecular graph. Construction validates structural
// invariants (index bounds, no self bonds, one bond per pair, aromatic bonds
// only between aromatic atoms, charge within [-4, 4]) and derives implicit
// hydrogen counts, connected components, ring membership, and an SSSR-style
// ring set. Instances are immutable afterwards and safe to share across
// threads.
class Molecule {
 public:
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
           std::vector<StereoAnnotation> annotations = {});

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t bond_count() const { return bonds_.size(); }
  const Atom &atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
  const Bond &bond(int i) const { return bonds_[static_cast<std::size_t>(i)]; }
  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }

  // (neighbor atom, bond index) pairs, in bond insertion order.
  const std::vector<std::pair<int, int>> &neighbors(int i) const {
    return adjacency_[static_cast<std::size_t>(i)];
  }
  int degree(int i) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
  }
  int heavy_degree(int i) const;

  // Bond index between a and b, or -1.
  int bond_between(int a, int b) const;

  // Hydrogens on the atom itself: the bracket count when present, otherwise
  // the derived implicit count. Neighboring explicit H atoms not included.
  int hydrogen_count(int i) const {
    return hydrogens_[static_cast<std::size_t>(i)];
  }
  // hydrogen_count plus explicit H atoms bonded to i.
  int total_hydrogens(int i) const;

  bool atom_in_ring(int i) const {
    return atom_in_ring_[static_cast<std::size_t>(i)];
  }
  bool bond_in_ring(int b) const {
    return bond_in_ring_[static_cast<std::size_t>(b)];
  }

  int component_count() const { return component_count_; }
  int component_of(int i) const {
    return component_[static_cast<std::size_t>(i)];
  }
  // |bonds| - |atoms| + components.
  int cyclomatic_number() const;

  const std::vector<RingInfo> &sssr() const { return sssr_; }

  const std::vector<StereoAnnotation> &annotations() const {
    return annotations_;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<StereoAnnotation> annotations_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<int> hydrogens_;
  std::vector<bool> atom_in_ring_;
  std::vector<bool> bond_in_ring_;
  std::vector<int> component_;
  int component_count_ = 0;
  std::vector<RingInfo> sssr_;

  void derive_hydrogens();
  void find_components();
  void find_rings();
};

// Derived implicit hydrogen count for a free-standing atom description with
// the given sigma/pi consumption. Exposed for the SMILES writer, which must
// predict what a reader would derive.
int derive_implicit_hydrogens(int atomic_number, bool aromatic,
                              int bond_weight_sum);

// New molecule containing exactly `atom_indices` and the listed bonds
// (indices into mol's bond list; endpoints must be inside the subset).
// Atom attributes are copied; implicit hydrogens re-derive.
Molecule subgraph_molecule(const Molecule &mol,
                           const std::vector<int> &atom_indices,
                           const std::vector<int> &bond_indices);

// Induced subgraph: all bonds of mol with both ends in the subset.
Molecule induced_subgraph(const Molecule &mol,
                          const std::vector<int> &atom_indices);

// Relabeled copy: new index of old atom i is perm[i]. perm must be a
// permutation of [0, atom_count).
Molecule permute_atoms(const Molecule &mol, const std::vector<int> &perm);

}  // namespace patchem::chem

#endif  // PATCHEM_CHEM_MOLECULE_HPP_
