//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/chem/molecule.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

#include "patchem/chem/elements.hpp"
#include "patchem/support/errors.hpp"

namespace patchem::chem {

int bond_order_weight(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
  case BondOrder::kAromatic:
    return 1;
  case BondOrder::kDouble:
    return 2;
  case BondOrder::kTriple:
    return 3;
  }
  return 1;
}

int derive_implicit_hydrogens(int atomic_number, bool aromatic,
                              int bond_weight_sum) {
  // Bare aromatic N/P/O/S never carry implicit hydrogens; pyrrole-type
  // nitrogens must be written [nH].
  if (aromatic && (atomic_number == 7 || atomic_number == 8 ||
                   atomic_number == 15 || atomic_number == 16)) {
    return 0;
  }
  int consumption = bond_weight_sum + (aromatic ? 1 : 0);
  for (int v : default_valences(atomic_number)) {
    if (v >= consumption) {
      return v - consumption;
    }
  }
  return 0;
}

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
                   std::vector<StereoAnnotation> annotations)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)),
      annotations_(std::move(annotations)) {
  if (atoms_.empty()) {
    throw Error("molecule must contain at least one atom");
  }
  const int n = static_cast<int>(atoms_.size());
  for (const Atom &a : atoms_) {
    if (a.atomic_number < 1 || a.atomic_number > kMaxAtomicNumber) {
      throw Error("atomic number out of range: " +
                  std::to_string(a.atomic_number));
    }
    if (a.formal_charge < -4 || a.formal_charge > 4) {
      throw Error("formal charge out of range: " +
                  std::to_string(a.formal_charge));
    }
    if (a.isotope && *a.isotope < 0) {
      throw Error("negative isotope");
    }
    if (a.explicit_h && *a.explicit_h < 0) {
      throw Error("negative hydrogen count");
    }
  }
  adjacency_.assign(atoms_.size(), {});
  std::set<std::pair<int, int>> seen;
  for (std::size_t bi = 0; bi < bonds_.size(); ++bi) {
    const Bond &b = bonds_[bi];
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n) {
      throw Error("bond endpoint out of range");
    }
    if (b.a == b.b) {
      throw Error("bond to self");
    }
    auto key = std::minmax(b.a, b.b);
    if (!seen.insert(key).second) {
      throw Error("duplicate bond between atoms " + std::to_string(b.a) +
                  " and " + std::to_string(b.b));
    }
    if (b.order == BondOrder::kAromatic &&
        (!atoms_[static_cast<std::size_t>(b.a)].aromatic ||
         !atoms_[static_cast<std::size_t>(b.b)].aromatic)) {
      throw Error("aromatic bond requires aromatic endpoints");
    }
    adjacency_[static_cast<std::size_t>(b.a)].emplace_back(
        b.b, static_cast<int>(bi));
    adjacency_[static_cast<std::size_t>(b.b)].emplace_back(
        b.a, static_cast<int>(bi));
  }
  derive_hydrogens();
  find_components();
  find_rings();
}

int Molecule::heavy_degree(int i) const {
  int d = 0;
  for (auto [nbr, bi] : adjacency_[static_cast<std::size_t>(i)]) {
    if (atoms_[static_cast<std::size_t>(nbr)].atomic_number > 1) {
      ++d;
    }
  }
  return d;
}

int Molecule::bond_between(int a, int b) const {
  for (auto [nbr, bi] : adjacency_[static_cast<std::size_t>(a)]) {
    if (nbr == b) {
      return bi;
    }
  }
  return -1;
}

int Molecule::total_hydrogens(int i) const {
  int h = hydrogen_count(i);
  for (auto [nbr, bi] : adjacency_[static_cast<std::size_t>(i)]) {
    if (atoms_[static_cast<std::size_t>(nbr)].atomic_number == 1) {
      ++h;
    }
  }
  return h;
}

int Molecule::cyclomatic_number() const {
  return static_cast<int>(bonds_.size()) - static_cast<int>(atoms_.size()) +
         component_count_;
}

void Molecule::derive_hydrogens() {
  hydrogens_.resize(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom &a = atoms_[i];
    if (a.explicit_h) {
      hydrogens_[i] = *a.explicit_h;
      continue;
    }
    int weight = 0;
    for (auto [nbr, bi] : adjacency_[i]) {
      weight += bond_order_weight(bonds_[static_cast<std::size_t>(bi)].order);
    }
    hydrogens_[i] = derive_implicit_hydrogens(a.atomic_number, a.aromatic,
                                              weight);
  }
}

void Molecule::find_components() {
  component_.assign(atoms_.size(), -1);
  component_count_ = 0;
  for (std::size_t s = 0; s < atoms_.size(); ++s) {
    if (component_[s] >= 0) {
      continue;
    }
    std::deque<int> queue{static_cast<int>(s)};
    component_[s] = component_count_;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, bi] : adjacency_[static_cast<std::size_t>(u)]) {
        if (component_[static_cast<std::size_t>(v)] < 0) {
          component_[static_cast<std::size_t>(v)] = component_count_;
          queue.push_back(v);
        }
      }
    }
    ++component_count_;
  }
}

namespace {

// Shortest cycle through bond bi, as a bond-index list, or empty when bi is
// a bridge. BFS from one endpoint to the other with the bond removed.
std::vector<int> shortest_cycle_through(const Molecule &m, int bi) {
  const Bond &b = m.bond(bi);
  const int n = static_cast<int>(m.atom_count());
  std::vector<int> prev_atom(static_cast<std::size_t>(n), -1);
  std::vector<int> prev_bond(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{b.a};
  prev_atom[static_cast<std::size_t>(b.a)] = b.a;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == b.b) {
      break;
    }
    for (auto [v, eb] : m.neighbors(u)) {
      if (eb == bi || prev_atom[static_cast<std::size_t>(v)] >= 0) {
        continue;
      }
      prev_atom[static_cast<std::size_t>(v)] = u;
      prev_bond[static_cast<std::size_t>(v)] = eb;
      queue.push_back(v);
    }
  }
  if (prev_atom[static_cast<std::size_t>(b.b)] < 0) {
    return {};
  }
  std::vector<int> cycle{bi};
  for (int u = b.b; u != b.a; u = prev_atom[static_cast<std::size_t>(u)]) {
    cycle.push_back(prev_bond[static_cast<std::size_t>(u)]);
  }
  return cycle;
}

std::vector<std::uint64_t> bond_mask(const std::vector<int> &bonds,
                                     std::size_t bond_count) {
  std::vector<std::uint64_t> mask((bond_count + 63) / 64, 0);
  for (int b : bonds) {
    mask[static_cast<std::size_t>(b) / 64] |=
        std::uint64_t{1} << (static_cast<std::size_t>(b) % 64);
  }
  return mask;
}

// Orders the atoms of a cycle given its bond set.
std::vector<int> walk_cycle(const Molecule &m, const std::vector<int> &bonds) {
  std::vector<int> order;
  order.reserve(bonds.size());
  const Bond &first = m.bond(bonds.front());
  int start = std::min(first.a, first.b);
  int cur = start;
  int prev_bond = -1;
  do {
    order.push_back(cur);
    for (int bi : bonds) {
      const Bond &b = m.bond(bi);
      if (bi != prev_bond && (b.a == cur || b.b == cur)) {
        // Move along the first untraversed cycle bond at cur.
        bool used = false;
        if (order.size() >= 2 &&
            b.other(cur) == order[order.size() - 2]) {
          used = true;
        }
        if (!used) {
          cur = b.other(cur);
          prev_bond = bi;
          break;
        }
      }
    }
  } while (cur != start && order.size() <= bonds.size());
  return order;
}

}  // namespace

void Molecule::find_rings() {
  atom_in_ring_.assign(atoms_.size(), false);
  bond_in_ring_.assign(bonds_.size(), false);
  const int target = cyclomatic_number();
  if (target <= 0) {
    return;
  }

  // Candidate pool: the shortest cycle through every bond, plus fundamental
  // cycles from a spanning forest as a completeness fallback.
  std::vector<std::vector<int>> candidates;
  for (std::size_t bi = 0; bi < bonds_.size(); ++bi) {
    auto cycle = shortest_cycle_through(*this, static_cast<int>(bi));
    if (!cycle.empty()) {
      bond_in_ring_[bi] = true;
      candidates.push_back(std::move(cycle));
    }
  }
  {
    std::vector<bool> in_tree(bonds_.size(), false);
    std::vector<int> visited(atoms_.size(), 0);
    std::vector<int> parent_bond(atoms_.size(), -1);
    std::vector<int> parent(atoms_.size(), -1);
    for (std::size_t s = 0; s < atoms_.size(); ++s) {
      if (visited[s]) {
        continue;
      }
      std::deque<int> queue{static_cast<int>(s)};
      visited[s] = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [v, eb] : adjacency_[static_cast<std::size_t>(u)]) {
          if (!visited[static_cast<std::size_t>(v)]) {
            visited[static_cast<std::size_t>(v)] = 1;
            in_tree[static_cast<std::size_t>(eb)] = true;
            parent_bond[static_cast<std::size_t>(v)] = eb;
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          }
        }
      }
    }
    for (std::size_t bi = 0; bi < bonds_.size(); ++bi) {
      if (in_tree[bi]) {
        continue;
      }
      // Tree paths from both endpoints to their common ancestor.
      std::vector<int> cycle{static_cast<int>(bi)};
      std::vector<int> path_a, path_b;
      std::vector<int> atoms_a;
      for (int u = bonds_[bi].a; u >= 0; u = parent[static_cast<std::size_t>(u)]) {
        atoms_a.push_back(u);
      }
      int meet = bonds_[bi].b;
      while (std::find(atoms_a.begin(), atoms_a.end(), meet) ==
             atoms_a.end()) {
        path_b.push_back(parent_bond[static_cast<std::size_t>(meet)]);
        meet = parent[static_cast<std::size_t>(meet)];
      }
      for (int u = bonds_[bi].a; u != meet;
           u = parent[static_cast<std::size_t>(u)]) {
        path_a.push_back(parent_bond[static_cast<std::size_t>(u)]);
      }
      cycle.insert(cycle.end(), path_a.begin(), path_a.end());
      cycle.insert(cycle.end(), path_b.begin(), path_b.end());
      candidates.push_back(std::move(cycle));
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto &x, const auto &y) {
                     return x.size() < y.size();
                   });

  // Greedy GF(2) independence over bond-incidence vectors. The basis is kept
  // in echelon form, sorted by leading bit descending.
  struct BasisRow {
    std::ptrdiff_t lead;
    std::vector<std::uint64_t> bits;
  };
  auto leading_bit = [](const std::vector<std::uint64_t> &v) -> std::ptrdiff_t {
    for (std::size_t w = v.size(); w-- > 0;) {
      if (v[w] != 0) {
        return static_cast<std::ptrdiff_t>(w * 64 + 63 -
                                           static_cast<std::size_t>(
                                               __builtin_clzll(v[w])));
      }
    }
    return -1;
  };
  std::vector<BasisRow> basis;
  for (const auto &cycle : candidates) {
    if (static_cast<int>(sssr_.size()) >= target) {
      break;
    }
    auto mask = bond_mask(cycle, bonds_.size());
    auto reduced = mask;
    for (const BasisRow &row : basis) {
      std::size_t lead = static_cast<std::size_t>(row.lead);
      if (reduced[lead / 64] >> (lead % 64) & 1) {
        for (std::size_t w = 0; w < reduced.size(); ++w) {
          reduced[w] ^= row.bits[w];
        }
      }
    }
    std::ptrdiff_t lead = leading_bit(reduced);
    if (lead < 0) {
      continue;
    }
    BasisRow row{lead, reduced};
    basis.insert(std::upper_bound(basis.begin(), basis.end(), row,
                                  [](const BasisRow &x, const BasisRow &y) {
                                    return x.lead > y.lead;
                                  }),
                 std::move(row));
    RingInfo info;
    info.bonds = cycle;
    std::sort(info.bonds.begin(), info.bonds.end());
    info.atoms = walk_cycle(*this, info.bonds);
    info.key = mask;
    sssr_.push_back(std::move(info));
  }

  for (const RingInfo &ring : sssr_) {
    for (int a : ring.atoms) {
      atom_in_ring_[static_cast<std::size_t>(a)] = true;
    }
  }
  // Ring-bond flags were already set from per-bond shortest cycles; atoms on
  // any ring bond are ring atoms even if their smallest ring was not chosen
  // for the SSSR basis.
  for (std::size_t bi = 0; bi < bonds_.size(); ++bi) {
    if (bond_in_ring_[bi]) {
      atom_in_ring_[static_cast<std::size_t>(bonds_[bi].a)] = true;
      atom_in_ring_[static_cast<std::size_t>(bonds_[bi].b)] = true;
    }
  }
}

Molecule subgraph_molecule(const Molecule &mol,
                           const std::vector<int> &atom_indices,
                           const std::vector<int> &bond_indices) {
  std::vector<int> remap(mol.atom_count(), -1);
  std::vector<Atom> atoms;
  atoms.reserve(atom_indices.size());
  for (std::size_t i = 0; i < atom_indices.size(); ++i) {
    remap[static_cast<std::size_t>(atom_indices[i])] = static_cast<int>(i);
    atoms.push_back(mol.atom(atom_indices[i]));
  }
  std::vector<Bond> bonds;
  bonds.reserve(bond_indices.size());
  for (int bi : bond_indices) {
    const Bond &b = mol.bond(bi);
    int na = remap[static_cast<std::size_t>(b.a)];
    int nb = remap[static_cast<std::size_t>(b.b)];
    if (na < 0 || nb < 0) {
      throw Error("subgraph bond endpoint outside atom subset");
    }
    bonds.push_back(Bond{na, nb, b.order});
  }
  return Molecule(std::move(atoms), std::move(bonds));
}

Molecule induced_subgraph(const Molecule &mol,
                          const std::vector<int> &atom_indices) {
  std::vector<bool> keep(mol.atom_count(), false);
  for (int a : atom_indices) {
    keep[static_cast<std::size_t>(a)] = true;
  }
  std::vector<int> bonds;
  for (std::size_t bi = 0; bi < mol.bond_count(); ++bi) {
    const Bond &b = mol.bond(static_cast<int>(bi));
    if (keep[static_cast<std::size_t>(b.a)] &&
        keep[static_cast<std::size_t>(b.b)]) {
      bonds.push_back(static_cast<int>(bi));
    }
  }
  return subgraph_molecule(mol, atom_indices, bonds);
}

Molecule permute_atoms(const Molecule &mol, const std::vector<int> &perm) {
  std::vector<Atom> atoms(mol.atom_count());
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    atoms[static_cast<std::size_t>(perm[i])] = mol.atom(static_cast<int>(i));
  }
  std::vector<Bond> bonds;
  bonds.reserve(mol.bond_count());
  for (const Bond &b : mol.bonds()) {
    bonds.push_back(Bond{perm[static_cast<std::size_t>(b.a)],
                         perm[static_cast<std::size_t>(b.b)], b.order});
  }
  std::vector<StereoAnnotation> ann = mol.annotations();
  for (StereoAnnotation &s : ann) {
    if (s.atom >= 0) {
      s.atom = perm[static_cast<std::size_t>(s.atom)];
    }
  }
  return Molecule(std::move(atoms), std::move(bonds), std::move(ann));
}

}  // namespace patchem::chem
