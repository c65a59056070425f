//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "support/chem_testutil.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace patchem::testutil {

namespace {

using chem::Atom;
using chem::Bond;
using chem::BondOrder;
using chem::Molecule;

using AtomKey = std::tuple<int, int, int, bool, int>;

AtomKey atom_key(const Molecule &m, int i) {
  const Atom &a = m.atom(i);
  return {a.atomic_number, a.formal_charge, a.isotope ? *a.isotope + 1 : 0,
          a.aromatic, m.hydrogen_count(i)};
}

bool extend_isomorphism(const Molecule &a, const Molecule &b,
                        const std::vector<int> &order, std::size_t depth,
                        std::vector<int> &map, std::vector<bool> &used) {
  if (depth == order.size()) {
    return true;
  }
  int ai = order[depth];
  for (std::size_t bj = 0; bj < b.atom_count(); ++bj) {
    if (used[bj] || atom_key(a, ai) != atom_key(b, static_cast<int>(bj))) {
      continue;
    }
    if (a.degree(ai) != b.degree(static_cast<int>(bj))) {
      continue;
    }
    bool consistent = true;
    for (std::size_t ak = 0; consistent && ak < a.atom_count(); ++ak) {
      int bk = map[ak];
      if (bk < 0) {
        continue;
      }
      int bond_a = a.bond_between(ai, static_cast<int>(ak));
      int bond_b = b.bond_between(static_cast<int>(bj), bk);
      if ((bond_a < 0) != (bond_b < 0)) {
        consistent = false;
      } else if (bond_a >= 0 &&
                 a.bond(bond_a).order != b.bond(bond_b).order) {
        consistent = false;
      }
    }
    if (!consistent) {
      continue;
    }
    map[static_cast<std::size_t>(ai)] = static_cast<int>(bj);
    used[bj] = true;
    if (extend_isomorphism(a, b, order, depth + 1, map, used)) {
      return true;
    }
    map[static_cast<std::size_t>(ai)] = -1;
    used[bj] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Molecule &a, const Molecule &b) {
  if (a.atom_count() != b.atom_count() || a.bond_count() != b.bond_count()) {
    return false;
  }
  std::vector<AtomKey> keys_a, keys_b;
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    keys_a.push_back(atom_key(a, static_cast<int>(i)));
    keys_b.push_back(atom_key(b, static_cast<int>(i)));
  }
  std::sort(keys_a.begin(), keys_a.end());
  std::sort(keys_b.begin(), keys_b.end());
  if (keys_a != keys_b) {
    return false;
  }

  // Assign rare atom classes first to prune early.
  std::vector<int> order(a.atom_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a.degree(x) > a.degree(y);
  });
  std::vector<int> map(a.atom_count(), -1);
  std::vector<bool> used(b.atom_count(), false);
  return extend_isomorphism(a, b, order, 0, map, used);
}

namespace {

bool extend_monomorphism(const Molecule &target, const Molecule &pattern,
                         std::size_t next, std::vector<int> &map,
                         std::vector<bool> &used) {
  if (next == pattern.atom_count()) {
    return true;
  }
  int pi = static_cast<int>(next);
  const Atom &pa = pattern.atom(pi);
  for (std::size_t tj = 0; tj < target.atom_count(); ++tj) {
    const Atom &ta = target.atom(static_cast<int>(tj));
    if (used[tj] || ta.atomic_number != pa.atomic_number ||
        ta.aromatic != pa.aromatic) {
      continue;
    }
    bool consistent = true;
    for (auto [pn, pb] : pattern.neighbors(pi)) {
      if (pn >= pi) {
        continue;  // not mapped yet
      }
      int tb = target.bond_between(static_cast<int>(tj),
                                   map[static_cast<std::size_t>(pn)]);
      if (tb < 0 ||
          target.bond(tb).order != pattern.bond(pb).order) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      continue;
    }
    map[static_cast<std::size_t>(pi)] = static_cast<int>(tj);
    used[tj] = true;
    if (extend_monomorphism(target, pattern, next + 1, map, used)) {
      return true;
    }
    map[static_cast<std::size_t>(pi)] = -1;
    used[tj] = false;
  }
  return false;
}

}  // namespace

bool contains_subgraph(const Molecule &target, const Molecule &pattern) {
  if (pattern.atom_count() > target.atom_count() ||
      pattern.bond_count() > target.bond_count()) {
    return false;
  }
  std::vector<int> map(pattern.atom_count(), -1);
  std::vector<bool> used(target.atom_count(), false);
  return extend_monomorphism(target, pattern, 0, map, used);
}

namespace {

struct AromaticCore {
  std::vector<int> atomic_numbers;
  std::vector<int> pyrrole_positions;  // atoms that carry an explicit H
};

Molecule build_aromatic_core(std::mt19937_64 &rng) {
  static const std::array<AromaticCore, 5> kCores{{
      {{6, 6, 6, 6, 6, 6}, {}},     // benzene
      {{7, 6, 6, 6, 6, 6}, {}},     // pyridine
      {{7, 6, 6, 6, 6}, {0}},       // pyrrole
      {{8, 6, 6, 6, 6}, {}},        // furan
      {{16, 6, 6, 6, 6}, {}},       // thiophene
  }};
  const AromaticCore &core = kCores[rng() % kCores.size()];
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < core.atomic_numbers.size(); ++i) {
    Atom a;
    a.atomic_number = core.atomic_numbers[i];
    a.aromatic = true;
    if (std::find(core.pyrrole_positions.begin(),
                  core.pyrrole_positions.end(),
                  static_cast<int>(i)) != core.pyrrole_positions.end()) {
      a.explicit_h = 1;
    }
    atoms.push_back(a);
  }
  std::vector<Bond> bonds;
  int n = static_cast<int>(atoms.size());
  for (int i = 0; i < n; ++i) {
    bonds.push_back(Bond{i, (i + 1) % n, BondOrder::kAromatic});
  }
  return Molecule(std::move(atoms), std::move(bonds));
}

int spare_valence(const std::vector<Atom> &atoms,
                  const std::vector<Bond> &bonds, int i) {
  const Atom &a = atoms[static_cast<std::size_t>(i)];
  int cap = 0;
  switch (a.atomic_number) {
  case 6: cap = 4; break;
  case 7: cap = 3; break;
  case 8: cap = 2; break;
  case 16: cap = 2; break;
  case 15: cap = 3; break;
  case 5: cap = 3; break;
  default: cap = 1; break;
  }
  if (a.aromatic) {
    cap = a.atomic_number == 6 ? 3 : 2;
    // One substituent slot per aromatic CH; heteroatoms stay bare.
    if (a.atomic_number != 6 || a.explicit_h) {
      return 0;
    }
  }
  int used = 0;
  for (const Bond &b : bonds) {
    if (b.a == i || b.b == i) {
      used += chem::bond_order_weight(b.order);
    }
  }
  return cap > used ? cap - used : 0;
}

}  // namespace

Molecule random_molecule(std::mt19937_64 &rng, int max_heavy) {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  bool seeded_aromatic = rng() % 10 < 4;
  if (seeded_aromatic) {
    Molecule core = build_aromatic_core(rng);
    atoms = core.atoms();
    bonds = core.bonds();
  } else {
    Atom first;
    first.atomic_number = 6;
    atoms.push_back(first);
  }

  static const std::array<int, 10> kPalette{6, 6, 6, 6, 7, 7, 8, 8, 16, 9};
  int target = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_heavy));
  while (static_cast<int>(atoms.size()) < target) {
    // Pick an attachment point with spare valence.
    std::vector<int> sites;
    for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
      if (spare_valence(atoms, bonds, i) >= 1) {
        sites.push_back(i);
      }
    }
    if (sites.empty()) {
      break;
    }
    int site = sites[rng() % sites.size()];
    Atom next;
    next.atomic_number = kPalette[rng() % kPalette.size()];
    BondOrder order = BondOrder::kSingle;
    int spare = spare_valence(atoms, bonds, site);
    if (!atoms[static_cast<std::size_t>(site)].aromatic && spare >= 2 &&
        next.atomic_number != 9 && rng() % 5 == 0) {
      order = BondOrder::kDouble;
    }
    int ni = static_cast<int>(atoms.size());
    atoms.push_back(next);
    bonds.push_back(Bond{site, ni, order});
  }

  // Occasional aliphatic ring closure between distant atoms.
  if (!seeded_aromatic && atoms.size() >= 4 && rng() % 3 == 0) {
    std::vector<int> sites;
    for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
      if (spare_valence(atoms, bonds, i) >= 1) {
        sites.push_back(i);
      }
    }
    if (sites.size() >= 2) {
      int x = sites.front();
      int y = sites.back();
      bool adjacent = false;
      for (const Bond &b : bonds) {
        if ((b.a == x && b.b == y) || (b.a == y && b.b == x)) {
          adjacent = true;
        }
      }
      if (!adjacent && x != y) {
        bonds.push_back(Bond{x, y, BondOrder::kSingle});
      }
    }
  }

  // Decorations: isotope label or a terminal charged group.
  if (rng() % 8 == 0) {
    for (auto &a : atoms) {
      if (a.atomic_number == 6 && !a.aromatic) {
        a.isotope = 13;
        break;
      }
    }
  }
  if (rng() % 8 == 0) {
    std::vector<int> sites;
    for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
      if (spare_valence(atoms, bonds, i) >= 1) {
        sites.push_back(i);
      }
    }
    if (!sites.empty()) {
      Atom ox;
      ox.atomic_number = 8;
      ox.formal_charge = -1;
      ox.explicit_h = 0;
      int ni = static_cast<int>(atoms.size());
      atoms.push_back(ox);
      bonds.push_back(Bond{sites[rng() % sites.size()], ni,
                           BondOrder::kSingle});
    }
  }

  return Molecule(std::move(atoms), std::move(bonds));
}

Molecule shuffle_atoms(const Molecule &mol, std::mt19937_64 &rng) {
  std::vector<int> perm(mol.atom_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return chem::permute_atoms(mol, perm);
}

std::string data_path(const std::string &relative) {
#ifdef PATCHEM_SOURCE_DIR
  return std::string(PATCHEM_SOURCE_DIR) + "/" + relative;
#else
  return relative;
#endif
}

}  // namespace patchem::testutil
