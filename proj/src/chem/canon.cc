//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/chem/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "patchem/chem/elements.hpp"
#include "patchem/chem/smiles.hpp"
#include "patchem/support/errors.hpp"

namespace patchem::chem {

namespace {

using Key = std::vector<std::int64_t>;

int count_distinct(const std::vector<int> &ranks) {
  std::vector<int> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                          sorted.begin());
}

std::vector<int> dense_ranks(const std::vector<Key> &keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return keys[static_cast<std::size_t>(x)] <
           keys[static_cast<std::size_t>(y)];
  });
  std::vector<int> ranks(keys.size());
  int rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && keys[static_cast<std::size_t>(order[k])] !=
                     keys[static_cast<std::size_t>(order[k - 1])]) {
      ++rank;
    }
    ranks[static_cast<std::size_t>(order[k])] = rank;
  }
  return ranks;
}

std::vector<int> initial_ranks(const Molecule &m) {
  std::vector<Key> keys(m.atom_count());
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    const Atom &a = m.atom(static_cast<int>(i));
    keys[i] = Key{a.atomic_number,
                  a.formal_charge,
                  m.degree(static_cast<int>(i)),
                  m.hydrogen_count(static_cast<int>(i)),
                  a.aromatic ? 1 : 0,
                  a.isotope ? *a.isotope + 1 : 0};
  }
  return dense_ranks(keys);
}

// Splits rank classes by sorted neighbor (bond order, rank) multisets until
// the partition stops changing. Refinement never merges classes because the
// previous rank leads each key.
std::vector<int> refine_partition(const Molecule &m, std::vector<int> ranks) {
  int distinct = count_distinct(ranks);
  for (;;) {
    std::vector<Key> keys(m.atom_count());
    for (std::size_t i = 0; i < m.atom_count(); ++i) {
      Key key{ranks[i]};
      std::vector<std::pair<int, int>> env;
      env.reserve(m.neighbors(static_cast<int>(i)).size());
      for (auto [v, b] : m.neighbors(static_cast<int>(i))) {
        env.emplace_back(static_cast<int>(m.bond(b).order),
                         ranks[static_cast<std::size_t>(v)]);
      }
      std::sort(env.begin(), env.end());
      for (auto [order, rank] : env) {
        key.push_back(order);
        key.push_back(rank);
      }
      keys[i] = std::move(key);
    }
    std::vector<int> next = dense_ranks(keys);
    int next_distinct = count_distinct(next);
    if (next_distinct == distinct) {
      return next;
    }
    ranks = std::move(next);
    distinct = next_distinct;
  }
}

// ---- canonical string generation ----------------------------------------

std::string charge_suffix(int q) {
  if (q == 0) {
    return "";
  }
  std::string s(1, q > 0 ? '+' : '-');
  int mag = q > 0 ? q : -q;
  if (mag > 1) {
    s += std::to_string(mag);
  }
  return s;
}

std::string atom_token(const Molecule &m, int i) {
  const Atom &a = m.atom(i);
  std::string symbol(element_symbol(a.atomic_number));
  if (a.aromatic) {
    for (char &c : symbol) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  bool bare_allowed = in_organic_subset(a.atomic_number) &&
                      a.formal_charge == 0 && !a.isotope;
  if (bare_allowed && a.aromatic) {
    int z = a.atomic_number;
    bare_allowed = z == 5 || z == 6 || z == 7 || z == 8 || z == 15 || z == 16;
  }
  if (bare_allowed) {
    int weight = 0;
    for (auto [v, b] : m.neighbors(i)) {
      weight += bond_order_weight(m.bond(b).order);
    }
    if (derive_implicit_hydrogens(a.atomic_number, a.aromatic, weight) ==
        m.hydrogen_count(i)) {
      return symbol;
    }
  }
  std::string out = "[";
  if (a.isotope) {
    out += std::to_string(*a.isotope);
  }
  out += symbol;
  int h = m.hydrogen_count(i);
  if (h == 1) {
    out += "H";
  } else if (h > 1) {
    out += "H" + std::to_string(h);
  }
  out += charge_suffix(a.formal_charge);
  out += "]";
  return out;
}

std::string bond_symbol(const Molecule &m, int bond_index) {
  const Bond &b = m.bond(bond_index);
  switch (b.order) {
  case BondOrder::kSingle:
    // Between two aromatic atoms an omitted bond reads back aromatic, so a
    // genuine single bond (biphenyl bridge) must be spelled out.
    if (m.atom(b.a).aromatic && m.atom(b.b).aromatic) {
      return "-";
    }
    return "";
  case BondOrder::kAromatic:
    return "";
  case BondOrder::kDouble:
    return "=";
  case BondOrder::kTriple:
    return "#";
  }
  return "";
}

struct DfsStructure {
  std::vector<std::vector<std::pair<int, int>>> children;  // (child, bond)
  std::vector<std::vector<int>> ring_opens;   // bond indices, at open atom
  std::vector<std::vector<int>> ring_closes;  // bond indices, at close atom
  std::vector<int> preorder;                  // visit position per atom
  int start = 0;
};

DfsStructure build_dfs(const Molecule &m, const std::vector<int> &ranks) {
  const std::size_t n = m.atom_count();
  DfsStructure s;
  s.children.resize(n);
  s.ring_opens.resize(n);
  s.ring_closes.resize(n);
  s.preorder.assign(n, -1);
  s.start = static_cast<int>(
      std::min_element(ranks.begin(), ranks.end()) - ranks.begin());

  std::vector<bool> bond_used(m.bond_count(), false);
  int clock = 0;
  // Explicit stack DFS; neighbor order by rank ascending.
  std::vector<std::pair<int, std::size_t>> stack{{s.start, 0}};
  std::vector<std::vector<std::pair<int, int>>> sorted_nbrs(n);
  auto neighbors_sorted = [&](int u) -> const std::vector<std::pair<int, int>> & {
    auto &cache = sorted_nbrs[static_cast<std::size_t>(u)];
    if (cache.empty() && !m.neighbors(u).empty()) {
      cache = m.neighbors(u);
      std::sort(cache.begin(), cache.end(),
                [&](const auto &x, const auto &y) {
                  return ranks[static_cast<std::size_t>(x.first)] <
                         ranks[static_cast<std::size_t>(y.first)];
                });
    }
    return cache;
  };
  s.preorder[static_cast<std::size_t>(s.start)] = clock++;
  while (!stack.empty()) {
    auto &[u, next] = stack.back();
    const auto &nbrs = neighbors_sorted(u);
    if (next >= nbrs.size()) {
      stack.pop_back();
      continue;
    }
    auto [v, b] = nbrs[next++];
    if (bond_used[static_cast<std::size_t>(b)]) {
      continue;
    }
    bond_used[static_cast<std::size_t>(b)] = true;
    if (s.preorder[static_cast<std::size_t>(v)] < 0) {
      s.children[static_cast<std::size_t>(u)].emplace_back(v, b);
      s.preorder[static_cast<std::size_t>(v)] = clock++;
      stack.emplace_back(v, 0);
    } else {
      // v was emitted earlier: the closure digit opens there, closes at u.
      s.ring_opens[static_cast<std::size_t>(v)].push_back(b);
      s.ring_closes[static_cast<std::size_t>(u)].push_back(b);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(s.ring_opens[u].begin(), s.ring_opens[u].end(),
              [&](int x, int y) {
                int cx = s.preorder[static_cast<std::size_t>(
                    m.bond(x).other(static_cast<int>(u)))];
                int cy = s.preorder[static_cast<std::size_t>(
                    m.bond(y).other(static_cast<int>(u)))];
                return cx < cy;
              });
  }
  return s;
}

std::string digit_token(int d) {
  if (d <= 9) {
    return std::string(1, static_cast<char>('0' + d));
  }
  return "%" + std::to_string(d);
}

std::string generate(const Molecule &m, const std::vector<int> &ranks) {
  DfsStructure s = build_dfs(m, ranks);
  std::vector<int> digit_of_bond(m.bond_count(), -1);
  std::vector<bool> digit_in_use(100, false);
  auto allocate_digit = [&]() {
    for (int d = 1; d < 100; ++d) {
      if (!digit_in_use[static_cast<std::size_t>(d)]) {
        digit_in_use[static_cast<std::size_t>(d)] = true;
        return d;
      }
    }
    throw Error("more than 99 simultaneously open ring closures");
  };

  std::string out;
  // Recursive emission over the prebuilt tree.
  auto emit = [&](auto &&self, int u) -> void {
    out += atom_token(m, u);
    auto closes = s.ring_closes[static_cast<std::size_t>(u)];
    std::sort(closes.begin(), closes.end(), [&](int x, int y) {
      return digit_of_bond[static_cast<std::size_t>(x)] <
             digit_of_bond[static_cast<std::size_t>(y)];
    });
    for (int b : closes) {
      int d = digit_of_bond[static_cast<std::size_t>(b)];
      out += digit_token(d);
      digit_in_use[static_cast<std::size_t>(d)] = false;
    }
    for (int b : s.ring_opens[static_cast<std::size_t>(u)]) {
      int d = allocate_digit();
      digit_of_bond[static_cast<std::size_t>(b)] = d;
      out += bond_symbol(m, b);
      out += digit_token(d);
    }
    const auto &kids = s.children[static_cast<std::size_t>(u)];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      auto [child, bond] = kids[k];
      bool last = k + 1 == kids.size();
      if (!last) {
        out += "(";
      }
      out += bond_symbol(m, bond);
      self(self, child);
      if (!last) {
        out += ")";
      }
    }
  };
  emit(emit, s.start);
  return out;
}

// Chooses the lexicographically smallest string over every way of breaking
// residual rank ties. Ties surviving refinement almost always sit inside an
// automorphism orbit, so the candidate strings coincide and the search stays
// tiny; the budget guards against adversarial regular graphs.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Molecule &m) : m_(m) {}

  std::string run(std::vector<int> ranks) {
    return best_string(std::move(ranks));
  }

 private:
  const Molecule &m_;
  long budget_ = 1 << 20;

  std::string best_string(std::vector<int> ranks) {
    if (--budget_ < 0) {
      throw Error("canonicalization search budget exceeded");
    }
    // Smallest rank value shared by at least two atoms.
    std::vector<int> histogram(m_.atom_count(), 0);
    for (int r : ranks) {
      ++histogram[static_cast<std::size_t>(r)];
    }
    int tied_rank = -1;
    for (std::size_t r = 0; r < histogram.size(); ++r) {
      if (histogram[r] >= 2) {
        tied_rank = static_cast<int>(r);
        break;
      }
    }
    if (tied_rank < 0) {
      return generate(m_, ranks);
    }
    std::string best;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] != tied_rank) {
        continue;
      }
      std::vector<int> next = ranks;
      for (std::size_t j = 0; j < next.size(); ++j) {
        if (next[j] > tied_rank || (next[j] == tied_rank && j != i)) {
          ++next[j];
        }
      }
      std::string candidate = best_string(refine_partition(m_, std::move(next)));
      if (best.empty() || candidate < best) {
        best = std::move(candidate);
      }
    }
    return best;
  }
};

std::string canonical_component_string(const Molecule &component) {
  CanonicalSearch search(component);
  return search.run(refine_partition(component, initial_ranks(component)));
}

}  // namespace

std::vector<int> canonical_ranks(const Molecule &mol) {
  return refine_partition(mol, initial_ranks(mol));
}

std::string write_smiles(const Molecule &mol) {
  if (mol.component_count() == 1) {
    return canonical_component_string(mol);
  }
  std::vector<std::vector<int>> members(
      static_cast<std::size_t>(mol.component_count()));
  for (std::size_t i = 0; i < mol.atom_count(); ++i) {
    members[static_cast<std::size_t>(mol.component_of(static_cast<int>(i)))]
        .push_back(static_cast<int>(i));
  }
  std::vector<std::string> parts;
  parts.reserve(members.size());
  for (const auto &atoms : members) {
    parts.push_back(canonical_component_string(induced_subgraph(mol, atoms)));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    out += ".";
    out += parts[k];
  }
  return out;
}

}  // namespace patchem::chem
