//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include "patchem/feat/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "patchem/support/errors.hpp"
#include "patchem/support/hash.hpp"

namespace patchem::feat {

Fingerprint::Fingerprint(int width, int radius)
    : width_(width), radius_(radius) {
  if (width < 64 || (width & (width - 1)) != 0) {
    throw Error("fingerprint width must be a power of two >= 64");
  }
  words_.assign(static_cast<std::size_t>(width) / 64, 0);
}

void Fingerprint::set_bit(int index) {
  std::uint64_t &word = words_[static_cast<std::size_t>(index) / 64];
  std::uint64_t mask = std::uint64_t{1} << (static_cast<std::size_t>(index) % 64);
  if ((word & mask) == 0) {
    word |= mask;
    ++popcount_;
  }
}

bool Fingerprint::test_bit(int index) const {
  return (words_[static_cast<std::size_t>(index) / 64] >>
          (static_cast<std::size_t>(index) % 64)) &
         1;
}

std::vector<int> Fingerprint::set_bits() const {
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(popcount_));
  for (int i = 0; i < width_; ++i) {
    if (test_bit(i)) {
      bits.push_back(i);
    }
  }
  return bits;
}

std::string Fingerprint::to_hex() const {
  static const char *digits = "0123456789abcdef";
  std::string out;
  out.reserve(static_cast<std::size_t>(width_) / 4);
  for (int nibble = 0; nibble < width_ / 4; ++nibble) {
    int value = 0;
    for (int k = 0; k < 4; ++k) {
      value = (value << 1) | (test_bit(nibble * 4 + k) ? 1 : 0);
    }
    out.push_back(digits[value]);
  }
  return out;
}

namespace {

using chem::Molecule;

// Atom-set key of an environment, as a fixed-size bit mask.
using AtomSet = std::vector<std::uint64_t>;

AtomSet merge(const AtomSet &a, const AtomSet &b) {
  AtomSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] | b[i];
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> ecfp_codes(const Molecule &mol, int radius) {
  const int n = static_cast<int>(mol.atom_count());
  std::vector<int> heavy;
  std::vector<int> heavy_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (mol.atom(i).atomic_number > 1) {
      heavy_index[static_cast<std::size_t>(i)] =
          static_cast<int>(heavy.size());
      heavy.push_back(i);
    }
  }
  const std::size_t words = (heavy.size() + 63) / 64;

  std::vector<std::uint64_t> codes(heavy.size());
  std::vector<AtomSet> sets(heavy.size());
  for (std::size_t h = 0; h < heavy.size(); ++h) {
    int i = heavy[h];
    const chem::Atom &a = mol.atom(i);
    codes[h] = hash_words({0x0ecf, static_cast<std::uint64_t>(a.atomic_number),
                           static_cast<std::uint64_t>(a.formal_charge + 8),
                           static_cast<std::uint64_t>(mol.heavy_degree(i)),
                           static_cast<std::uint64_t>(mol.total_hydrogens(i)),
                           mol.atom_in_ring(i) ? 1u : 0u});
    sets[h].assign(words, 0);
    sets[h][h / 64] |= std::uint64_t{1} << (h % 64);
  }

  // candidate environments: (radius, code, atom set)
  struct Candidate {
    int radius;
    std::uint64_t code;
    AtomSet set;
  };
  std::vector<Candidate> candidates;
  for (std::size_t h = 0; h < heavy.size(); ++h) {
    candidates.push_back({0, codes[h], sets[h]});
  }

  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next_codes(heavy.size());
    std::vector<AtomSet> next_sets(heavy.size());
    for (std::size_t h = 0; h < heavy.size(); ++h) {
      int i = heavy[h];
      std::vector<std::pair<std::uint64_t, std::uint64_t>> env;
      AtomSet set = sets[h];
      for (auto [v, b] : mol.neighbors(i)) {
        int hv = heavy_index[static_cast<std::size_t>(v)];
        if (hv < 0) {
          continue;
        }
        env.emplace_back(
            static_cast<std::uint64_t>(mol.bond(b).order),
            codes[static_cast<std::size_t>(hv)]);
        set = merge(set, sets[static_cast<std::size_t>(hv)]);
      }
      std::sort(env.begin(), env.end());
      HashStream hs;
      hs.feed(0x1ecf).feed(static_cast<std::uint64_t>(r)).feed(codes[h]);
      for (auto [order, code] : env) {
        hs.feed(order).feed(code);
      }
      next_codes[h] = hs.digest();
      next_sets[h] = std::move(set);
    }
    codes = std::move(next_codes);
    sets = std::move(next_sets);
    for (std::size_t h = 0; h < heavy.size(); ++h) {
      candidates.push_back({r, codes[h], sets[h]});
    }
  }

  // Deduplicate on atom sets; the survivor is the lowest (radius, code),
  // which keeps the result independent of atom numbering.
  std::map<AtomSet, std::pair<int, std::uint64_t>> best;
  for (const Candidate &c : candidates) {
    auto [it, inserted] = best.try_emplace(c.set,
                                           std::make_pair(c.radius, c.code));
    if (!inserted && std::make_pair(c.radius, c.code) < it->second) {
      it->second = {c.radius, c.code};
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(best.size());
  for (const auto &[set, rc] : best) {
    out.push_back(rc.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fingerprint ecfp(const Molecule &mol, int radius, int width) {
  if (radius < 0) {
    throw Error("fingerprint radius must be non-negative");
  }
  Fingerprint fp(width, radius);
  for (std::uint64_t code : ecfp_codes(mol, radius)) {
    fp.set_bit(static_cast<int>(code % static_cast<std::uint64_t>(width)));
  }
  return fp;
}

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  if (a.width() != b.width() || a.radius() != b.radius()) {
    throw WidthMismatchError("fingerprint width/radius mismatch: " +
                             std::to_string(a.width()) + "/" +
                             std::to_string(a.radius()) + " vs " +
                             std::to_string(b.width()) + "/" +
                             std::to_string(b.radius()));
  }
  std::int64_t inter = 0;
  std::int64_t uni = 0;
  for (std::size_t w = 0; w < a.words().size(); ++w) {
    inter += std::popcount(a.words()[w] & b.words()[w]);
    uni += std::popcount(a.words()[w] | b.words()[w]);
  }
  if (uni == 0) {
    return 1.0;
  }
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace patchem::feat
