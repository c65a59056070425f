//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_FEAT_FINGERPRINT_HPP_
#define PATCHEM_FEAT_FINGERPRINT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "patchem/chem/molecule.hpp"

namespace patchem::feat {

inline constexpr int kDefaultWidth = 2048;
inline constexpr int kDefaultRadius = 2;  // diameter 4

// Fixed-width binary fingerprint. Width must be a power of two, >= 64.
class Fingerprint {
 public:
  Fingerprint(int width, int radius);

  int width() const { return width_; }
  int radius() const { return radius_; }
  int popcount() const { return popcount_; }

  void set_bit(int index);
  bool test_bit(int index) const;
  std::vector<int> set_bits() const;

  const std::vector<std::uint64_t> &words() const { return words_; }

  // width/4 hex digits; the first digit holds bits 0..3 with bit 0 in the
  // most significant position.
  std::string to_hex() const;

  friend bool operator==(const Fingerprint &a, const Fingerprint &b) {
    return a.width_ == b.width_ && a.radius_ == b.radius_ &&
           a.words_ == b.words_;
  }

 private:
  int width_;
  int radius_;
  int popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

// Circular environment codes of the iterative Morgan procedure, all radii
// from 0 through `radius`, deduplicated on identical atom sets. Sorted.
// Hydrogen atoms are folded into the heavy-atom invariants.
std::vector<std::uint64_t> ecfp_codes(const chem::Molecule &mol, int radius);

// Folds ecfp_codes onto a bit vector (bit = code mod width).
Fingerprint ecfp(const chem::Molecule &mol, int radius = kDefaultRadius,
                 int width = kDefaultWidth);

// |a AND b| / |a OR b|; 1.0 when both are empty. Throws WidthMismatchError
// unless widths and radii agree.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

}  // namespace patchem::feat

#endif  // PATCHEM_FEAT_FINGERPRINT_HPP_
