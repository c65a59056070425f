//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_CHEM_SMILES_HPP_
#define PATCHEM_CHEM_SMILES_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "patchem/chem/molecule.hpp"
#include "patchem/support/errors.hpp"

namespace patchem::chem {

enum class DiagnosticKind {
  kUnbalancedParen,
  kUnclosedRing,
  kBadElement,
  kBadCharge,
  kBadRingDigit,
  kEmptyInput,
  kUnsupportedFeature,
};

std::string_view diagnostic_kind_name(DiagnosticKind kind);

// Where and why a SMILES string was rejected. byte_offset points into the
// original UTF-8 input and never exceeds its length.
struct ParseDiagnostic {
  std::size_t byte_offset = 0;
  DiagnosticKind kind = DiagnosticKind::kEmptyInput;
  std::string message;
};

class SmilesError : public Error {
 public:
  explicit SmilesError(ParseDiagnostic diagnostic);

  const ParseDiagnostic &diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

// Reads one SMILES string into a molecular graph. Supported subset: organic
// subset atoms, bracket atoms with isotope/hydrogen-count/charge, branches,
// ring closures including %nn, dot disconnection, aromatic lowercase forms.
// Stereo marks (/, \, @, @@) parse into annotations and are otherwise
// ignored. Everything else raises SmilesError; the function never crashes on
// malformed text.
Molecule parse_smiles(std::string_view text);

// Canonical SMILES for the graph. Stereo annotations are not written. The
// output reparses to an isomorphic graph, and isomorphic inputs produce
// equal strings regardless of atom numbering (complete on the kinds of
// molecules this toolkit targets; see canonical_ranks for the refinement
// that drives it).
std::string write_smiles(const Molecule &mol);

// Parse, perceive aromaticity, and rewrite canonically. Idempotent.
std::string standardize(std::string_view smiles);

}  // namespace patchem::chem

#endif  // PATCHEM_CHEM_SMILES_HPP_
