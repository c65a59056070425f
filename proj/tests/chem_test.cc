//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "patchem/chem/aromatize.hpp"
#include "patchem/chem/canon.hpp"
#include "patchem/chem/molecule.hpp"
#include "patchem/chem/smiles.hpp"
#include "support/chem_testutil.hpp"

namespace patchem {
namespace {

using chem::BondOrder;
using chem::DiagnosticKind;
using chem::Molecule;
using chem::parse_smiles;
using chem::SmilesError;
using chem::standardize;
using chem::write_smiles;
using testutil::graphs_isomorphic;
using testutil::random_molecule;
using testutil::shuffle_atoms;

chem::ParseDiagnostic diag_of(const std::string &smiles) {
  try {
    parse_smiles(smiles);
  } catch (const SmilesError &e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "expected parse failure for: " << smiles;
  return {};
}

TEST(ParseSmiles, EthanolAtomsAndBonds) {
  Molecule m = parse_smiles("CCO");
  ASSERT_EQ(m.atom_count(), 3u);
  EXPECT_EQ(m.atom(0).atomic_number, 6);
  EXPECT_EQ(m.atom(1).atomic_number, 6);
  EXPECT_EQ(m.atom(2).atomic_number, 8);
  ASSERT_EQ(m.bond_count(), 2u);
  EXPECT_EQ(m.bond(0).order, BondOrder::kSingle);
  EXPECT_EQ(m.bond(1).order, BondOrder::kSingle);
  EXPECT_EQ(m.hydrogen_count(0), 3);
  EXPECT_EQ(m.hydrogen_count(1), 2);
  EXPECT_EQ(m.hydrogen_count(2), 1);
}

TEST(ParseSmiles, BenzeneAromatic) {
  Molecule m = parse_smiles("c1ccccc1");
  ASSERT_EQ(m.atom_count(), 6u);
  ASSERT_EQ(m.bond_count(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_TRUE(m.atom(i).aromatic);
    EXPECT_EQ(m.bond(i).order, BondOrder::kAromatic);
    EXPECT_EQ(m.hydrogen_count(i), 1);
  }
  EXPECT_EQ(m.cyclomatic_number(), 1);
  EXPECT_EQ(m.sssr().size(), 1u);
}

TEST(ParseSmiles, UnbalancedParenOffset) {
  auto d = diag_of("C((C)");
  EXPECT_EQ(d.kind, DiagnosticKind::kUnbalancedParen);
  EXPECT_EQ(d.byte_offset, 2u);
}

TEST(ParseSmiles, ErrorCatalog) {
  EXPECT_EQ(diag_of("").kind, DiagnosticKind::kEmptyInput);
  EXPECT_EQ(diag_of("   ").kind, DiagnosticKind::kEmptyInput);
  EXPECT_EQ(diag_of("C)C").kind, DiagnosticKind::kUnbalancedParen);
  EXPECT_EQ(diag_of("C(C").kind, DiagnosticKind::kUnbalancedParen);
  EXPECT_EQ(diag_of("C()C").kind, DiagnosticKind::kUnbalancedParen);
  EXPECT_EQ(diag_of("C1CC").kind, DiagnosticKind::kUnclosedRing);
  EXPECT_EQ(diag_of("C1CC").byte_offset, 1u);
  EXPECT_EQ(diag_of("[Xx]").kind, DiagnosticKind::kBadElement);
  EXPECT_EQ(diag_of("[C+7]").kind, DiagnosticKind::kBadCharge);
  EXPECT_EQ(diag_of("[C--+]").kind, DiagnosticKind::kBadCharge);
  EXPECT_EQ(diag_of("C%1C").kind, DiagnosticKind::kBadRingDigit);
  EXPECT_EQ(diag_of("C11").kind, DiagnosticKind::kBadRingDigit);
  EXPECT_EQ(diag_of("C12CC12").kind, DiagnosticKind::kBadRingDigit);
  EXPECT_EQ(diag_of("C=1CC#1").kind, DiagnosticKind::kBadRingDigit);
  EXPECT_EQ(diag_of("*").kind, DiagnosticKind::kUnsupportedFeature);
  EXPECT_EQ(diag_of("C$C").kind, DiagnosticKind::kUnsupportedFeature);
  EXPECT_EQ(diag_of("[CH3:1]O").kind, DiagnosticKind::kUnsupportedFeature);
  EXPECT_EQ(diag_of("cc").kind, DiagnosticKind::kUnsupportedFeature);
  EXPECT_EQ(diag_of("c").kind, DiagnosticKind::kUnsupportedFeature);
  EXPECT_EQ(diag_of("C=").kind, DiagnosticKind::kBadElement);
  EXPECT_EQ(diag_of("C==C").kind, DiagnosticKind::kBadElement);
  EXPECT_EQ(diag_of("C.").kind, DiagnosticKind::kBadElement);
  EXPECT_EQ(diag_of("K").kind, DiagnosticKind::kBadElement);
  EXPECT_EQ(diag_of("[C").kind, DiagnosticKind::kUnbalancedParen);
}

TEST(ParseSmiles, OffsetsNeverExceedLength) {
  const std::string bad[] = {"C((C)", "C1CC", "[C", "C=", "c1ccccc"};
  for (const auto &s : bad) {
    auto d = diag_of(s);
    EXPECT_LE(d.byte_offset, s.size()) << s;
  }
}

TEST(ParseSmiles, BracketAtoms) {
  Molecule m = parse_smiles("[13CH4]");
  EXPECT_EQ(m.atom(0).atomic_number, 6);
  ASSERT_TRUE(m.atom(0).isotope.has_value());
  EXPECT_EQ(*m.atom(0).isotope, 13);
  EXPECT_EQ(m.hydrogen_count(0), 4);

  Molecule ammonium = parse_smiles("[NH4+]");
  EXPECT_EQ(ammonium.atom(0).formal_charge, 1);
  EXPECT_EQ(ammonium.hydrogen_count(0), 4);

  Molecule shielded = parse_smiles("[O-]");
  EXPECT_EQ(shielded.atom(0).formal_charge, -1);
  EXPECT_EQ(shielded.hydrogen_count(0), 0);

  Molecule deuterium = parse_smiles("[2H]");
  EXPECT_EQ(deuterium.atom(0).atomic_number, 1);
  EXPECT_EQ(*deuterium.atom(0).isotope, 2);

  Molecule doubly = parse_smiles("[Fe++]");
  EXPECT_EQ(doubly.atom(0).atomic_number, 26);
  EXPECT_EQ(doubly.atom(0).formal_charge, 2);
}

TEST(ParseSmiles, PercentRingClosure) {
  Molecule m = parse_smiles("C%12CCCCC%12");
  EXPECT_EQ(m.cyclomatic_number(), 1);
  EXPECT_EQ(m.sssr().front().atoms.size(), 6u);
}

TEST(ParseSmiles, RingClosureAcrossDot) {
  // Legal oddity: the digit pair bridges the dot, so this is ethane.
  Molecule m = parse_smiles("C1.C1");
  EXPECT_EQ(m.bond_count(), 1u);
  EXPECT_EQ(m.component_count(), 1);
}

TEST(ParseSmiles, DotFragments) {
  Molecule m = parse_smiles("[NH4+].[Cl-]");
  EXPECT_EQ(m.component_count(), 2);
  EXPECT_EQ(m.bond_count(), 0u);
}

TEST(ParseSmiles, StereoParsedAsAnnotations) {
  Molecule m = parse_smiles("C/C=C/C");
  EXPECT_EQ(m.annotations().size(), 2u);
  EXPECT_EQ(m.bond_count(), 3u);
  EXPECT_EQ(standardize("C/C=C/C"), standardize("CC=CC"));

  Molecule chiral = parse_smiles("N[C@H](C)C(=O)O");
  ASSERT_EQ(chiral.annotations().size(), 1u);
  EXPECT_EQ(chiral.annotations()[0].kind,
            chem::StereoAnnotation::Kind::kTetrahedral);
  EXPECT_EQ(standardize("N[C@H](C)C(=O)O"), standardize("N[C@@H](C)C(=O)O"));
}

TEST(ParseSmiles, ImplicitHydrogenTable) {
  struct Case {
    const char *smiles;
    int atom;
    int hydrogens;
  };
  const Case cases[] = {
      {"C", 0, 4},        {"N", 0, 3},         {"O", 0, 2},
      {"P", 0, 3},        {"S", 0, 2},         {"Cl", 0, 1},
      {"B", 0, 3},        {"I", 0, 1},         {"CP(C)C", 1, 0},
      {"OP(O)(O)=O", 1, 0},                    // P(V)
      {"OS(O)(=O)=O", 1, 0},                   // S(VI)
      {"CS(C)=O", 1, 0},                       // S(IV)
      {"C=C", 0, 2},      {"C#N", 1, 0},       {"C#N", 0, 1},
  };
  for (const Case &c : cases) {
    Molecule m = parse_smiles(c.smiles);
    EXPECT_EQ(m.hydrogen_count(c.atom), c.hydrogens)
        << c.smiles << " atom " << c.atom;
  }
}

TEST(ParseSmiles, BiphenylBridgeIsSingle) {
  Molecule m = parse_smiles("c1ccccc1c1ccccc1");
  int bridges = 0;
  for (std::size_t b = 0; b < m.bond_count(); ++b) {
    if (m.bond(static_cast<int>(b)).order == BondOrder::kSingle) {
      ++bridges;
      EXPECT_FALSE(m.bond_in_ring(static_cast<int>(b)));
    }
  }
  EXPECT_EQ(bridges, 1);
}

TEST(ParseSmiles, NeverPanicsOnFuzzedInput) {
  std::mt19937_64 rng(20260809);
  const std::string alphabet = "CcNnOoSs()[]1234=#+-@/\\%.HBrClFI*$ ";
  for (int iter = 0; iter < 20000; ++iter) {
    std::string s;
    int len = 1 + static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k) {
      s += alphabet[rng() % alphabet.size()];
    }
    try {
      Molecule m = parse_smiles(s);
      EXPECT_GE(m.atom_count(), 1u);
    } catch (const SmilesError &e) {
      EXPECT_LE(e.diagnostic().byte_offset, s.size());
    }
  }
}

// ---- canonical ranks ------------------------------------------------------

TEST(CanonicalRanks, BenzeneIsOneClass) {
  auto ranks = chem::canonical_ranks(parse_smiles("c1ccccc1"));
  std::set<int> distinct(ranks.begin(), ranks.end());
  EXPECT_EQ(distinct.size(), 1u);
}

TEST(CanonicalRanks, EthanolThreeClasses) {
  auto ranks = chem::canonical_ranks(parse_smiles("CCO"));
  std::set<int> distinct(ranks.begin(), ranks.end());
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(CanonicalRanks, RelabelingConsistency) {
  Molecule a = parse_smiles("CCO");
  Molecule b = parse_smiles("OCC");
  auto ra = chem::canonical_ranks(a);
  auto rb = chem::canonical_ranks(b);
  // Same multiset of ranks, and the oxygen carries the same rank.
  std::vector<int> sa = ra, sb = rb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(ra[2], rb[0]);  // oxygen position differs, rank must not
}

TEST(CanonicalRanks, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Molecule m = random_molecule(rng);
    auto ranks = chem::canonical_ranks(m);
    std::vector<int> perm(m.atom_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto shuffled_ranks = chem::canonical_ranks(chem::permute_atoms(m, perm));
    for (std::size_t i = 0; i < perm.size(); ++i) {
      EXPECT_EQ(ranks[i], shuffled_ranks[static_cast<std::size_t>(perm[i])]);
    }
  }
}

// ---- writer ---------------------------------------------------------------

TEST(WriteSmiles, EqualGraphsEqualStrings) {
  EXPECT_EQ(write_smiles(parse_smiles("OCC")), write_smiles(parse_smiles("CCO")));
  EXPECT_EQ(write_smiles(parse_smiles("C")), "C");
}

TEST(WriteSmiles, RoundTripIsomorphicOnRandomMolecules) {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 300; ++iter) {
    Molecule m = random_molecule(rng);
    Molecule back = parse_smiles(write_smiles(m));
    EXPECT_TRUE(graphs_isomorphic(m, back)) << write_smiles(m);
  }
}

TEST(WriteSmiles, RelabelingInvariance) {
  std::mt19937_64 rng(202);
  for (int iter = 0; iter < 120; ++iter) {
    Molecule m = random_molecule(rng);
    std::string reference = write_smiles(m);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      EXPECT_EQ(write_smiles(shuffle_atoms(m, rng)), reference);
    }
  }
}

TEST(WriteSmiles, MultiFragmentDeterministicOrder) {
  EXPECT_EQ(write_smiles(parse_smiles("[Cl-].[NH4+]")),
            write_smiles(parse_smiles("[NH4+].[Cl-]")));
}

// ---- standardize ----------------------------------------------------------

// Independent aromatization referee: find the unique 6-cycle by brute force
// and count pi electrons as atoms carrying a double bond inside the cycle.
TEST(Standardize, BenzeneHueckelOracle) {
  Molecule kekule = parse_smiles("C1=CC=CC=C1");
  ASSERT_EQ(kekule.sssr().size(), 1u);
  const auto &ring = kekule.sssr().front();
  ASSERT_EQ(ring.atoms.size(), 6u);
  int pi = 0;
  for (int a : ring.atoms) {
    for (auto [v, b] : kekule.neighbors(a)) {
      if (kekule.bond(b).order == BondOrder::kDouble &&
          std::find(ring.atoms.begin(), ring.atoms.end(), v) !=
              ring.atoms.end()) {
        ++pi;
        break;
      }
    }
  }
  EXPECT_EQ(pi, 6);
  EXPECT_EQ(pi % 4, 2);  // 4n+2 with n=1: the ring must aromatize
  EXPECT_EQ(standardize("C1=CC=CC=C1"), standardize("c1ccccc1"));
}

TEST(Standardize, Idempotent) {
  const std::string inputs[] = {
      "CCO", "c1ccccc1", "C1=CC=CC=C1", "CC(=O)Oc1ccccc1C(=O)O",
      "C1=CC2=CC=CC=C2C=C1", "O=C1C=CC(=O)C=C1", "C1=CC=CN1",
      "[NH4+].[Cl-]", "N#Cc1ccccc1", "C/C=C/C", "OS(=O)(=O)O",
  };
  for (const auto &s : inputs) {
    std::string once = standardize(s);
    EXPECT_EQ(standardize(once), once) << s;
  }
}

TEST(Standardize, EqualGraphsEqualOutput) {
  EXPECT_EQ(standardize("OCC"), standardize("CCO"));
  EXPECT_EQ(standardize("C1=CC=CN1"), standardize("[nH]1cccc1"));
  EXPECT_EQ(standardize("C1=CC2=CC=CC=C2C=C1"), standardize("c1ccc2ccccc2c1"));
}

TEST(Standardize, QuinoneStaysKekule) {
  Molecule m = chem::perceive_aromaticity(parse_smiles("O=C1C=CC(=O)C=C1"));
  for (const auto &atom : m.atoms()) {
    EXPECT_FALSE(atom.aromatic);
  }
}

TEST(Standardize, IdempotentOnRandomMolecules) {
  std::mt19937_64 rng(303);
  for (int iter = 0; iter < 200; ++iter) {
    Molecule m = random_molecule(rng);
    std::string once = standardize(write_smiles(m));
    EXPECT_EQ(standardize(once), once);
  }
}

// ---- molecule structure ----------------------------------------------------

TEST(Molecule, RingPerception) {
  Molecule m = parse_smiles("C1CC1CCC");
  EXPECT_TRUE(m.atom_in_ring(0));
  EXPECT_TRUE(m.atom_in_ring(1));
  EXPECT_TRUE(m.atom_in_ring(2));
  EXPECT_FALSE(m.atom_in_ring(3));
  EXPECT_EQ(m.sssr().size(), 1u);
  EXPECT_EQ(m.sssr().front().atoms.size(), 3u);
}

TEST(Molecule, SpiroAndFusedSssrCount) {
  EXPECT_EQ(parse_smiles("C1CCC2(CC1)CCCCC2").sssr().size(), 2u);   // spiro
  EXPECT_EQ(parse_smiles("c1ccc2ccccc2c1").sssr().size(), 2u);      // fused
  EXPECT_EQ(parse_smiles("C1CC2CCC1CC2").sssr().size(), 2u);        // bridged
}

TEST(Molecule, DuplicateBondRejected) {
  using chem::Atom;
  using chem::Bond;
  std::vector<Atom> atoms(2);
  std::vector<Bond> bonds{{0, 1, BondOrder::kSingle},
                          {1, 0, BondOrder::kSingle}};
  EXPECT_THROW(Molecule(atoms, bonds), Error);
}

}  // namespace
}  // namespace patchem
