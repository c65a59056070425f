//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "patchem/chem/smiles.hpp"
#include "patchem/feat/descriptors.hpp"
#include "patchem/feat/fingerprint.hpp"
#include "support/chem_testutil.hpp"

namespace patchem {
namespace {

using chem::Molecule;
using chem::parse_smiles;
using feat::ecfp;
using feat::ecfp_codes;
using feat::Fingerprint;
using feat::tanimoto;
using testutil::random_molecule;
using testutil::shuffle_atoms;

// Independent environment enumerator: the set of distinct radius<=r balls
// (as heavy-atom index sets) around every heavy atom. Each distinct ball is
// one circular environment. On molecules where no two environments are
// structurally alike this count equals the fingerprint popcount; symmetric
// molecules collapse isomorphic environments onto one code, so the fixtures
// below are chosen fully asymmetric.
std::size_t brute_force_environment_count(const Molecule &m, int radius) {
  std::set<std::set<int>> balls;
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    if (m.atom(static_cast<int>(i)).atomic_number <= 1) {
      continue;
    }
    // BFS out to `radius` over heavy atoms, recording every intermediate ball.
    std::set<int> ball{static_cast<int>(i)};
    balls.insert(ball);
    std::vector<int> frontier{static_cast<int>(i)};
    for (int r = 0; r < radius; ++r) {
      std::vector<int> next;
      for (int u : frontier) {
        for (auto [v, b] : m.neighbors(u)) {
          if (m.atom(v).atomic_number <= 1 || ball.count(v)) {
            continue;
          }
          ball.insert(v);
          next.push_back(v);
        }
      }
      frontier = std::move(next);
      balls.insert(ball);
    }
  }
  return balls.size();
}

Fingerprint from_bits(const std::vector<int> &bits, int width = 2048) {
  Fingerprint fp(width, 2);
  for (int b : bits) {
    fp.set_bit(b);
  }
  return fp;
}

TEST(Ecfp, MethaneHasExactlyOneEnvironment) {
  Fingerprint fp = ecfp(parse_smiles("C"));
  EXPECT_EQ(fp.popcount(), 1);
  EXPECT_EQ(ecfp_codes(parse_smiles("C"), 2).size(), 1u);
}

TEST(Ecfp, RelabelingInvariance) {
  EXPECT_EQ(ecfp(parse_smiles("CCO")), ecfp(parse_smiles("OCC")));
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    Molecule m = random_molecule(rng);
    Fingerprint reference = ecfp(m);
    for (int s = 0; s < 8; ++s) {
      EXPECT_EQ(ecfp(shuffle_atoms(m, rng)), reference);
    }
  }
}

TEST(Ecfp, PopcountMatchesBruteForceEnumerator) {
  // Every atom in these molecules has a structurally unique neighborhood.
  const char *smiles[] = {"CCO", "CC(=O)O", "FCO", "CC(=O)NO", "N#CCO"};
  for (const char *s : smiles) {
    Molecule m = parse_smiles(s);
    EXPECT_EQ(static_cast<std::size_t>(ecfp(m).popcount()),
              brute_force_environment_count(m, 2))
        << s;
  }
}

TEST(Ecfp, SymmetryCollapsesEnvironments) {
  // All six benzene environments per radius are isomorphic: one bit each for
  // radius 0, 1, 2.
  EXPECT_EQ(ecfp(parse_smiles("c1ccccc1")).popcount(), 3);
  EXPECT_EQ(ecfp(parse_smiles("C1CCCCC1")).popcount(), 3);
}

TEST(Ecfp, DistinctCodeCountMonotoneInRadius) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 40; ++iter) {
    Molecule m = random_molecule(rng);
    for (int r = 0; r < 4; ++r) {
      EXPECT_LE(ecfp_codes(m, r).size(), ecfp_codes(m, r + 1).size());
    }
  }
}

TEST(Ecfp, WidthValidation) {
  EXPECT_THROW(ecfp(parse_smiles("C"), 2, 100), Error);
  EXPECT_THROW(ecfp(parse_smiles("C"), 2, 32), Error);
  EXPECT_NO_THROW(ecfp(parse_smiles("C"), 2, 64));
}

TEST(Tanimoto, HandComputedCases) {
  EXPECT_DOUBLE_EQ(tanimoto(from_bits({1, 2, 3}), from_bits({2, 3, 4})), 0.5);
  Fingerprint a = from_bits({7, 9, 1000});
  EXPECT_DOUBLE_EQ(tanimoto(a, a), 1.0);
  EXPECT_DOUBLE_EQ(tanimoto(from_bits({1, 2}), from_bits({3, 4})), 0.0);
  EXPECT_DOUBLE_EQ(tanimoto(from_bits({}), from_bits({})), 1.0);
}

TEST(Tanimoto, WidthMismatchRejected) {
  Fingerprint a(2048, 2);
  Fingerprint b(1024, 2);
  EXPECT_THROW(tanimoto(a, b), WidthMismatchError);
  Fingerprint c(2048, 3);
  EXPECT_THROW(tanimoto(a, c), WidthMismatchError);
}

TEST(Tanimoto, MatchesBruteForceSetFormula) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<int> xs, ys;
    int nx = static_cast<int>(rng() % 40);
    int ny = static_cast<int>(rng() % 40);
    for (int k = 0; k < nx; ++k) {
      xs.push_back(static_cast<int>(rng() % 2048));
    }
    for (int k = 0; k < ny; ++k) {
      ys.push_back(static_cast<int>(rng() % 2048));
    }
    Fingerprint a = from_bits(xs);
    Fingerprint b = from_bits(ys);
    std::set<int> sa(xs.begin(), xs.end()), sb(ys.begin(), ys.end());
    std::vector<int> inter, uni;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(inter));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(),
                   std::back_inserter(uni));
    double expected =
        uni.empty() ? 1.0
                    : static_cast<double>(inter.size()) / uni.size();
    EXPECT_DOUBLE_EQ(tanimoto(a, b), expected);
    EXPECT_DOUBLE_EQ(tanimoto(a, b), tanimoto(b, a));
    EXPECT_GE(tanimoto(a, b), 0.0);
    EXPECT_LE(tanimoto(a, b), 1.0);
  }
}

TEST(Fingerprint, HexSerialization) {
  Fingerprint fp(64, 2);
  fp.set_bit(0);   // first nibble, most significant position -> 8
  fp.set_bit(7);   // second nibble, least significant position -> 1
  std::string hex = fp.to_hex();
  ASSERT_EQ(hex.size(), 16u);
  EXPECT_EQ(hex.substr(0, 2), "81");
  EXPECT_EQ(hex.substr(2), std::string(14, '0'));
}

TEST(Descriptors, Water) {
  auto d = feat::descriptors(parse_smiles("O"));
  EXPECT_NEAR(d.molecular_weight, 18.02, 0.01);
  EXPECT_EQ(d.hbd, 1);
  EXPECT_EQ(d.hba, 1);
  EXPECT_EQ(d.heavy_atom_count, 1);
  EXPECT_EQ(d.ring_count, 0);
}

TEST(Descriptors, Benzene) {
  auto d = feat::descriptors(parse_smiles("c1ccccc1"));
  EXPECT_EQ(d.ring_count, 1);  // 6 - 6 + 1
  EXPECT_EQ(d.aromatic_ring_count, 1);
  EXPECT_EQ(d.rotatable_bonds, 0);
  EXPECT_DOUBLE_EQ(d.fraction_aromatic_atoms, 1.0);
  EXPECT_NEAR(d.molecular_weight, 78.11, 0.05);
}

TEST(Descriptors, RotatableBondRule) {
  EXPECT_EQ(feat::descriptors(parse_smiles("CCO")).rotatable_bonds, 0);
  EXPECT_EQ(feat::descriptors(parse_smiles("CCCC")).rotatable_bonds, 1);
  EXPECT_EQ(feat::descriptors(parse_smiles("c1ccccc1-c1ccccc1")).rotatable_bonds,
            1);
  EXPECT_EQ(feat::descriptors(parse_smiles("C1CCCCC1")).rotatable_bonds, 0);
  // The stated rule is purely topological; conjugation does not exempt the
  // butadiene central bond.
  EXPECT_EQ(feat::descriptors(parse_smiles("C=CC=C")).rotatable_bonds, 1);
}

TEST(Descriptors, ChargesAndFractions) {
  auto d = feat::descriptors(parse_smiles("[NH4+].[Cl-]"));
  EXPECT_EQ(d.formal_charge_sum, 0);
  auto d2 = feat::descriptors(parse_smiles("[O-]C(=O)c1ccccc1"));
  EXPECT_EQ(d2.formal_charge_sum, -1);
  EXPECT_NEAR(d2.fraction_aromatic_atoms, 6.0 / 9.0, 1e-12);
}

TEST(Descriptors, NonAromaticRingNotCountedAromatic) {
  auto d = feat::descriptors(parse_smiles("C1CCCCC1"));
  EXPECT_EQ(d.ring_count, 1);
  EXPECT_EQ(d.aromatic_ring_count, 0);
}

}  // namespace
}  // namespace patchem
