//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/chem/smiles.h"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "synthroute/chem/similarity.h"
#include "test_common.h"

namespace synthroute::chem {
namespace {

using ::synthroute::testing::fixture_lines;
using ::synthroute::testing::split_tab;

int count_order(const Molecule &m, BondOrder order) {
  int n = 0;
  for (const Bond &b: m.bonds()) {
    n += b.order == order ? 1 : 0;
  }
  return n;
}

TEST(SmilesParseTest, Ethanol) {
  Molecule m = parse_smiles("CCO");
  ASSERT_EQ(m.atom_count(), 3);
  EXPECT_EQ(m.atoms()[0].element, "C");
  EXPECT_EQ(m.atoms()[1].element, "C");
  EXPECT_EQ(m.atoms()[2].element, "O");
  EXPECT_EQ(m.bond_count(), 2);
  EXPECT_EQ(count_order(m, BondOrder::kSingle), 2);
  EXPECT_EQ(m.smiles_source(), "CCO");
}

TEST(SmilesParseTest, RingClosure) {
  Molecule m = parse_smiles("C1CC1");
  EXPECT_EQ(m.atom_count(), 3);
  EXPECT_EQ(m.bond_count(), 3);
  for (const auto &nbrs: m.adjacency()) {
    EXPECT_EQ(nbrs.size(), 2U);
  }
}

TEST(SmilesParseTest, AromaticRing) {
  Molecule m = parse_smiles("c1ccccc1");
  ASSERT_EQ(m.atom_count(), 6);
  for (const Atom &a: m.atoms()) {
    EXPECT_EQ(a.element, "C");
    EXPECT_TRUE(a.aromatic);
  }
  EXPECT_EQ(m.bond_count(), 6);
  EXPECT_EQ(count_order(m, BondOrder::kAromatic), 6);
}

TEST(SmilesParseTest, BondSymbolsAndBranches) {
  Molecule m = parse_smiles("C=C(C#N)c1ccccc1-c2ccccc2");
  EXPECT_EQ(count_order(m, BondOrder::kDouble), 1);
  EXPECT_EQ(count_order(m, BondOrder::kTriple), 1);
  EXPECT_EQ(count_order(m, BondOrder::kAromatic), 12);
  // two C-C singles, the biphenyl single, and C(=)-c
  EXPECT_EQ(count_order(m, BondOrder::kSingle), 3);
}

TEST(SmilesParseTest, TwoLetterOrganicAtoms) {
  Molecule m = parse_smiles("ClCBr");
  ASSERT_EQ(m.atom_count(), 3);
  EXPECT_EQ(m.atoms()[0].element, "Cl");
  EXPECT_EQ(m.atoms()[2].element, "Br");
}

TEST(SmilesParseTest, BracketAtoms) {
  Molecule m = parse_smiles("[NH4+].[O-]C(=O)C.[Fe+3].c1cc[nH]c1.[se]1cccc1");
  const auto &atoms = m.atoms();
  EXPECT_EQ(atoms[0].element, "N");
  EXPECT_EQ(atoms[0].hydrogens, 4);
  EXPECT_EQ(atoms[0].charge, 1);
  EXPECT_TRUE(atoms[0].bracket);
  EXPECT_EQ(atoms[1].charge, -1);
  EXPECT_EQ(atoms[5].element, "Fe");
  EXPECT_EQ(atoms[5].charge, 3);
  EXPECT_TRUE(atoms[9].aromatic);
  EXPECT_EQ(atoms[9].element, "N");
  EXPECT_EQ(atoms[9].hydrogens, 1);
  EXPECT_EQ(atoms[11].element, "Se");
  EXPECT_TRUE(atoms[11].aromatic);
  EXPECT_FALSE(m.stereo_ignored());
}

TEST(SmilesParseTest, ChargeRepetition) {
  EXPECT_EQ(parse_smiles("[Cu++]").atoms()[0].charge, 2);
  EXPECT_EQ(parse_smiles("[O--]").atoms()[0].charge, -2);
  EXPECT_EQ(parse_smiles("[Ti+4]").atoms()[0].charge, 4);
}

TEST(SmilesParseTest, PercentRingLabels) {
  Molecule m = parse_smiles("C%12CCC%12");
  EXPECT_EQ(m.bond_count(), 4);
  EXPECT_SR_ERROR(parse_smiles("C%1CC"), ErrorCode::kInvalidSmiles);
}

TEST(SmilesParseTest, RingBondOrderFromEitherEnd) {
  EXPECT_EQ(count_order(parse_smiles("C=1CCC1"), BondOrder::kDouble), 1);
  EXPECT_EQ(count_order(parse_smiles("C1CCC=1"), BondOrder::kDouble), 1);
  EXPECT_SR_ERROR(parse_smiles("C=1CCC#1"), ErrorCode::kInvalidSmiles);
}

TEST(SmilesParseTest, StereoMarkersIgnoredWithFlag) {
  Molecule m = parse_smiles("F/C=C/F");
  EXPECT_TRUE(m.stereo_ignored());
  EXPECT_EQ(count_order(m, BondOrder::kDouble), 1);
  EXPECT_TRUE(same_molecule(m, parse_smiles("FC=CF")));

  Molecule chiral = parse_smiles("N[C@@H](C)C(=O)O");
  EXPECT_TRUE(chiral.stereo_ignored());
  EXPECT_TRUE(same_molecule(chiral, parse_smiles("N[CH](C)C(=O)O")));

  EXPECT_TRUE(parse_smiles("[13CH4]").stereo_ignored());
}

TEST(SmilesParseTest, SurroundingWhitespaceTrimmed) {
  EXPECT_EQ(parse_smiles("  CCO\n").atom_count(), 3);
  EXPECT_SR_ERROR(parse_smiles("CC O"), ErrorCode::kInvalidSmiles);
}

TEST(SmilesParseTest, UnmatchedRing) {
  EXPECT_SR_ERROR(parse_smiles("C1CC"), ErrorCode::kUnmatchedRing);
}

TEST(SmilesParseTest, MalformedCorpus) {
  const auto lines = fixture_lines("smiles_malformed.tsv");
  ASSERT_FALSE(lines.empty());
  for (const std::string &line: lines) {
    const auto cols = split_tab(line);
    ASSERT_EQ(cols.size(), 2U) << line;
    try {
      parse_smiles(cols[0]);
      ADD_FAILURE() << "accepted malformed SMILES \"" << cols[0] << '"';
    } catch (const Error &e) {
      EXPECT_EQ(e.code_name(), cols[1]) << cols[0] << ": " << e.what();
    }
  }
}

TEST(SmilesParseTest, AcceptsWholeCorpus) {
  for (const std::string &s: fixture_lines("smiles_corpus.txt")) {
    EXPECT_NO_THROW(parse_smiles(s)) << s;
  }
}

TEST(SmilesWriteTest, RoundTripSimple) {
  Molecule ethanol = parse_smiles(write_smiles(parse_smiles("CCO")));
  EXPECT_EQ(ethanol.atom_count(), 3);
  EXPECT_EQ(ethanol.bond_count(), 2);

  Molecule ring = parse_smiles(write_smiles(parse_smiles("C1CC1")));
  EXPECT_EQ(ring.bond_count(), 3);
  for (const auto &nbrs: ring.adjacency()) {
    EXPECT_EQ(nbrs.size(), 2U);
  }
}

TEST(SmilesWriteTest, RoundTripCorpus) {
  const auto corpus = fixture_lines("smiles_corpus.txt");
  ASSERT_EQ(corpus.size(), 50U);
  for (const std::string &s: corpus) {
    const Molecule m = parse_smiles(s);
    const std::string written = write_smiles(m);
    const Molecule back = parse_smiles(written);
    EXPECT_TRUE(same_molecule(m, back)) << s << " -> " << written;
    EXPECT_EQ(canonical_key(m), canonical_key(back)) << s;
  }
}

TEST(SmilesWriteTest, WritesExplicitBondsWhereNeeded) {
  const std::string biphenyl = write_smiles(parse_smiles("c1ccccc1-c1ccccc1"));
  EXPECT_NE(biphenyl.find('-'), std::string::npos) << biphenyl;
  EXPECT_EQ(write_smiles(parse_smiles("[NH4+]")), "[NH4+]");
  EXPECT_EQ(write_smiles(parse_smiles("[O-2]")), "[O-2]");
}

TEST(SmilesWriteTest, ManyRingsUsePercentLabels) {
  // Eleven fused cyclopropane-style closures on one hub atom.
  std::string s = "C";
  for (int i = 1; i <= 11; ++i) {
    s += "(C" + std::string(i < 10 ? std::to_string(i)
                                   : "%" + std::to_string(i))
         + ")";
  }
  for (int i = 1; i <= 11; ++i) {
    s += "C" + std::string(i < 10 ? std::to_string(i)
                                  : "%" + std::to_string(i));
  }
  const Molecule m = parse_smiles(s);
  const std::string w = write_smiles(m);
  EXPECT_TRUE(same_molecule(m, parse_smiles(w))) << s << " -> " << w;
}

// Random connected graphs: a random tree plus extra ring bonds.
Molecule random_molecule(std::mt19937_64 &rng) {
  static const char *kElems[] = { "C", "N", "O", "S", "Cl", "P", "B" };
  std::uniform_int_distribution<int> n_dist(1, 24);
  const int n = n_dist(rng);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) {
    Atom a;
    a.element = kElems[rng() % 7];
    a.aromatic = (a.element == "C" || a.element == "N") && rng() % 3 == 0;
    if (rng() % 9 == 0) {
      a.charge = static_cast<int>(rng() % 5) - 2;
    }
    atoms.push_back(a);
  }
  std::vector<Bond> bonds;
  auto order = [&rng]() {
    return static_cast<BondOrder>(1 + rng() % 4);
  };
  for (int i = 1; i < n; ++i) {
    bonds.push_back({ static_cast<int>(rng() % i), i, order() });
  }
  const int extra = n > 3 ? static_cast<int>(rng() % 4) : 0;
  for (int k = 0; k < extra; ++k) {
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    bool dup = a == b;
    for (const Bond &e: bonds) {
      dup = dup || (e.a == a && e.b == b) || (e.a == b && e.b == a);
    }
    if (!dup) {
      bonds.push_back({ a, b, order() });
    }
  }
  return Molecule::from_parts(std::move(atoms), std::move(bonds));
}

TEST(SmilesWriteTest, RoundTripRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Molecule m = random_molecule(rng);
    const std::string w = write_smiles(m);
    const Molecule back = parse_smiles(w);
    ASSERT_TRUE(same_molecule(m, back)) << w;
  }
}

TEST(MoleculeTest, FromPartsRejectsBadGraphs) {
  EXPECT_SR_ERROR(Molecule::from_parts({}, {}), ErrorCode::kEmptyInput);
  std::vector<Atom> two(2, Atom { "C" });
  EXPECT_SR_ERROR(
      Molecule::from_parts(two, { { 0, 2, BondOrder::kSingle } }),
      ErrorCode::kInvalidSmiles);
  EXPECT_SR_ERROR(Molecule::from_parts(two, { { 0, 1, BondOrder::kSingle },
                                              { 1, 0, BondOrder::kDouble } }),
                  ErrorCode::kInvalidSmiles);
}

}  // namespace
}  // namespace synthroute::chem
