//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CHEM_MOLECULE_H_
#define SYNTHROUTE_CHEM_MOLECULE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace synthroute::chem {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

struct Atom {
  std::string element;
  bool aromatic = false;
  int charge = 0;
  bool bracket = false;
  // Explicit hydrogen count written inside brackets; -1 when not given.
  int hydrogens = -1;
};

struct Bond {
  int a;
  int b;
  BondOrder order;
};

// Immutable molecular graph. Construct through parse_smiles() or
// Molecule::from_parts(), both of which validate the graph invariants.
class Molecule {
public:
  static Molecule from_parts(std::vector<Atom> atoms, std::vector<Bond> bonds,
                             std::string smiles_source = {});

  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }
  const std::string &smiles_source() const { return smiles_source_; }

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  // Set when the input carried stereo or isotope markers that were dropped.
  bool stereo_ignored() const { return stereo_ignored_; }

  struct Neighbor {
    int atom;
    BondOrder order;
  };
  // Adjacency in bond input order.
  const std::vector<std::vector<Neighbor>> &adjacency() const { return adj_; }

private:
  friend class SmilesParser;

  Molecule() = default;
  void build_adjacency();

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::string smiles_source_;
  bool stereo_ignored_ = false;
  std::vector<std::vector<Neighbor>> adj_;
};

// Heavy-atom element symbols sorted, for collision guards.
std::vector<std::string> element_multiset(const Molecule &m);

}  // namespace synthroute::chem

#endif  // SYNTHROUTE_CHEM_MOLECULE_H_
