//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/chem/molecule.h"

#include <algorithm>
#include <set>
#include <utility>

#include "synthroute/error.h"

namespace synthroute::chem {

Molecule Molecule::from_parts(std::vector<Atom> atoms, std::vector<Bond> bonds,
                              std::string smiles_source) {
  if (atoms.empty()) {
    throw Error(ErrorCode::kEmptyInput, "molecule has no atoms");
  }

  const int n = static_cast<int>(atoms.size());
  std::set<std::pair<int, int>> seen;
  for (const Bond &b: bonds) {
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n || b.a == b.b) {
      throw Error(ErrorCode::kInvalidSmiles, "bond endpoint out of range");
    }
    if (!seen.insert(std::minmax(b.a, b.b)).second) {
      throw Error(ErrorCode::kInvalidSmiles, "duplicate bond between atoms");
    }
  }

  Molecule m;
  m.atoms_ = std::move(atoms);
  m.bonds_ = std::move(bonds);
  m.smiles_source_ = std::move(smiles_source);
  m.build_adjacency();
  return m;
}

void Molecule::build_adjacency() {
  adj_.assign(atoms_.size(), {});
  for (const Bond &b: bonds_) {
    adj_[b.a].push_back({ b.b, b.order });
    adj_[b.b].push_back({ b.a, b.order });
  }
}

std::vector<std::string> element_multiset(const Molecule &m) {
  std::vector<std::string> out;
  out.reserve(m.atoms().size());
  for (const Atom &a: m.atoms()) {
    out.push_back(a.element);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace synthroute::chem
