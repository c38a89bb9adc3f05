//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CHEM_SMILES_H_
#define SYNTHROUTE_CHEM_SMILES_H_

#include <string>
#include <string_view>

#include "synthroute/chem/molecule.h"

namespace synthroute::chem {

// Parses the organic-subset SMILES dialect: bare B C N O P S F Cl Br I and
// their aromatic lowercase forms, bracket atoms with H count and charge,
// bonds - = # :, branches, ring closures (digits and %nn), and '.'
// component separators. Stereo (/ \ @) and isotope labels are accepted and
// dropped; Molecule::stereo_ignored() reports it.
//
// Throws Error with kEmptyInput, kUnmatchedRing, kUnbalancedParen,
// kUnknownAtomSymbol or kInvalidSmiles.
Molecule parse_smiles(std::string_view text);

// Writes a SMILES string that reparses to an isomorphic graph.
std::string write_smiles(const Molecule &m);

}  // namespace synthroute::chem

#endif  // SYNTHROUTE_CHEM_SMILES_H_
