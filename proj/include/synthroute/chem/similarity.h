//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_CHEM_SIMILARITY_H_
#define SYNTHROUTE_CHEM_SIMILARITY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "synthroute/chem/molecule.h"

namespace synthroute::chem {

inline constexpr int kDefaultRadius = 2;
inline constexpr int kDefaultFingerprintBits = 2048;
inline constexpr int kDefaultWlIterations = 8;

struct CanonicalKey {
  std::uint64_t value = 0;

  std::string hex() const;
  friend bool operator==(const CanonicalKey &, const CanonicalKey &) = default;
};

// Weisfeiler-Lehman refinement over (element, aromaticity, charge, degree)
// labels with bond orders on the edges, folded into one FNV-1a digest.
CanonicalKey canonical_key(const Molecule &m,
                           int iterations = kDefaultWlIterations);

class Fingerprint {
public:
  // n_bits must be a positive power of two.
  explicit Fingerprint(int n_bits = kDefaultFingerprintBits, int radius = 0);

  int n_bits() const { return n_bits_; }
  int radius() const { return radius_; }

  void set(int bit);
  bool test(int bit) const;
  int count() const;
  std::vector<int> on_bits() const;
  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;

private:
  int n_bits_;
  int radius_;
  std::vector<std::uint64_t> words_;
};

// Circular (Morgan-style) fingerprint: every atom environment of radius
// 0..radius hashes to one bit, hash mod n_bits.
Fingerprint fingerprint(const Molecule &m, int radius = kDefaultRadius,
                        int n_bits = kDefaultFingerprintBits);

// |A & B| / |A | B|; 1.0 when both are empty. Throws kLengthMismatch.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

// Canonical key equality guarded by atom/bond counts and element multisets.
bool same_molecule(const Molecule &a, const Molecule &b);

}  // namespace synthroute::chem

#endif  // SYNTHROUTE_CHEM_SIMILARITY_H_
