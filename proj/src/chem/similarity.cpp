//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/chem/similarity.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <utility>

#include "synthroute/error.h"
#include "synthroute/hash.h"

namespace synthroute::chem {
namespace {

std::vector<std::uint64_t> initial_labels(const Molecule &m) {
  std::vector<std::uint64_t> labels;
  labels.reserve(m.atoms().size());
  for (int i = 0; i < m.atom_count(); ++i) {
    const Atom &a = m.atoms()[i];
    labels.push_back(Fnv1a()
                         .add(a.element)
                         .add(static_cast<std::uint64_t>(a.aromatic))
                         .add(static_cast<std::uint64_t>(a.charge))
                         .add(m.adjacency()[i].size())
                         .digest());
  }
  return labels;
}

// One refinement round: each label absorbs the sorted (bond order, neighbor
// label) codes of its neighborhood.
std::vector<std::uint64_t> refine(const Molecule &m,
                                  const std::vector<std::uint64_t> &labels,
                                  std::uint64_t round) {
  std::vector<std::uint64_t> next(labels.size());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> codes;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    codes.clear();
    for (const auto &nb: m.adjacency()[i]) {
      codes.emplace_back(static_cast<std::uint64_t>(nb.order),
                         labels[nb.atom]);
    }
    std::sort(codes.begin(), codes.end());
    Fnv1a h;
    h.add(round).add(labels[i]);
    for (const auto &[order, label]: codes) {
      h.add(order).add(label);
    }
    next[i] = h.digest();
  }
  return next;
}

}  // namespace

std::string CanonicalKey::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

CanonicalKey canonical_key(const Molecule &m, int iterations) {
  Fnv1a digest;
  digest.add(static_cast<std::uint64_t>(m.atom_count()))
      .add(static_cast<std::uint64_t>(m.bond_count()));

  auto fold = [&digest](std::vector<std::uint64_t> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::uint64_t l: labels) {
      digest.add(l);
    }
  };

  std::vector<std::uint64_t> labels = initial_labels(m);
  fold(labels);
  for (int it = 1; it <= iterations; ++it) {
    labels = refine(m, labels, static_cast<std::uint64_t>(it));
    fold(labels);
  }
  return { digest.digest() };
}

Fingerprint::Fingerprint(int n_bits, int radius)
    : n_bits_(n_bits), radius_(radius) {
  if (n_bits <= 0 || !std::has_single_bit(static_cast<unsigned>(n_bits))) {
    throw Error(ErrorCode::kInvalidArgument,
                "fingerprint length must be a power of two");
  }
  words_.assign((n_bits + 63) / 64, 0);
}

void Fingerprint::set(int bit) {
  words_[bit / 64] |= std::uint64_t { 1 } << (bit % 64);
}

bool Fingerprint::test(int bit) const {
  return ((words_[bit / 64] >> (bit % 64)) & 1U) != 0;
}

int Fingerprint::count() const {
  int c = 0;
  for (std::uint64_t w: words_) {
    c += std::popcount(w);
  }
  return c;
}

std::vector<int> Fingerprint::on_bits() const {
  std::vector<int> out;
  for (int i = 0; i < n_bits_; ++i) {
    if (test(i)) {
      out.push_back(i);
    }
  }
  return out;
}

Fingerprint fingerprint(const Molecule &m, int radius, int n_bits) {
  if (radius < 0) {
    throw Error(ErrorCode::kInvalidArgument, "radius must be >= 0");
  }
  Fingerprint fp(n_bits, radius);
  const auto mask = static_cast<std::uint64_t>(n_bits - 1);

  std::vector<std::uint64_t> env = initial_labels(m);
  for (int r = 0;; ++r) {
    for (std::uint64_t id: env) {
      fp.set(static_cast<int>(id & mask));
    }
    if (r == radius) {
      break;
    }
    env = refine(m, env, static_cast<std::uint64_t>(r + 1));
  }
  return fp;
}

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  if (a.n_bits() != b.n_bits()) {
    throw Error(ErrorCode::kLengthMismatch,
                "fingerprint lengths differ: " + std::to_string(a.n_bits())
                    + " vs " + std::to_string(b.n_bits()));
  }
  int inter = 0;
  int uni = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    inter += std::popcount(a.words()[i] & b.words()[i]);
    uni += std::popcount(a.words()[i] | b.words()[i]);
  }
  if (uni == 0) {
    return 1.0;
  }
  return static_cast<double>(inter) / uni;
}

bool same_molecule(const Molecule &a, const Molecule &b) {
  if (a.atom_count() != b.atom_count() || a.bond_count() != b.bond_count()) {
    return false;
  }
  if (canonical_key(a) != canonical_key(b)) {
    return false;
  }
  return element_multiset(a) == element_multiset(b);
}

}  // namespace synthroute::chem
