//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_ROUTE_REACTION_H_
#define SYNTHROUTE_ROUTE_REACTION_H_

#include <optional>
#include <string>

#include "synthroute/chem/molecule.h"

namespace synthroute::route {

// Tier 1 = challenging, 2 = moderate, 3 = simple.
struct DifficultyAnnotation {
  int material = 2;
  int operation = 2;
  int equipment = 2;
  std::string note;

  // Throws kInvalidRecord unless every tier is in 1..3.
  void validate() const;

  friend bool operator==(const DifficultyAnnotation &,
                         const DifficultyAnnotation &) = default;
};

struct ReactionConditions {
  std::string solvent;
  std::string reagent;
  std::string catalysts;
  std::string instruments;
  std::string operation;
  std::string purification;

  friend bool operator==(const ReactionConditions &,
                         const ReactionConditions &) = default;
};

// One extracted reaction step. Yield is a fraction in (0, 1], duration is in
// decimal hours; both are checked on construction.
class ReactionRecord {
public:
  ReactionRecord(chem::Molecule reactant, chem::Molecule product,
                 double yield, double duration_hours,
                 ReactionConditions conditions = {},
                 std::string source_doi = {});

  const chem::Molecule &reactant() const { return reactant_; }
  const chem::Molecule &product() const { return product_; }
  double yield() const { return yield_; }
  double duration_hours() const { return duration_hours_; }
  const ReactionConditions &conditions() const { return conditions_; }
  const std::string &source_doi() const { return source_doi_; }

  const std::optional<double> &context_relevancy() const {
    return context_relevancy_;
  }
  const std::optional<DifficultyAnnotation> &difficulty() const {
    return difficulty_;
  }

  void set_measurements(double yield, double duration_hours);
  void set_context_relevancy(std::optional<double> value);
  void set_difficulty(std::optional<DifficultyAnnotation> annotation);

private:
  chem::Molecule reactant_;
  chem::Molecule product_;
  double yield_;
  double duration_hours_;
  ReactionConditions conditions_;
  std::string source_doi_;
  std::optional<double> context_relevancy_;
  std::optional<DifficultyAnnotation> difficulty_;
};

}  // namespace synthroute::route

#endif  // SYNTHROUTE_ROUTE_REACTION_H_
