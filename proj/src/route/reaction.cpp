//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/route/reaction.h"

#include <cmath>
#include <utility>

#include "synthroute/error.h"

namespace synthroute::route {
namespace {

void check_measurements(double yield, double duration_hours) {
  if (!(yield > 0.0 && yield <= 1.0)) {
    throw Error(ErrorCode::kInvalidRecord,
                "yield must be a fraction in (0, 1], got "
                    + std::to_string(yield));
  }
  if (!(duration_hours >= 0.0) || !std::isfinite(duration_hours)) {
    throw Error(ErrorCode::kInvalidRecord,
                "duration must be a finite non-negative number of hours");
  }
}

}  // namespace

void DifficultyAnnotation::validate() const {
  for (int tier: { material, operation, equipment }) {
    if (tier < 1 || tier > 3) {
      throw Error(ErrorCode::kInvalidRecord,
                  "difficulty tiers must be 1, 2 or 3");
    }
  }
}

ReactionRecord::ReactionRecord(chem::Molecule reactant,
                               chem::Molecule product, double yield,
                               double duration_hours,
                               ReactionConditions conditions,
                               std::string source_doi)
    : reactant_(std::move(reactant)), product_(std::move(product)),
      yield_(yield), duration_hours_(duration_hours),
      conditions_(std::move(conditions)), source_doi_(std::move(source_doi)) {
  check_measurements(yield, duration_hours);
}

void ReactionRecord::set_measurements(double yield, double duration_hours) {
  check_measurements(yield, duration_hours);
  yield_ = yield;
  duration_hours_ = duration_hours;
}

void ReactionRecord::set_context_relevancy(std::optional<double> value) {
  if (value && !(*value >= 0.0 && *value <= 1.0)) {
    throw Error(ErrorCode::kInvalidRecord,
                "context relevancy must lie in [0, 1]");
  }
  context_relevancy_ = value;
}

void ReactionRecord::set_difficulty(
    std::optional<DifficultyAnnotation> annotation) {
  if (annotation) {
    annotation->validate();
  }
  difficulty_ = std::move(annotation);
}

}  // namespace synthroute::route
