//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_EXTRACTION_PROMPT_H_
#define SYNTHROUTE_EXTRACTION_PROMPT_H_

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace synthroute::extraction {

// The keys every structured answer must carry, in prompt order.
inline constexpr std::array<std::string_view, 9> kRequiredKeys {
  "reactants", "products", "solvent",    "reagent", "catalysts",
  "duration",  "instruments", "operation", "yield",
};

inline constexpr std::string_view kStrictnessDirective =
    "Respond with only the JSON object, strictly following the requested "
    "schema.";

// Instruction lines followed by one "Context N:" block per paragraph.
// Throws kInvalidArgument when the reactant or the reaction is empty.
std::string build_prompt(std::string_view reactant,
                         std::string_view expected_reaction,
                         std::span<const std::string> context);

}  // namespace synthroute::extraction

#endif  // SYNTHROUTE_EXTRACTION_PROMPT_H_
