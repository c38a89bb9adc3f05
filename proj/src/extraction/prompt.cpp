//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/extraction/prompt.h"

#include "synthroute/error.h"

namespace synthroute::extraction {

std::string build_prompt(std::string_view reactant,
                         std::string_view expected_reaction,
                         std::span<const std::string> context) {
  if (reactant.empty() || expected_reaction.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "prompt needs a reactant and an expected reaction");
  }
  std::string p;
  p += "You are an expert chemist. This document describes the synthetic "
       "route or synthetic reaction of the ";
  p += reactant;
  p += ".\n";
  p += "Find the information of the specific reaction ";
  p += expected_reaction;
  p += " and the reactant of the reaction must be ";
  p += reactant;
  p += ".\n";
  p += "Your final answer should be a structured JSON format including these "
       "items: reactants, products, solvent, reagent, catalysts, duration, "
       "instruments, operation, and yield. The answer should be \"null\" if "
       "you cannot find the expected reaction.\n";
  for (std::size_t i = 0; i < context.size(); ++i) {
    p += "\nContext ";
    p += std::to_string(i + 1);
    p += ":\n";
    p += context[i];
    p += '\n';
  }
  return p;
}

}  // namespace synthroute::extraction
