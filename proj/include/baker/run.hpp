#pragma once

#include <string>

#include "baker/config.hpp"
#include "baker/io.hpp"

namespace baker {

struct RunOutput {
  Transcript transcript;
  CertificateBundle certificates;
  std::string alice_name;
  std::string bob_name;
};

/// Plays the configured game and gathers every certificate that applies:
/// eliminations for enumerable payoffs (claimed complete for enumeration
/// Bobs), survival for target Alice, the core chain for perfect-Cantor Alice,
/// the bracket for the Cantor game. StrategyFault propagates.
RunOutput execute(const RunSetup& setup);

}  // namespace baker
