#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "arcmatch/arc_string.hpp"

namespace arcmatch {

struct InstanceOptions {
  int32_t length = 0;
  int32_t arc_target = 0;  // attempted; capped by available room
  bool outer_arc = false;  // reserve (1, length) before placing the rest
  std::string alphabet = "ACGU";
};

// Draws a random nested instance: bases uniform over the alphabet, arcs
// placed by repeatedly splitting unoccupied runs, so nesting holds by
// construction.
ArcAnnotatedString random_instance(const InstanceOptions& options,
                                   std::mt19937_64& rng);

}  // namespace arcmatch
