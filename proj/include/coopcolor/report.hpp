#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coopcolor/graph_system.hpp"

namespace coopcolor {

enum class Outcome { Colorable, Uncolorable, BudgetExceeded };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Colorable: return "colorable";
    case Outcome::Uncolorable: return "uncolorable";
    case Outcome::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

struct SolveReport {
  Outcome outcome = Outcome::BudgetExceeded;
  std::optional<CooperativeColoring> coloring;  // set iff outcome == Colorable
  std::uint64_t nodes_expanded = 0;
  double elapsed_seconds = 0.0;
};

/// Resampling instrumentation. Round 1 is the initial sample; every later
/// round follows the resampling of exactly one bad event.
struct ResampleStats {
  std::uint64_t rounds = 0;
  std::uint64_t resampled_events = 0;
  std::uint64_t resampled_variables = 0;
  std::vector<std::uint64_t> per_vertex;  // resamplings triggered by each vertex's event
};

struct LllResult {
  SolveReport report;
  ResampleStats stats;
};

}  // namespace coopcolor
