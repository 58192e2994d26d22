#pragma once

#include <iosfwd>

#include "p3/closure.hpp"
#include "p3/graph.hpp"
#include "p3/grundy.hpp"

namespace p3 {

struct PlayOptions {
  Variant variant = Variant::kFree;
  bool human_first = true;
  EngineOptions engine;
};

// Text session between a human on `in` and the engine. The human types a
// vertex id, "moves" for the legal list, or "quit". Returns the process exit
// code (0 for a finished or quit session).
int play_session(const Graph& g, const PlayOptions& options, std::istream& in, std::ostream& out);

}  // namespace p3
