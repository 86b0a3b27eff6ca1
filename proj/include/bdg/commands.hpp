#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "bdg/group.hpp"

namespace bdg {

// Shared options for the CLI commands. The effective enumeration gate is
// kDefaultEnumerationGate, overridden by gate_override (the BDG_MAX_P
// environment variable), overridden by allow_large (which raises it to the
// hard maximum).
struct CommandOptions {
  std::string format = "text";  // "text" | "json" | "dot" (dot: graph only)
  bool allow_large = false;
  std::optional<std::uint32_t> gate_override;
};

std::uint32_t effective_gate(const CommandOptions& opts);

// Parses BDG_MAX_P. Throws std::invalid_argument if set but unparsable.
std::optional<std::uint32_t> gate_from_env();

// Exit-code contract for all commands: 0 success/verified, 1 verification
// failure or gate refusal, 2 invalid input. Output is deterministic:
// identical inputs produce byte-identical documents.
int run_verify(std::uint32_t p, const CommandOptions& opts, std::ostream& out,
               std::ostream& err);

int run_classes(std::uint32_t p, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

struct GraphSource {
  std::optional<std::set<std::uint64_t>> sizes;
  std::optional<std::uint32_t> p;
  std::optional<std::string> table_path;
};

int run_graph(const GraphSource& source, const CommandOptions& opts, std::ostream& out,
              std::ostream& err);

}  // namespace bdg
