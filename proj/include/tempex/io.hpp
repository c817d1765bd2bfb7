#pragma once
// Plain-text instance and walk files.
//
// Instance ("tgf 1"):
//   tgf 1
//   n <n>
//   T <T>
//   [gen <spec-string> [seed <seed>]]
//   snapshot <t>
//   <u> <v>
//   ...
//   end
//   ...
//
// A file whose gen line fully determines the instance may omit the snapshot
// blocks. If both are present the body wins and a warning goes to stderr.
// Snapshots absent from a dense file are empty. Writing is canonical:
// procedural instances keep only their gen line, dense instances list every
// snapshot with sorted edges, so write/parse round-trips are byte-identical.
//
// Walk ("walk 1"): header, "start <t>", then one vertex id per line.

#include <string>
#include <string_view>

#include "tempex/graph.hpp"

namespace tempex::io {

TemporalGraph parse_instance(std::string_view text);
std::string write_instance(const TemporalGraph& g);

TemporalWalk parse_walk(std::string_view text);
std::string write_walk(const TemporalWalk& walk);

TemporalGraph load_instance(const std::string& path);
void save_instance(const TemporalGraph& g, const std::string& path);
TemporalWalk load_walk(const std::string& path);
void save_walk(const TemporalWalk& walk, const std::string& path);

}  // namespace tempex::io
