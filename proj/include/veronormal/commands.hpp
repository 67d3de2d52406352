#pragma once

// The CLI subcommands as library functions returning their JSON documents.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace veronormal {

struct CurveSpec {
  std::string kind = "line";  // line | rnc | file
  std::uint64_t seed = 0;
  std::string path;           // for kind == "file"
};

// Seed used when --seed is absent: $VERONORMAL_SEED if set, else 0.
std::uint64_t default_seed();

nlohmann::json cmd_normal(int n, int d);

// Sample k uses seed + k (random_line or rnc); a file curve is one sample.
nlohmann::json cmd_restrict(int n, int d, const CurveSpec& curve, int samples);

nlohmann::json cmd_slopes(int n, int d);

// Human-readable view of a command's JSON output.
std::string render_table(const std::string& command, const nlohmann::json& out);

}  // namespace veronormal
