#pragma once

// JSON encodings shared by the CLI, the golden files and the Python module.
//
//   GradedMap:     {"numVars", "sourceTwists", "targetTwists", "entries": [[poly]]}
//   CurveParam:    {"degree", "forms": [poly]}
//   SplittingType: {"degrees", "rank", "degree"}
//   GM report:     {"spread_ok", "sum_ok", "rank_ok", "degrees",
//                   "expected_sum", "expected_rank"}
//
// Polynomials are strings in the format of to_string(HomPoly); rationals are
// strings "p/q" (or "p").

#include <string>

#include <json.hpp>

#include "veronormal/chow.hpp"
#include "veronormal/gradedmap.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

using json = nlohmann::json;

json rat_json(const Rat& r);
json big_json(const BigInt& z);  // number when it fits in 64 bits, else string

json to_json(const GradedMap& f);
GradedMap graded_map_from_json(const json& j);

json to_json(const CurveParam& c);
CurveParam curve_from_json(const json& j);

json to_json(const SplittingType& st);
json to_json(const GrauertMulichReport& rep);
json to_json(const KBundleStats& k);
json to_json(const ChowClass& c);
json to_json(const HilbertPoly& p);
json to_json(const DualIdentityReport& rep);

// Reads and parses a JSON file; FormatError on any failure.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace veronormal
