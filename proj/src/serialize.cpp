#include "veronormal/serialize.hpp"

#include <fstream>
#include <sstream>

#include "veronormal/errors.hpp"

namespace veronormal {

json rat_json(const Rat& r) { return to_string(r); }

json big_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const GradedMap& f) {
  json entries = json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(to_string(f.entry(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"numVars", f.num_vars()},
          {"sourceTwists", f.source_twists()},
          {"targetTwists", f.target_twists()},
          {"entries", std::move(entries)}};
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

}  // namespace

GradedMap graded_map_from_json(const json& j) {
  const int k = field<int>(j, "numVars");
  const auto src = field<std::vector<int>>(j, "sourceTwists");
  const auto tgt = field<std::vector<int>>(j, "targetTwists");
  const auto entries = field<std::vector<std::vector<std::string>>>(j, "entries");
  if (k < 1) throw FormatError("numVars must be positive");
  if (entries.size() != tgt.size()) throw FormatError("entries: row count does not match targetTwists");
  GradedMap f(k, src, tgt);
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    if (entries[i].size() != src.size()) throw FormatError("entries: column count does not match sourceTwists");
    for (std::size_t j2 = 0; j2 < src.size(); ++j2) {
      HomPoly p = parse_poly(entries[i][j2], k);
      try {
        f.set_entry(i, j2, std::move(p));
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
    }
  }
  return f;
}

json to_json(const CurveParam& c) {
  json forms = json::array();
  for (const auto& f : c.forms) forms.push_back(to_string(f));
  return {{"degree", c.degree}, {"forms", std::move(forms)}};
}

CurveParam curve_from_json(const json& j) {
  CurveParam c;
  c.degree = field<int>(j, "degree");
  if (c.degree < 1) throw FormatError("curve degree must be at least 1");
  for (const auto& s : field<std::vector<std::string>>(j, "forms")) {
    HomPoly f = parse_poly(s, 2, c.degree);
    if (!f.is_zero() && f.degree() != c.degree) throw FormatError("curve form '" + s + "' has the wrong degree");
    c.forms.push_back(std::move(f));
  }
  if (c.forms.size() < 2) throw FormatError("curve needs at least two forms");
  try {
    check_base_point_free(c);
  } catch (const MathError& e) {
    throw FormatError(std::string("invalid curve: ") + e.what());
  }
  return c;
}

json to_json(const SplittingType& st) {
  return {{"degrees", st.degrees}, {"rank", st.rank()}, {"degree", st.degree()}};
}

json to_json(const GrauertMulichReport& rep) {
  return {{"spread_ok", rep.spread_ok},         {"sum_ok", rep.sum_ok},
          {"rank_ok", rep.rank_ok},             {"degrees", rep.degrees},
          {"expected_sum", big_json(rep.expected_sum)}, {"expected_rank", big_json(rep.expected_rank)}};
}

json to_json(const KBundleStats& k) {
  return {{"i", k.i}, {"rank", big_json(k.rank)}, {"degree", big_json(k.degree)}, {"slope", rat_json(k.slope)}};
}

json to_json(const ChowClass& c) {
  json out = json::array();
  for (const auto& x : c.coeffs()) out.push_back(rat_json(x));
  return out;
}

json to_json(const HilbertPoly& p) {
  json alpha = json::array();
  json power = json::array();
  for (const auto& a : p.alpha()) alpha.push_back(rat_json(a));
  for (const auto& c : p.power_coeffs()) power.push_back(rat_json(c));
  return {{"alpha", std::move(alpha)}, {"power_coeffs", std::move(power)}};
}

json to_json(const DualIdentityReport& rep) {
  json rows = json::array();
  json cols = json::array();
  for (const auto& r : rep.row_scale) rows.push_back(rat_json(r));
  for (const auto& c : rep.col_scale) cols.push_back(rat_json(c));
  json out = {{"holds", rep.holds},
              {"uniform", rep.uniform},
              {"row_scale", std::move(rows)},
              {"col_scale", std::move(cols)},
              {"diagnostic", rep.diagnostic}};
  if (rep.uniform) out["uniform_factor"] = rat_json(rep.uniform_factor);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("write failed for '" + path + "'");
}

}  // namespace veronormal
