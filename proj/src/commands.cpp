#include "veronormal/commands.hpp"

#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>

#include "veronormal/chow.hpp"
#include "veronormal/curves.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/restrict.hpp"
#include "veronormal/serialize.hpp"
#include "veronormal/veronese.hpp"

namespace veronormal {

std::uint64_t default_seed() {
  const char* env = std::getenv("VERONORMAL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw FormatError(std::string("VERONORMAL_SEED is not an unsigned integer: ") + env);
  return v;
}

json cmd_normal(int n, int d) {
  if (n < 1) throw MathError("n must be at least 1");
  const VeroneseContext ctx(n, d);
  const GradedMap pres = normal_presentation(ctx);
  const BundleStats st = normal_stats(ctx);
  const HilbertPoly hp = hilbert_poly(pres);
  const BundleStats from_hp = stats_from_hilbert(hp, n);
  if (from_hp.rank != st.rank || from_hp.degree != st.degree)
    throw MathError("Hilbert polynomial disagrees with the Chern closed forms");

  return {{"schema", "veronormal.normal/1"},
          {"n", n},
          {"d", d},
          {"presentation", to_json(pres)},
          {"rank", big_json(st.rank.get_num())},
          {"degree", big_json(st.degree.get_num())},
          {"slope", rat_json(st.slope)},
          {"hilbert_polynomial", to_json(hp)},
          {"chern", to_json(chern_normal(ctx))}};
}

namespace {

json curve_spec_json(const CurveSpec& c, std::uint64_t seed) {
  json j = {{"kind", c.kind}};
  if (c.kind == "file")
    j["path"] = c.path;
  else
    j["seed"] = seed;
  return j;
}

}  // namespace

json cmd_restrict(int n, int d, const CurveSpec& curve, int samples) {
  if (n < 1) throw MathError("n must be at least 1");
  if (samples < 1) throw MathError("samples must be at least 1");
  if (curve.kind != "line" && curve.kind != "rnc" && curve.kind != "file")
    throw FormatError("unknown curve kind '" + curve.kind + "' (expected line, rnc or file)");
  const VeroneseContext ctx(n, d);

  std::vector<CurveParam> curves;
  std::vector<std::uint64_t> seeds;
  if (curve.kind == "file") {
    CurveParam c = curve_from_json(read_json_file(curve.path));
    if (static_cast<int>(c.forms.size()) != n + 1)
      throw FormatError("curve file " + curve.path + " has " + std::to_string(c.forms.size()) +
                        " forms, expected " + std::to_string(n + 1));
    curves.push_back(std::move(c));
    seeds.push_back(0);
  } else {
    for (int k = 0; k < samples; ++k) {
      const std::uint64_t seed = curve.seed + static_cast<std::uint64_t>(k);
      curves.push_back(curve.kind == "line" ? random_line(n, seed) : rnc(n, seed));
      seeds.push_back(seed);
    }
  }

  // Samples are independent; results are collected in index order.
  std::vector<std::future<SplittingType>> jobs;
  for (const auto& c : curves)
    jobs.push_back(std::async(std::launch::async, [&ctx, &c] { return restrict_normal(ctx, c); }));

  json list = json::array();
  bool identical = true;
  SplittingType first;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const SplittingType st = jobs[k].get();
    if (k == 0)
      first = st;
    else if (!(st == first))
      identical = false;
    json item = {{"index", k},
                 {"curve", curve_spec_json(curve, seeds[k])},
                 {"parametrization", to_json(curves[k])},
                 {"splitting", to_json(st)},
                 {"gm", to_json(gm_check(st, ctx, curves[k].degree))}};
    list.push_back(std::move(item));
  }
  return {{"schema", "veronormal.restrict/1"},
          {"n", n},
          {"d", d},
          {"curve", curve_spec_json(curve, curve.seed)},
          {"samples", std::move(list)},
          {"all_identical", identical}};
}

json cmd_slopes(int n, int d) {
  if (n < 1) throw MathError("n must be at least 1");
  const VeroneseContext ctx(n, d);
  json rows = json::array();
  bool increasing = true;
  Rat prev;
  for (int i = 1; i <= d + 1; ++i) {
    const KBundleStats k = k_bundle_stats(ctx, i);
    if (i > 1 && !(prev < k.slope)) increasing = false;
    prev = k.slope;
    rows.push_back(to_json(k));
  }
  const bool ok = increasing && prev == 0;
  return {{"schema", "veronormal.slopes/1"},
          {"n", n},
          {"d", d},
          {"rows", std::move(rows)},
          {"monotone", ok ? "pass" : "fail"}};
}

namespace {

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string join(const json& arr) {
  std::string out;
  for (const auto& x : arr) out += (out.empty() ? "" : " ") + scalar(x);
  return out;
}

}  // namespace

std::string render_table(const std::string& command, const json& out) {
  std::ostringstream os;
  if (command == "normal") {
    os << "normal bundle of the degree-" << out["d"] << " Veronese of P^" << out["n"] << "\n";
    os << "  rank    " << scalar(out["rank"]) << "\n";
    os << "  degree  " << scalar(out["degree"]) << "\n";
    os << "  slope   " << scalar(out["slope"]) << "\n";
    os << "  chern   " << join(out["chern"]) << "\n";
    os << "  hilbert alpha " << join(out["hilbert_polynomial"]["alpha"]) << "\n";
    const auto& p = out["presentation"];
    os << "  presentation O(" << join(p["sourceTwists"]) << ") -> O(" << p["targetTwists"][0] << ")^"
       << p["targetTwists"].size() << "\n";
  } else if (command == "restrict") {
    os << std::left << std::setw(7) << "index" << std::setw(8) << "seed" << std::setw(8) << "gm" << "splitting\n";
    for (const auto& s : out["samples"]) {
      const std::string seed = s["curve"].contains("seed") ? s["curve"]["seed"].dump() : "-";
      const bool gm = s["gm"]["spread_ok"].get<bool>() && s["gm"]["sum_ok"].get<bool>() &&
                      s["gm"]["rank_ok"].get<bool>();
      os << std::setw(7) << s["index"].dump() << std::setw(8) << seed << std::setw(8) << (gm ? "ok" : "FAIL")
         << join(s["splitting"]["degrees"]) << "\n";
    }
    os << "all samples identical: " << (out["all_identical"].get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "slopes") {
    os << std::left << std::setw(4) << "i" << std::setw(12) << "rank" << std::setw(12) << "degree" << "slope\n";
    for (const auto& r : out["rows"])
      os << std::setw(4) << r["i"].dump() << std::setw(12) << scalar(r["rank"]) << std::setw(12)
         << scalar(r["degree"]) << scalar(r["slope"]) << "\n";
    os << "monotone: " << scalar(out["monotone"]) << "\n";
  } else if (command == "verify") {
    for (const auto& c : out["checks"])
      os << std::left << std::setw(5) << scalar(c["status"]) << " " << std::setw(36) << scalar(c["id"]) << std::right
         << std::fixed << std::setprecision(2) << std::setw(9) << c["seconds"].get<double>() << " s  "
         << scalar(c["detail"]) << "\n";
    os << (out["passed"].get<bool>() ? "all checks passed" : "verification FAILED") << "\n";
    os << "note: " << scalar(out["note"]) << "\n";
  } else {
    os << out.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace veronormal
