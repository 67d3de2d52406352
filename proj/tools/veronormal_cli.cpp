// veronormal: normal bundles of Veronese embeddings, restricted to rational curves.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid mathematical input,
// 3 I/O or format error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "veronormal/commands.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/serialize.hpp"
#include "veronormal/verify.hpp"

namespace vn = veronormal;

namespace {

void emit(const std::string& command, const vn::json& out, const std::string& format, const std::string& path) {
  const std::string text = format == "table" ? vn::render_table(command, out) : out.dump(2) + "\n";
  if (path.empty())
    std::cout << text;
  else
    vn::write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact splitting types of Veronese normal bundles on rational curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  int n = 0;
  int d = 0;

  auto* normal = app.add_subcommand("normal", "Presentation, rank, degree, slope and Chern class of the normal bundle");
  normal->add_option("--n", n, "Projective dimension")->required();
  normal->add_option("--d", d, "Veronese degree")->required();

  vn::CurveSpec curve;
  int samples = 10;
  std::uint64_t seed = 0;
  auto* restrict_cmd = app.add_subcommand("restrict", "Splitting type of the normal bundle on sampled curves");
  restrict_cmd->add_option("--n", n, "Projective dimension")->required();
  restrict_cmd->add_option("--d", d, "Veronese degree")->required();
  restrict_cmd->add_option("--curve", curve.kind, "Curve kind")->check(CLI::IsMember({"line", "rnc", "file"}));
  restrict_cmd->add_option("--path", curve.path, "Curve file (JSON) for --curve file");
  restrict_cmd->add_option("--samples", samples, "Number of seeded samples");
  auto* seed_opt = restrict_cmd->add_option("--seed", seed, "First seed; defaults to $VERONORMAL_SEED or 0");

  auto* slopes = app.add_subcommand("slopes", "Rank, degree and slope of each K^i_d");
  slopes->add_option("--n", n, "Projective dimension")->required();
  slopes->add_option("--d", d, "Veronese degree")->required();

  std::string scope = "fast";
  std::string golden_dir = vn::default_golden_dir();
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria and golden-file checks");
  verify->add_option("--scope", scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--golden-dir", golden_dir, "Directory holding the pinned golden files");

  std::string write_dir;
  auto* golden = app.add_subcommand("golden", "Regenerate the golden files");
  golden->add_option("--dir", write_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*normal) {
      emit("normal", vn::cmd_normal(n, d), format, out_path);
    } else if (*restrict_cmd) {
      curve.seed = seed_opt->count() ? seed : vn::default_seed();
      if (curve.kind == "file" && curve.path.empty()) throw vn::FormatError("--curve file requires --path");
      emit("restrict", vn::cmd_restrict(n, d, curve, samples), format, out_path);
    } else if (*slopes) {
      emit("slopes", vn::cmd_slopes(n, d), format, out_path);
    } else if (*verify) {
      const vn::Scope sc = vn::parse_scope(scope);
      const auto report = vn::run_verify(sc, golden_dir, [](const vn::CheckResult& c) {
        std::cerr << (c.passed ? "pass " : "FAIL ") << c.id << " (" << c.seconds << " s)";
        if (!c.passed) std::cerr << ": " << c.detail;
        std::cerr << "\n";
      });
      emit("verify", report.to_json(scope), format, out_path);
      if (!report.all_passed()) {
        for (const auto& c : report.checks)
          if (!c.passed) std::cerr << "failed: " << c.id << " " << c.name << ": " << c.detail << "\n";
        return 1;
      }
    } else if (*golden) {
      vn::write_golden_dir(write_dir);
      std::cerr << "wrote " << vn::golden_file_names().size() << " golden files to " << write_dir << "\n";
    }
  } catch (const vn::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vn::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
