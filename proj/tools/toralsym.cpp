// toralsym: exact symmetry / reversibility / orbit analysis of unimodular
// integer matrices (toral automorphisms).
//
// Exit codes: 0 success, 1 parse or usage error, 2 precondition violation,
// 3 internal invariant failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toralsym/report.hpp"

namespace {

using namespace toralsym;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact symmetry and reversibility analysis of toral automorphisms"};
  app.require_subcommand(1);
  std::string format = "human";

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis pipeline");
  std::string analyze_input;
  AnalyzeOptions opt;
  analyze_cmd->add_option("input", analyze_input, "matrix file or - for stdin")->required();
  analyze_cmd->add_option("--orbits", opt.orbit_depth, "compute a_k, c_k up to this depth");
  analyze_cmd->add_flag("--projective", opt.projective, "also search for G M G^-1 = -M^-1");
  analyze_cmd->add_option("--torsion-radius", opt.torsion_radius, "torsion search box radius");
  analyze_cmd->add_option("--reversor-radius", opt.reversor_radius, "reversor search box radius");
  analyze_cmd->add_flag("--allow-nonunimodular", opt.allow_nonunimodular,
                        "accept |det| != 1 input (commutant and weak reversibility only)");
  analyze_cmd->add_option("--format", format, "human | json")
      ->check(CLI::IsMember({"human", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a candidate symmetry or reversor");
  std::string verify_input, candidate_path, mode_name, translation_text;
  verify_cmd->add_option("input", verify_input, "matrix file or -")->required();
  verify_cmd->add_option("--candidate", candidate_path, "candidate matrix file")->required();
  verify_cmd->add_option("--mode", mode_name, "symmetry | reversor | pgl-reversor | weak | affine")
      ->required()
      ->check(CLI::IsMember({"symmetry", "reversor", "pgl-reversor", "weak", "affine"}));
  verify_cmd->add_option("--translation", translation_text, "rational vector a/b,c/d,...");
  verify_cmd->add_option("--format", format, "human | json")
      ->check(CLI::IsMember({"human", "json"}));

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "periodic-point and orbit counts");
  std::string orbits_input;
  int depth = 1;
  orbits_cmd->add_option("input", orbits_input, "matrix file or -")->required();
  orbits_cmd->add_option("--depth", depth, "largest k")->required();
  orbits_cmd->add_option("--format", format, "human | json")
      ->check(CLI::IsMember({"human", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (analyze_cmd->parsed()) {
    IntMatrix m = parse_matrix(slurp(analyze_input));
    AnalysisReport rep = analyze(m, opt);
    if (format == "json")
      std::cout << report_to_json(rep).dump(2) << "\n";
    else
      std::cout << report_to_human(rep);
    return 0;
  }
  if (verify_cmd->parsed()) {
    IntMatrix m = parse_matrix(slurp(verify_input));
    IntMatrix g = parse_matrix(slurp(candidate_path));
    if (g.dim() != m.dim()) throw dimension_error("candidate dimension differs from input");
    VerifyMode mode = VerifyMode::symmetry;
    if (mode_name == "reversor") mode = VerifyMode::reversor;
    if (mode_name == "pgl-reversor") mode = VerifyMode::pgl_reversor;
    if (mode_name == "weak") mode = VerifyMode::weak;
    if (mode_name == "affine") mode = VerifyMode::affine;
    std::optional<TorusPoint> t;
    if (mode == VerifyMode::affine) {
      if (translation_text.empty())
        throw std::invalid_argument("affine mode requires --translation");
      t = parse_translation(translation_text, m.dim());
    }
    VerifyResult res = verify_candidate(m, g, mode, t);
    if (format == "json")
      std::cout << verify_to_json(res).dump(2) << "\n";
    else
      std::cout << verify_to_human(res);
    return 0;
  }
  if (orbits_cmd->parsed()) {
    IntMatrix m = parse_matrix(slurp(orbits_input));
    if (depth < 1) throw std::invalid_argument("orbit depth must be >= 1");
    if (!is_unimodular(m))
      throw unimodularity_error("orbits: unimodular input required");
    std::vector<OrbitRow> rows = orbit_table(m, depth);
    if (format == "json")
      std::cout << orbits_to_json(m, rows, depth).dump(2) << "\n";
    else
      std::cout << orbits_to_human(rows, m, depth);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const toralsym::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const toralsym::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const toralsym::unimodularity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
