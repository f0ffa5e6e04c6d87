/* Command line front end: compute runs the whole pipeline on a relation
 * matrix or point configuration, validate grades a pattern file,
 * kasteleyn and render expose the bipartite matrix and its drawing, and
 * oracle prints independent reference values.
 *
 * Exit codes: 0 on success, 2 for rejected input, 1 for everything else. */

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "adet/jsonio.hpp"
#include "adet/kasteleyn.hpp"
#include "adet/newton.hpp"
#include "adet/oracle.hpp"

namespace {

using namespace adet;

int cmd_compute(const std::string& in_path, const std::string& out_path,
                const std::string& trace_dir, bool keep_u) {
  ComputeInput input = compute_input_from_json(load_json_file(in_path));
  ComputeResult res = principal_adet(input.ba);

  if (!trace_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(trace_dir, ec);
    if (ec) fail(Errc::BadInput, "cannot create " + trace_dir + ": " + ec.message());
    for (const TraceStep& step : res.rr.trace)
      write_text_file(trace_dir + "/" + step.name + ".json",
                      pattern_to_json(step.pat).dump(2) + "\n");
  }

  const int iterations = (int(res.rr.trace.size()) - 1) / 2;
  std::cout << "relation columns: " << res.ba.cols() << "\n";
  std::cout << "iterations: " << iterations << "\n";
  std::cout << "final pattern: " << res.rr.final.p() << " zigzags, " << res.rr.final.points()
            << " crossings\n";
  for (const ProvenanceEntry& pe : res.rr.prov) {
    std::cout << "u" << pe.bz_col + 1 << " = ";
    if (pe.multiplier != 1) std::cout << pe.multiplier.get_str() << "*";
    std::cout << "v" << pe.ba_col + 1 << "\n";
  }
  std::cout << "principal determinant:\n" << res.adet.str() << "\n";

  NewtonReport nr = newton_polygon_check(res.detK_u, res.rr.final.B);
  std::cout << "newton self-check: " << (nr.pass ? "ok" : errc_name(Errc::CheckFailed)) << " ("
            << nr.note << ")\n";

  if (nr.pass && !out_path.empty()) {
    Json out = Json{{"principal_adet", poly_to_json(res.adet)}};
    if (keep_u) out["u_form"] = poly_to_json(res.det_u);
    out["provenance"] = provenance_to_json(res.rr.prov);
    write_text_file(out_path, out.dump(2) + "\n");
  }
  return nr.pass ? 0 : 1;
}

int cmd_validate(const std::string& pat_path, const std::string& level_str) {
  Pattern pat = pattern_from_json(load_json_file(pat_path));
  Level level = Level::VeryGood;
  if (level_str == "basic") level = Level::Basic;
  if (level_str == "good") level = Level::Good;
  Report rep = validate(pat, level);
  for (const ConditionResult& c : rep.conditions) {
    if (c.pass)
      std::cout << "[PASS] " << c.name << "\n";
    else
      std::cout << "[FAIL] " << c.name << ": " << c.detail << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_kasteleyn(const std::string& pat_path, bool complement) {
  Pattern pat = pattern_from_json(load_json_file(pat_path));
  Kasteleyn k = build_K(pat);
  if (complement) k = complement_K(k);
  std::cout << kasteleyn_to_json(k).dump(2) << "\n";
  return 0;
}

int cmd_oracle(const std::string& kind) {
  if (kind != "cubic") fail(Errc::BadInput, "unknown reference \"" + kind + "\"");
  std::cout << univariate_adet_oracle(3).str() << "\n";
  return 0;
}

int cmd_render(const std::string& pat_path, const std::string& svg_path) {
  Pattern pat = pattern_from_json(load_json_file(pat_path));
  write_text_file(svg_path, render_svg(pat));
  std::cout << "wrote " << svg_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal determinant of a two-row relation matrix via zigzag patterns"};
  app.require_subcommand(1);

  std::string in_path, out_path, trace_dir;
  bool keep_u = false;
  CLI::App* compute = app.add_subcommand("compute", "run the full pipeline on an input file");
  compute->add_option("--input", in_path, "JSON file with \"B\" or \"A\"")->required();
  compute->add_option("--output", out_path, "write the result as JSON");
  compute->add_option("--trace", trace_dir, "directory for the intermediate patterns");
  compute->add_flag("--keep-u", keep_u, "include the intermediate u form in the output");

  std::string val_path, level_str = "verygood";
  CLI::App* val = app.add_subcommand("validate", "grade a pattern file condition by condition");
  val->add_option("--pattern", val_path, "pattern JSON file")->required();
  val->add_option("--level", level_str, "basic, good or verygood")
      ->check(CLI::IsMember({"basic", "good", "verygood"}));

  std::string kast_path;
  bool complement = false;
  CLI::App* kast = app.add_subcommand("kasteleyn", "print the bipartite matrix as JSON");
  kast->add_option("--pattern", kast_path, "pattern JSON file")->required();
  kast->add_flag("--complement", complement, "print the complement matrix instead");

  std::string oracle_kind;
  CLI::App* orc = app.add_subcommand("oracle", "print an independent reference value");
  orc->add_option("kind", oracle_kind, "which reference (cubic)")->required();

  std::string render_path, svg_path;
  CLI::App* ren = app.add_subcommand("render", "draw the crossing graph as an SVG");
  ren->add_option("--pattern", render_path, "pattern JSON file")->required();
  ren->add_option("--svg", svg_path, "output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(in_path, out_path, trace_dir, keep_u);
    if (val->parsed()) return cmd_validate(val_path, level_str);
    if (kast->parsed()) return cmd_kasteleyn(kast_path, complement);
    if (orc->parsed()) return cmd_oracle(oracle_kind);
    if (ren->parsed()) return cmd_render(render_path, svg_path);
  } catch (const adet::Error& e) {
    std::cerr << e.what() << "\n";
    return errc_is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
