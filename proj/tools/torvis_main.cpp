#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torvis/gen.hpp"
#include "torvis/pipeline.hpp"

namespace fs = std::filesystem;
using namespace torvis;
using ordered_json = nlohmann::ordered_json;

namespace {

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f.good()) fail(ErrorCode::SyntaxError, "cannot write " + path);
  f << content;
}

std::string dumpPathsJson(const PipelineResult& r) {
  ordered_json j = ordered_json::array();
  for (int p = 0; p < r.paths.d; ++p)
    j.push_back(r.paths.pathVertices(p));
  return j.dump(2) + "\n";
}

std::string dumpOrderJson(const PipelineResult& r) {
  ordered_json j;
  j["s"] = r.paths.s;
  j["t"] = r.paths.t;
  j["order"] = r.order.order;
  return j.dump(2) + "\n";
}

std::string dumpCylinderJson(const PipelineResult& r) {
  const CylinderDrawing& c = r.cylinder;
  ordered_json j;
  j["w"] = c.width;
  j["h"] = c.height;
  j["vertices"] = ordered_json::array();
  for (const auto& vs : c.vseg) {
    if (vs.row < 0) continue;
    ordered_json v;
    v["id"] = vs.v;
    v["y"] = vs.row;
    v["x_lo"] = vs.x_lo;
    v["x_hi"] = vs.x_hi;
    j["vertices"].push_back(v);
  }
  j["edges"] = ordered_json::array();
  for (const auto& es : c.eseg) {
    ordered_json e;
    e["copy"] = es.ghat_edge;
    e["x"] = es.x;
    e["y_lo"] = es.row_lo;
    e["y_hi"] = es.row_hi;
    j["edges"].push_back(e);
  }
  j["path_columns"] = c.path_x;
  return j.dump(2) + "\n";
}

ordered_json statsJson(const std::string& file, const PipelineResult& r) {
  ordered_json j;
  j["file"] = file;
  j["surface"] = surfaceName(r.original.map.surface());
  j["n"] = r.original.map.vertexCount();
  j["m"] = r.original.map.edgeCount();
  j["d"] = r.original.d();
  j["columns"] = r.drawing.w;
  j["rows"] = r.drawing.h;
  j["shared_vertices"] = r.drawing.shared_vertices;
  j["column_bound_m_minus_shared"] =
      r.original.map.edgeCount() - r.drawing.shared_vertices;
  int soft = r.original.map.edgeCount() - r.original.map.vertexCount();
  j["soft_target_m_minus_n"] = soft;
  j["meets_soft_target"] = r.drawing.w <= soft;
  return j;
}

int reportValidation(const ValidationReport& rep) {
  std::cout << rep.summary();
  if (!rep.allPass()) {
    std::cerr << "validation failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"visibility representations on the rectangular flat torus "
               "and Klein bottle"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string out_json, out_svg, against;
  std::string dump_paths, dump_order, dump_cylinder, out_dir;
  bool no_compact = false, allow_planar = false;
  bool surface_check = true;
  std::uint64_t seed = 1;
  int count = 1;
  std::string fuzz_surface = "torus";

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("input", inputs, "input file(s)")->required();
    cmd->add_option("-o,--output", out_json, "output JSON path");
    cmd->add_option("--svg", out_svg, "output SVG path");
    cmd->add_flag("--no-compact", no_compact,
                  "skip row/column compaction (cleanup still runs)");
    cmd->add_flag("--allow-planar-fallback", allow_planar,
                  "draw planar embeddings on the cylinder");
    cmd->add_flag("--surface-check,!--no-surface-check", surface_check,
                  "run the validation oracle on the result (default on)");
    cmd->add_option("--dump-paths", dump_paths, "write the path system JSON");
    cmd->add_option("--dump-order", dump_order, "write the st-order JSON");
    cmd->add_option("--dump-cylinder", dump_cylinder,
                    "write the pre-assembly cylinder drawing JSON");
  };

  CLI::App* draw =
      app.add_subcommand("draw", "compute a visibility representation");
  addCommon(draw);
  CLI::App* ortho =
      app.add_subcommand("ortho", "compute an orthogonal point-drawing");
  addCommon(ortho);
  CLI::App* stats = app.add_subcommand("stats", "print grid statistics");
  stats->add_option("input", inputs, "input file(s)")->required();
  stats->add_flag("--allow-planar-fallback", allow_planar, "");
  stats->add_flag("--no-compact", no_compact, "");

  CLI::App* validate =
      app.add_subcommand("validate", "check a drawing JSON against its input");
  validate->add_option("input", inputs, "drawing JSON file(s)")->required();
  validate->add_option("--against", against, "original input file")
      ->required();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "generate random valid inputs and run the pipeline on them");
  fuzz->add_option("--count", count, "number of inputs");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--surface", fuzz_surface, "torus|klein|mixed");
  fuzz->add_option("--out-dir", out_dir,
                   "directory for generated inputs (failures always saved)");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineOptions opt;
    opt.allow_planar_fallback = allow_planar;
    opt.compact = !no_compact;
    opt.validate = surface_check;

    if (draw->parsed() || ortho->parsed() || stats->parsed()) {
      if (inputs.size() > 1 && !out_json.empty()) {
        std::cerr << "-o requires a single input\n";
        return 1;
      }
      ordered_json all_stats = ordered_json::array();
      for (const std::string& in_path : inputs) {
        FlatInput input = loadInputFile(in_path);
        PipelineResult r = runPipeline(input, opt);
        if (!dump_paths.empty()) writeFile(dump_paths, dumpPathsJson(r));
        if (!dump_order.empty()) writeFile(dump_order, dumpOrderJson(r));
        if (!dump_cylinder.empty())
          writeFile(dump_cylinder, dumpCylinderJson(r));

        if (stats->parsed()) {
          all_stats.push_back(statsJson(in_path, r));
          continue;
        }
        if (surface_check && !r.report.allPass()) {
          std::cout << r.report.summary();
          std::cerr << "validation failed for " << in_path << "\n";
          return 3;
        }
        if (draw->parsed()) {
          std::string out = out_json.empty() ? in_path + ".json" : out_json;
          writeFile(out, drawingToJson(r.drawing));
          if (!out_svg.empty()) writeFile(out_svg, renderSVG(r.drawing));
        } else {
          OrthoDrawing od = toOrthogonal(r.drawing, r.original.map);
          ValidationReport orep = validateOrtho(od, r.original);
          if (surface_check && !orep.allPass()) {
            std::cout << orep.summary();
            std::cerr << "orthogonal validation failed for " << in_path
                      << "\n";
            return 3;
          }
          std::string out =
              out_json.empty() ? in_path + ".ortho.json" : out_json;
          writeFile(out, orthoToJson(od));
          if (!out_svg.empty()) writeFile(out_svg, renderOrthoSVG(od));
        }
      }
      if (stats->parsed()) std::cout << all_stats.dump(2) << "\n";
      return 0;
    }

    if (validate->parsed()) {
      FlatInput original = loadInputFile(against);
      for (const std::string& in_path : inputs) {
        std::ifstream f(in_path, std::ios::binary);
        if (!f.good()) fail(ErrorCode::SyntaxError, "cannot open " + in_path);
        std::string text((std::istreambuf_iterator<char>(f)),
                         std::istreambuf_iterator<char>());
        SurfaceDrawing dr = drawingFromJson(text);
        ValidationReport rep = validateDrawing(dr, original);
        int rc = reportValidation(rep);
        if (rc != 0) return rc;
      }
      return 0;
    }

    if (fuzz->parsed()) {
      int failures = 0;
      for (int i = 0; i < count; ++i) {
        Surface surf =
            fuzz_surface == "klein"
                ? Surface::klein
                : fuzz_surface == "mixed"
                      ? (i % 2 ? Surface::klein : Surface::torus)
                      : Surface::torus;
        FlatInput input = gen::randomFlatInput(seed + i, surf);
        std::string name = "fuzz_" + std::to_string(seed + i) + "_" +
                           surfaceName(surf) + ".tor";
        if (!out_dir.empty())
          writeFile((fs::path(out_dir) / name).string(),
                    serializeInput(input));
        bool ok = false;
        std::string why;
        try {
          PipelineResult r = runPipeline(input, opt);
          ok = r.report.allPass();
          if (!ok) why = "validation failed";
        } catch (const Error& e) {
          why = e.what();
        }
        if (!ok) {
          ++failures;
          std::string path =
              (out_dir.empty() ? name : (fs::path(out_dir) / name).string());
          writeFile(path, serializeInput(input));
          std::cerr << "fuzz case " << seed + i << " failed (" << why
                    << "); input saved to " << path << "\n";
        }
      }
      std::cout << count - failures << "/" << count << " fuzz cases passed\n";
      return failures == 0 ? 0 : 3;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return errorExitCode(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
