// fbtube command-line driver: certification, basin rendering, parametrization
// sweeps and family verification as reproducible commands. `--command NAME`
// and the subcommand spelling `fbtube NAME ...` are equivalent.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fbtube/cli.hpp"

namespace {

namespace fs = std::filesystem;

// Applies FBTUBE_OUT_DIR to relative output paths.
fs::path resolve_out(const std::string& out) {
  fs::path p(out);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("FBTUBE_OUT_DIR")) {
    return fs::path(dir) / p;
  }
  return p;
}

// "<base>.<suffix>", unless base already carries the suffix.
fs::path artifact_path(const fs::path& base, const std::string& suffix) {
  if (base.extension() == "." + suffix) return base;
  fs::path p = base;
  p += "." + suffix;
  return p;
}

int emit(const fbtube::CommandResult& result, const std::string& out,
         const std::string& format) {
  for (const auto& [suffix, content] : result.artifacts) {
    if (format != "all" && format != suffix) continue;
    if (out.empty()) {
      std::cout << content;
    } else {
      const fs::path path = artifact_path(resolve_out(out), suffix);
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        std::cerr << "fbtube: cannot open " << path << " for writing\n";
        return 1;
      }
      f << content;
      if (!f.good()) {
        std::cerr << "fbtube: short write to " << path << "\n";
        return 1;
      }
    }
  }
  std::cerr << result.summary << "\n";
  return result.exit_code;
}

bool parse_grid(const std::string& text, int& nx, int& ny) {
  const auto sep = text.find_first_of("x,");
  if (sep == std::string::npos) return false;
  try {
    nx = std::stoi(text.substr(0, sep));
    ny = std::stoi(text.substr(sep + 1));
  } catch (...) {
    return false;
  }
  return nx >= 1 && ny >= 1;
}

// "s0:s1,t0:t1"
bool parse_range2(const std::string& text, double& s0, double& s1, double& t0,
                  double& t1) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  const std::string a = text.substr(0, comma);
  const std::string b = text.substr(comma + 1);
  const auto c1 = a.find(':');
  const auto c2 = b.find(':');
  if (c1 == std::string::npos || c2 == std::string::npos) return false;
  try {
    s0 = std::stod(a.substr(0, c1));
    s1 = std::stod(a.substr(c1 + 1));
    t0 = std::stod(b.substr(0, c2));
    t1 = std::stod(b.substr(c2 + 1));
  } catch (...) {
    return false;
  }
  return true;
}

bool parse_point(const std::string& text, fbtube::C2Point& p) {
  double v[4] = {0, 0, 0, 0};
  std::size_t pos = 0;
  for (int k = 0; k < 4; ++k) {
    const auto comma = text.find(',', pos);
    const std::string piece = comma == std::string::npos
                                  ? text.substr(pos)
                                  : text.substr(pos, comma - pos);
    try {
      v[k] = std::stod(piece);
    } catch (...) {
      return false;
    }
    if (comma == std::string::npos) {
      if (k != 3) return false;
      break;
    }
    pos = comma + 1;
  }
  p = fbtube::C2Point{fbtube::Cx(v[0], v[1]), fbtube::Cx(v[2], v[3])};
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  // Rewrite "--command NAME" / "--command=NAME" into the subcommand form.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string name;
    if (args[i] == "--command" && i + 1 < args.size()) {
      name = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--command=", 0) == 0) {
      name = args[i].substr(10);
      args.erase(args.begin() + i);
    }
    if (!name.empty()) {
      args.insert(args.begin(), name);
      break;
    }
  }

  CLI::App app{
      "Attracting-basin toolkit: certified containment inequalities, basin "
      "slices, the basin parametrization, and the two-parameter affine "
      "family built on it"};
  app.require_subcommand(1);

  fbtube::RunConfig cfg;
  std::string out;
  std::string format = "all";
  std::string grid = "256x256";
  std::string range = "-30:30,-30:30";
  std::string range1;
  std::string anchor = "0,0,0,0";
  std::string dir1 = "1,0,0,0";
  std::string dir2 = "0,0,1,0";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", cfg.tol, "Convergence tolerance");
    cmd->add_option("--max-iter", cfg.max_iter, "Orbit iteration cap");
    cmd->add_option("--max-m", cfg.max_m, "Approximation order cap");
    cmd->add_option("--seed", cfg.seed, "Random stream seed");
    cmd->add_option("--threads", cfg.threads,
                    "Worker count (0 = hardware); never affects output bytes");
    cmd->add_option("--out", out,
                    "Output path base (FBTUBE_OUT_DIR prefixes relative "
                    "paths); stdout when omitted");
    cmd->add_option("--format", format, "Artifact filter: json|csv|pgm|all");
  };

  CLI::App* certify = app.add_subcommand("certify", "Run all certificates");
  add_common(certify);
  certify->add_option("--depth", cfg.depth, "Branch-and-bound depth cap");
  certify->add_option("--tail-bound", cfg.tail_bound,
                      "Bounded tail for the D2 inequality");

  CLI::App* basin = app.add_subcommand("basin", "Render a basin slice");
  add_common(basin);
  basin->add_option("--grid", grid, "Pixels, NXxNY");
  basin->add_option("--range", range, "Slice ranges s0:s1,t0:t1");
  basin->add_option("--anchor", anchor, "Slice anchor re1,im1,re2,im2");
  basin->add_option("--dir1", dir1, "Slice direction 1");
  basin->add_option("--dir2", dir2, "Slice direction 2");

  CLI::App* param = app.add_subcommand("param", "Evaluate the parametrization");
  add_common(param);
  param->add_option("--samples", cfg.samples, "Sample count");
  param->add_option("--range", range1, "Weighted-norm sampling radius");

  CLI::App* family = app.add_subcommand("family", "Family verification sweep");
  add_common(family);
  family->add_option("--samples", cfg.samples, "Sample count");
  family->add_option("--range", range1, "Parameter bidisk radius");

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (certify->parsed()) {
      return emit(fbtube::run_certify(cfg), out, format);
    }
    if (basin->parsed()) {
      if (!parse_grid(grid, cfg.slice.nx, cfg.slice.ny)) {
        std::cerr << "fbtube: bad --grid\n";
        return 2;
      }
      if (!parse_range2(range, cfg.slice.s_min, cfg.slice.s_max,
                        cfg.slice.t_min, cfg.slice.t_max)) {
        std::cerr << "fbtube: bad --range\n";
        return 2;
      }
      if (!parse_point(anchor, cfg.slice.anchor) ||
          !parse_point(dir1, cfg.slice.dir1) ||
          !parse_point(dir2, cfg.slice.dir2)) {
        std::cerr << "fbtube: bad --anchor/--dir1/--dir2\n";
        return 2;
      }
      if (out.empty()) out = "basin_slice";
      return emit(fbtube::run_basin(cfg), out, format);
    }
    if (param->parsed()) {
      if (!range1.empty()) cfg.radius = std::stod(range1);
      return emit(fbtube::run_param(cfg), out, format);
    }
    if (family->parsed()) {
      if (!range1.empty()) cfg.radius = std::stod(range1);
      if (family->count("--samples") == 0) cfg.samples = 1000;
      return emit(fbtube::run_family(cfg), out, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "fbtube: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
