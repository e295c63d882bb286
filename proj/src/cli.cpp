#include "fbtube/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fbtube/family.hpp"
#include "fbtube/linearize.hpp"
#include "fbtube/maps.hpp"
#include "fbtube/parallel.hpp"
#include "fbtube/rng.hpp"

namespace fbtube {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::ordered_json RunConfig::echo(const std::string& command) const {
  // Semantic parameters only: worker count and output paths do not affect
  // results and must not affect bytes.
  nlohmann::ordered_json j;
  j["command"] = command;
  j["tol"] = tol;
  j["max_iter"] = max_iter;
  j["max_m"] = max_m;
  j["seed"] = seed;
  j["depth"] = depth;
  j["tail_bound"] = tail_bound;
  j["samples"] = samples;
  j["radius"] = radius;
  if (command == "basin") {
    j["grid"] = {slice.nx, slice.ny};
    j["range"] = {slice.s_min, slice.s_max, slice.t_min, slice.t_max};
    j["anchor"] = {slice.anchor.z1.real(), slice.anchor.z1.imag(),
                   slice.anchor.z2.real(), slice.anchor.z2.imag()};
    j["dir1"] = {slice.dir1.z1.real(), slice.dir1.z1.imag(),
                 slice.dir1.z2.real(), slice.dir1.z2.imag()};
    j["dir2"] = {slice.dir2.z1.real(), slice.dir2.z1.imag(),
                 slice.dir2.z2.real(), slice.dir2.z2.imag()};
    j["escape_norm"] = kDefaultEscapeNorm;
  }
  return j;
}

namespace {

std::string dump_json(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

std::vector<std::string> echo_lines(const nlohmann::ordered_json& echo) {
  std::vector<std::string> lines;
  for (const auto& [k, v] : echo.items()) {
    lines.push_back(k + "=" + v.dump());
  }
  return lines;
}

}  // namespace

CommandResult run_certify(const RunConfig& cfg) {
  const auto reports = certify_all(cfg.depth, cfg.tail_bound);

  nlohmann::ordered_json j;
  j["config"] = cfg.echo("certify");
  j["certificates"] = nlohmann::ordered_json::array();
  bool all_proved = true;
  std::vector<std::string> failing;
  for (const auto& r : reports) {
    j["certificates"].push_back(to_json(r));
    if (r.verdict != Verdict::Proved) {
      all_proved = false;
      failing.push_back(r.statement_id);
    }
  }
  j["all_proved"] = all_proved;
  j["failing"] = failing;

  CommandResult res;
  res.exit_code = all_proved ? 0 : 1;
  res.artifacts.emplace_back("json", dump_json(j));
  std::ostringstream os;
  os << "certify: " << reports.size() << " certificates, "
     << (all_proved ? "all Proved" : "FAILURES: ");
  for (const auto& f : failing) os << f << " ";
  res.summary = os.str();
  return res;
}

CommandResult run_basin(const RunConfig& cfg) {
  const auto echo = cfg.echo("basin");
  const SliceResult r = render_slice(cfg.slice, cfg.max_iter,
                                     kDefaultEscapeNorm, cfg.threads);

  std::ostringstream csv, pgm;
  write_slice_csv(csv, r, echo_lines(echo));
  write_slice_pgm(pgm, r, echo_lines(echo));

  nlohmann::ordered_json j;
  j["config"] = echo;
  j["attracted"] = r.attracted;
  j["escaped_heuristic"] = r.escaped;
  j["unknown_heuristic"] = r.unknown;
  j["thin_violations"] = r.thin_violations;

  CommandResult res;
  res.exit_code = r.thin_violations == 0 ? 0 : 1;
  res.artifacts.emplace_back("csv", csv.str());
  res.artifacts.emplace_back("pgm", pgm.str());
  res.artifacts.emplace_back("json", dump_json(j));
  std::ostringstream os;
  os << "basin: " << r.attracted << " attracted, " << r.escaped
     << " escaped (heuristic), " << r.unknown << " unknown (heuristic)";
  res.summary = os.str();
  return res;
}

namespace {

// Standard Phi sample set: deterministic points of the weighted-norm ball
// of the given radius (a polydisk |w1| <= 4r/3, |w2| <= r).
std::vector<C2Point> phi_sample_set(std::uint64_t seed, int n, double radius) {
  CounterRng rng{seed, 11};
  std::vector<C2Point> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i)] =
        rng.bidisk(static_cast<std::uint64_t>(i), radius * 4.0 / 3.0, radius);
  }
  return pts;
}

struct ParamRow {
  C2Point w{};
  C2Point value{};
  int iterations = 0;
  double gap = 0.0;
  double residual = 0.0;
  double det_err = 0.0;
  bool converged = false;
};

ParamRow eval_param_row(const C2Point& w, double tol, int max_m) {
  ParamRow row;
  row.w = w;
  try {
    const ParamResult pr = param_phi(w, tol, max_m);
    const Mat2 jac = jacobian_phi(w, tol, max_m);
    row.value = pr.value;
    row.iterations = pr.iterations_used;
    row.gap = pr.cauchy_gap;
    row.residual = pr.conjugacy_residual;
    row.det_err = std::abs(jac.det() - Cx(1.0));
    row.converged = true;
  } catch (const NoConvergence& e) {
    row.iterations = e.iterations_used;
    row.gap = e.last_gap;
    row.converged = false;
  }
  return row;
}

}  // namespace

CommandResult run_param(const RunConfig& cfg) {
  const auto echo = cfg.echo("param");
  const auto points = phi_sample_set(cfg.seed, cfg.samples, cfg.radius);

  std::vector<ParamRow> rows(points.size());
  parallel_for(static_cast<std::int64_t>(points.size()), cfg.threads,
               [&](std::int64_t b, std::int64_t e) {
                 for (std::int64_t i = b; i < e; ++i) {
                   rows[i] = eval_param_row(points[i], cfg.tol, cfg.max_m);
                 }
               });

  std::ostringstream csv;
  csv << "# phi evaluation sweep\n";
  for (const auto& line : echo_lines(echo)) csv << "# " << line << "\n";
  csv << "index,w1_re,w1_im,w2_re,w2_im,phi1_re,phi1_im,phi2_re,phi2_im,"
         "iterations,cauchy_gap,residual,det_jacobian_err,status\n";
  long converged = 0;
  double max_residual = 0.0, max_det_err = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    csv << i << ',' << format_double(r.w.z1.real()) << ','
        << format_double(r.w.z1.imag()) << ',' << format_double(r.w.z2.real())
        << ',' << format_double(r.w.z2.imag()) << ','
        << format_double(r.value.z1.real()) << ','
        << format_double(r.value.z1.imag()) << ','
        << format_double(r.value.z2.real()) << ','
        << format_double(r.value.z2.imag()) << ',' << r.iterations << ','
        << format_double(r.gap) << ',' << format_double(r.residual) << ','
        << format_double(r.det_err) << ','
        << (r.converged ? "converged" : "no_convergence") << "\n";
    if (r.converged) {
      ++converged;
      max_residual = std::max(max_residual, r.residual);
      max_det_err = std::max(max_det_err, r.det_err);
    }
  }

  nlohmann::ordered_json j;
  j["config"] = echo;
  j["total"] = rows.size();
  j["converged"] = converged;
  j["no_convergence"] = static_cast<long>(rows.size()) - converged;
  j["max_residual"] = max_residual;
  j["max_det_jacobian_err"] = max_det_err;

  CommandResult res;
  res.exit_code =
      (converged == static_cast<long>(rows.size())) ? 0 : 1;
  res.artifacts.emplace_back("csv", csv.str());
  res.artifacts.emplace_back("json", dump_json(j));
  std::ostringstream os;
  os << "param: " << converged << "/" << rows.size()
     << " converged, max residual " << max_residual;
  res.summary = os.str();
  return res;
}

namespace {

struct FamilyRow {
  Cx u{}, v{};
  Cx wr{};
  bool in_s = false;
  bool in_tube = false;
  double s_margin = 0.0;
  bool converged = false;
};

}  // namespace

CommandResult run_family(const RunConfig& cfg) {
  const auto echo = cfg.echo("family");
  const Cx expected(1.0 / 625.0, 0.0);

  // Parameter samples in the bidisk of the configured radius.
  CounterRng ab_rng{cfg.seed, 21};
  std::vector<C2Point> ab(static_cast<std::size_t>(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    ab[static_cast<std::size_t>(i)] =
        ab_rng.bidisk(static_cast<std::uint64_t>(i), cfg.radius, cfg.radius);
  }

  std::vector<FamilyRow> rows(ab.size());
  parallel_for(static_cast<std::int64_t>(ab.size()), cfg.threads,
               [&](std::int64_t b, std::int64_t e) {
                 for (std::int64_t i = b; i < e; ++i) {
                   FamilyRow& row = rows[i];
                   try {
                     const ParamResult phi =
                         param_phi(ab[i], cfg.tol, cfg.max_m);
                     const C2Point xy = apply_L(phi.value);
                     const C2Point uv_pt = apply_shear_A(xy);
                     row.u = uv_pt.z1;
                     row.v = uv_pt.z2;
                     row.in_s = in_S(uv_pt);
                     row.in_tube = in_tube_T(xy);
                     row.s_margin = 1.0 + std::abs(row.v) -
                                    std::abs(row.u - row.v * row.v);
                     row.wr = wronskian(ab[i].z1, ab[i].z2, cfg.tol, cfg.max_m);
                     row.converged = true;
                   } catch (const NoConvergence&) {
                     row.converged = false;
                   }
                 }
               });

  long converged = 0, s_hits = 0, tube_hits = 0;
  double min_s_margin = std::numeric_limits<double>::infinity();
  double min_wr = std::numeric_limits<double>::infinity();
  double max_wr = 0.0;
  double max_rel_dev = 0.0;
  for (const auto& r : rows) {
    if (!r.converged) continue;
    ++converged;
    if (r.in_s) ++s_hits;
    if (r.in_tube) ++tube_hits;
    min_s_margin = std::min(min_s_margin, r.s_margin);
    const double m = std::abs(r.wr);
    min_wr = std::min(min_wr, m);
    max_wr = std::max(max_wr, m);
    max_rel_dev = std::max(max_rel_dev,
                           std::abs(r.wr - expected) / std::abs(expected));
  }

  // Finite-difference cross-check on a prefix of the converged samples.
  const int fd_count = std::min<int>(16, static_cast<int>(rows.size()));
  double max_fd_dev = 0.0;
  for (int i = 0; i < fd_count; ++i) {
    if (!rows[static_cast<std::size_t>(i)].converged) continue;
    const Cx fd =
        wronskian_fd(ab[static_cast<std::size_t>(i)].z1,
                     ab[static_cast<std::size_t>(i)].z2, 1e-3, cfg.tol,
                     cfg.max_m);
    max_fd_dev = std::max(
        max_fd_dev, std::abs(fd - rows[static_cast<std::size_t>(i)].wr));
  }

  // Negative control: the factorable family has identically zero obstruction.
  double max_control = 0.0;
  for (int i = 0; i < fd_count; ++i) {
    const Cx w = family_wronskian_fd(control_family,
                                     ab[static_cast<std::size_t>(i)].z1,
                                     ab[static_cast<std::size_t>(i)].z2);
    max_control = std::max(max_control, std::abs(w));
  }

  // Large-|v| lower-bound checks on direct S samples, |v| log-uniform in
  // [10, 1e4] and delta = rho (1 + |v|) e^{i theta} with rho in [0, 1).
  CounterRng s_rng{cfg.seed, 31};
  long case2_pass = 0, case2_total = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i);
    const double av = std::pow(10.0, s_rng.uniform(4 * k, 1.0, 4.0));
    const double vth = s_rng.uniform(4 * k + 1, 0.0, 6.283185307179586);
    const double rho = s_rng.uniform01(4 * k + 2);
    const double dth = s_rng.uniform(4 * k + 3, 0.0, 6.283185307179586);
    const Cx v = av * Cx(std::cos(vth), std::sin(vth));
    const Cx delta = rho * (1.0 + av) * Cx(std::cos(dth), std::sin(dth));
    const Cx u = v * v + delta;
    for (double R : {1.0, 5.0}) {
      ++case2_total;
      if (case2_lower_bound_check(u, v, R).holds) ++case2_pass;
    }
  }

  // Marty probe over the produced coefficient pairs, and the decay along
  // delta = 0, |v| in {1e2, 1e3, 1e4}.
  std::vector<CoeffPair> coeffs;
  for (const auto& r : rows) {
    if (r.converged) coeffs.push_back(CoeffPair{r.u, r.v, {}});
  }
  const double probe_samples = marty_probe(1.0, coeffs);
  std::vector<double> decay;
  for (double av : {1e2, 1e3, 1e4}) {
    const CoeffPair c{Cx(av * av, 0.0), Cx(av, 0.0), {}};
    decay.push_back(marty_probe(1.0, std::span<const CoeffPair>(&c, 1)));
  }
  const bool decay_monotone = decay[0] > decay[1] && decay[1] > decay[2];

  nlohmann::ordered_json j;
  j["config"] = echo;
  j["samples_total"] = rows.size();
  j["samples_converged"] = converged;
  j["s_containment_rate"] =
      converged > 0 ? static_cast<double>(s_hits) / converged : 0.0;
  j["tube_containment_rate"] =
      converged > 0 ? static_cast<double>(tube_hits) / converged : 0.0;
  j["min_s_margin"] = min_s_margin;
  j["wronskian"] = {{"expected", expected.real()},
                    {"min_abs", min_wr},
                    {"max_abs", max_wr},
                    {"max_rel_deviation", max_rel_dev},
                    {"max_fd_deviation", max_fd_dev}};
  j["negative_control_max_abs"] = max_control;
  j["case2"] = {{"pass", case2_pass}, {"total", case2_total}};
  j["marty_probe"] = {{"sup_over_samples", probe_samples},
                      {"decay_values", decay},
                      {"decay_monotone", decay_monotone}};

  const bool ok = converged == static_cast<long>(rows.size()) &&
                  s_hits == converged && case2_pass == case2_total;
  CommandResult res;
  res.exit_code = ok ? 0 : 1;
  res.artifacts.emplace_back("json", dump_json(j));
  std::ostringstream os;
  os << "family: S containment " << s_hits << "/" << converged
     << ", obstruction rel spread " << max_rel_dev;
  res.summary = os.str();
  return res;
}

}  // namespace fbtube
