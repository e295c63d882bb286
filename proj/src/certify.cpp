#include "fbtube/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbtube/exact_poly.hpp"
#include "fbtube/maps.hpp"
#include "fbtube/rng.hpp"

namespace fbtube {

using exact::Poly1;
using exact::Poly2;
using exact::Rational;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved:
      return "Proved";
    case Verdict::Failed:
      return "Failed";
    default:
      return "DepthExceeded";
  }
}

namespace {

int widest_coordinate(const Box& box) {
  int best = 0;
  double w = -1.0;
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (box[k].width() > w) {
      w = box[k].width();
      best = static_cast<int>(k);
    }
  }
  return best;
}

}  // namespace

ProofPart prove_on_box(std::string id, const IntervalFn& fn, Rel rel, Box box,
                       int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("prove_on_box: max_depth < 0");

  ProofPart part;
  part.id = std::move(id);
  part.box = box;
  part.rel = rel;
  part.max_depth = max_depth;

  struct Frame {
    Box box;
    int depth;
  };
  std::vector<Frame> stack;
  stack.push_back({std::move(box), 0});

  bool depth_exceeded = false;
  double min_lower = std::numeric_limits<double>::infinity();

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();

    const RealInterval e = fn(f.box);
    const bool proved = (rel == Rel::Geq) ? (e.lo >= 0.0) : (e.lo > 0.0);
    const bool violated = (rel == Rel::Geq) ? (e.hi < 0.0) : (e.hi <= 0.0);

    if (violated) {
      part.verdict = Verdict::Failed;
      part.witness = f.box;
      part.margin = e.hi;
      return part;
    }
    if (proved) {
      min_lower = std::min(min_lower, e.lo);
      continue;
    }
    if (f.depth >= max_depth) {
      depth_exceeded = true;
      continue;
    }

    const int k = widest_coordinate(f.box);
    const double m = f.box[k].mid();
    if (!(f.box[k].lo < m && m < f.box[k].hi)) {
      // Box too thin to bisect; indeterminate at floating-point resolution.
      depth_exceeded = true;
      continue;
    }
    ++part.subdivisions;
    Box left = f.box;
    Box right = f.box;
    left[k] = RealInterval(f.box[k].lo, m);
    right[k] = RealInterval(m, f.box[k].hi);
    stack.push_back({std::move(right), f.depth + 1});
    stack.push_back({std::move(left), f.depth + 1});
  }

  if (depth_exceeded) {
    part.verdict = Verdict::DepthExceeded;
  } else {
    part.verdict = Verdict::Proved;
    part.margin = min_lower;
  }
  return part;
}

namespace {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Failed || b == Verdict::Failed) return Verdict::Failed;
  if (a == Verdict::DepthExceeded || b == Verdict::DepthExceeded) {
    return Verdict::DepthExceeded;
  }
  return Verdict::Proved;
}

// Assembles the certificate verdict/margin/subdivision totals from its parts
// and exact checks.
CertificateReport assemble(std::string statement_id, Box domain,
                           std::vector<ProofPart> parts,
                           std::vector<SubCheck> checks, int max_depth) {
  CertificateReport r;
  r.statement_id = std::move(statement_id);
  r.domain_box = std::move(domain);
  r.max_depth = max_depth;
  r.verdict = Verdict::Proved;
  r.margin = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    r.verdict = combine(r.verdict, p.verdict);
    r.subdivisions += p.subdivisions;
    if (p.verdict == Verdict::Proved) r.margin = std::min(r.margin, p.margin);
  }
  for (const auto& c : checks) {
    if (!c.passed) r.verdict = Verdict::Failed;
  }
  if (parts.empty() || r.verdict != Verdict::Proved) r.margin = 0.0;
  r.parts = std::move(parts);
  r.checks = std::move(checks);
  return r;
}

SubCheck poly1_identity(std::string id, const Poly1& lhs, const Poly1& rhs,
                        std::string detail) {
  return SubCheck{std::move(id), lhs == rhs, std::move(detail)};
}

// 1/6 rounded toward zero: the largest double below the exact 1/6, so the
// interval domain [0, r16] sits inside the open interval [0, 1/6) used by
// the contraction step.
double one_sixth_below() { return RealInterval::ratio(1, 6).lo; }

}  // namespace

CertificateReport certify_contraction(int max_depth) {
  const double r16 = one_sixth_below();
  Box domain{RealInterval(0.0, r16)};

  // 12 * ((3/4) r - (r^2 + (4/3) r)/2) == r (1 - 6 r): proving the factored
  // right side >= 0 proves the contraction inequality. The factored form is
  // exact at both boundary equalities r = 0 and r = 1/6.
  const IntervalFn factored = [](const Box& b) {
    const RealInterval r = b[0];
    return r * (1.0 - 6.0 * r);
  };
  std::vector<ProofPart> parts;
  parts.push_back(
      prove_on_box("contraction_factored", factored, Rel::Geq, domain,
                   max_depth));

  std::vector<SubCheck> checks;
  {
    const Poly1 r = Poly1::x();
    const Poly1 lhs = Rational(12) * (Rational(3, 4) * r -
                                      Rational(1, 2) * (r * r + Rational(4, 3) * r));
    const Poly1 rhs = r * (Poly1::constant(Rational(1)) - Rational(6) * r);
    checks.push_back(poly1_identity(
        "rescaling_identity", lhs, rhs,
        "12*((3/4)r - (r^2 + (4/3)r)/2) == r(1 - 6r), coefficient comparison"));
  }
  {
    // Boundary equalities, exact rational evaluation.
    const Rational r0(0);
    const Rational r6(1, 6);
    const auto lhs_of = [](Rational r) {
      return (r * r + Rational(4, 3) * r) / Rational(2);
    };
    const auto rhs_of = [](Rational r) { return Rational(3, 4) * r; };
    const bool at0 = lhs_of(r0) == rhs_of(r0);
    const bool at16 = lhs_of(r6) == rhs_of(r6) && rhs_of(r6) == Rational(1, 8);
    checks.push_back(SubCheck{"boundary_r0", at0, "equality 0 == 0 at r = 0"});
    checks.push_back(SubCheck{"boundary_r16", at16,
                              "(1/36 + 2/9)/2 == 1/8 == (3/4)(1/6) at r = 1/6"});
  }

  return assemble("contraction", std::move(domain), std::move(parts),
                  std::move(checks), max_depth);
}

CertificateReport certify_g_D1_case(int max_depth) {
  Box domain{RealInterval(5.0, 25.0)};

  // Head [5, 6] in factored form: exact at the boundary equality s = 5.
  const IntervalFn factored = [](const Box& b) {
    const RealInterval s = b[0];
    return (s - 5.0) * (s + RealInterval::point(4.0));
  };
  // Tail [6, 25] in the expanded form; needs genuine subdivision.
  const IntervalFn expanded = [](const Box& b) {
    const RealInterval s = b[0];
    return sq(s) - s - RealInterval::point(20.0);
  };

  std::vector<ProofPart> parts;
  parts.push_back(prove_on_box("d1_factored_head", factored, Rel::Geq,
                               Box{RealInterval(5.0, 6.0)}, max_depth));
  parts.push_back(prove_on_box("d1_expanded_tail", expanded, Rel::Geq,
                               Box{RealInterval(6.0, 25.0)}, max_depth));

  std::vector<SubCheck> checks;
  {
    const Poly1 s = Poly1::x();
    const Poly1 expanded_poly =
        s * s - s - Poly1::constant(Rational(20));
    const Poly1 factored_poly = (s - Poly1::constant(Rational(5))) *
                                (s + Poly1::constant(Rational(4)));
    checks.push_back(poly1_identity("factor_identity", expanded_poly,
                                    factored_poly,
                                    "s^2 - s - 20 == (s - 5)(s + 4)"));
  }
  // The |w1| < 5 case is logical, not an inequality over a box: the image
  // has |z2| = |w1| < 5, and either |z1| < 25 (lands in D1) or |z1| >= 25 >
  // 10 + |z2| (lands in D2). Recorded as exact sub-statements.
  checks.push_back(SubCheck{"case_small_w1", Rational(25) - Rational(15) ==
                                                 Rational(10) &&
                                                 Rational(15) < Rational(25),
                            "25 > 10 + 5"});
  checks.push_back(SubCheck{
      "d1_boundary_strict",
      !in_D1(C2Point{Cx(0.0), Cx(5.0)}) && in_D1(C2Point{Cx(0.0), Cx(4.999)}),
      "D1 uses the strict bound |z2| < 5"});

  return assemble("g_d1_case", std::move(domain), std::move(parts),
                  std::move(checks), max_depth);
}

CertificateReport certify_g_D2_case(int max_depth, double tail_bound) {
  if (!(tail_bound > 11.0)) {
    throw std::invalid_argument("certify_g_D2_case: tail_bound must be > 11");
  }
  Box domain{RealInterval(10.0, tail_bound)};

  const IntervalFn factored = [](const Box& b) {
    const RealInterval s = b[0];
    return (s - 10.0) * (s + RealInterval::point(7.0));
  };
  const IntervalFn expanded = [](const Box& b) {
    const RealInterval s = b[0];
    return sq(s) - 3.0 * s - RealInterval::point(70.0);
  };

  std::vector<ProofPart> parts;
  parts.push_back(prove_on_box("d2_factored_head", factored, Rel::Geq,
                               Box{RealInterval(10.0, 11.0)}, max_depth));
  parts.push_back(prove_on_box("d2_expanded_tail", expanded, Rel::Geq,
                               Box{RealInterval(11.0, tail_bound)}, max_depth));

  std::vector<SubCheck> checks;
  {
    const Poly1 s = Poly1::x();
    const Poly1 expanded_poly =
        s * s - Rational(3) * s - Poly1::constant(Rational(70));
    const Poly1 factored_poly = (s - Poly1::constant(Rational(10))) *
                                (s + Poly1::constant(Rational(7)));
    checks.push_back(poly1_identity("factor_identity", expanded_poly,
                                    factored_poly,
                                    "s^2 - 3s - 70 == (s - 10)(s + 7)"));
    // Unbounded tail by sign inspection: both roots (10 and -7) are <= 10,
    // so both factors are nonnegative on [10, infinity).
    const bool signs_ok =
        !(Rational(10) < Rational(10)) && Rational(-7) < Rational(10);
    checks.push_back(SubCheck{"tail_factor_signs", signs_ok,
                              "s - 10 >= 0 and s + 7 > 0 for all s >= 10"});
    const Rational at10 =
        Rational(100) - Rational(3) * Rational(10) + Rational(20);
    checks.push_back(SubCheck{"value_at_10", at10 == Rational(90),
                              "s^2 - 3s + 20 equals exactly 90 at s = 10"});
  }

  return assemble("g_d2_case", std::move(domain), std::move(parts),
                  std::move(checks), max_depth);
}

CertificateReport certify_tube_inclusions(int max_depth) {
  Box domain{RealInterval(0.0, 5.0)};

  // D1 image: |x| = |z2|/25 with |z2| < 5, so t/25 < 1 on t in [0, 5];
  // certified strictly with the proven margin (about 4/5).
  const IntervalFn d1_slack = [](const Box& b) {
    const RealInterval t = b[0];
    return 1.0 - t / RealInterval::point(25.0);
  };
  // D2 image: |x| <= |y| - 2/5 < 1 + |y| reduces exactly to -2/5 < 1, i.e.
  // the constant slack 7/5 > 0.
  const IntervalFn d2_slack = [](const Box&) {
    return RealInterval::point(1.0) + RealInterval::ratio(2, 5);
  };

  std::vector<ProofPart> parts;
  parts.push_back(
      prove_on_box("tube_d1_bound", d1_slack, Rel::Gt, domain, max_depth));
  parts.push_back(prove_on_box("tube_d2_constant", d2_slack, Rel::Gt,
                               Box{RealInterval(0.0, 1.0)}, max_depth));

  std::vector<SubCheck> checks;
  {
    const Poly1 y = Poly1::x();
    const Poly1 lhs = (Poly1::constant(Rational(1)) + y) -
                      (y - Poly1::constant(Rational(2, 5)));
    checks.push_back(poly1_identity(
        "d2_cancellation", lhs, Poly1::constant(Rational(7, 5)),
        "(1 + |y|) - (|y| - 2/5) == 7/5, so the D2 bound reduces to -2/5 < 1"));
  }

  return assemble("tube_inclusion", std::move(domain), std::move(parts),
                  std::move(checks), max_depth);
}

CertificateReport certify_shear_identity(std::uint64_t sweep_seed,
                                         int sweep_samples) {
  std::vector<SubCheck> checks;
  {
    // (u, v) = (x + y^2, y)  =>  u - v^2 - x == 0, exactly.
    const Poly2 x = Poly2::x();
    const Poly2 y = Poly2::y();
    const Poly2 u = x + y * y;
    const Poly2 v = y;
    checks.push_back(SubCheck{"shear_cancellation", (u - v * v - x).is_zero(),
                              "u - v^2 == x by bivariate coefficient comparison"});
    const Poly2 back = (u - v * v);
    checks.push_back(SubCheck{"shear_inverse", back == x,
                              "A^{-1}(A(x, y)) == (x, y) symbolically"});
  }
  {
    // det DA == 1 identically: DA rows (1, 2y), (0, 1).
    const Poly2 det = Poly2::constant(Rational(1)) * Poly2::constant(Rational(1)) -
                      (Rational(2) * Poly2::y()) * Poly2::constant(Rational(0));
    checks.push_back(SubCheck{"shear_jacobian_det",
                              det == Poly2::constant(Rational(1)),
                              "det DA == 1 identically"});
  }
  {
    // Numeric sweep: |u - v^2 - x| stays at rounding level.
    CounterRng rng{sweep_seed, 77};
    double worst = 0.0;
    for (int i = 0; i < sweep_samples; ++i) {
      const C2Point p = rng.bidisk(static_cast<std::uint64_t>(i), 10.0, 10.0);
      const C2Point q = apply_shear_A(p);
      const double err = std::abs(q.z1 - q.z2 * q.z2 - p.z1);
      worst = std::max(worst, err);
    }
    std::ostringstream os;
    os << "max |u - v^2 - x| over " << sweep_samples
       << " random points = " << worst;
    checks.push_back(SubCheck{"numeric_sweep", worst <= 1e-12, os.str()});
  }

  return assemble("shear_identity", Box{}, {}, std::move(checks), 0);
}

CertificateReport certify_eigenvalues() {
  std::vector<SubCheck> checks;

  // Df(0) with rational entries: rows (0, 1), (-1/2, 0).
  const Rational a(0), b(1), c(-1, 2), d(0);
  {
    // Square equals -1/2 I entrywise.
    const Rational sa = a * a + b * c;
    const Rational sb = a * b + b * d;
    const Rational sc = c * a + d * c;
    const Rational sd = c * b + d * d;
    const bool ok = sa == Rational(-1, 2) && sb == Rational(0) &&
                    sc == Rational(0) && sd == Rational(-1, 2);
    checks.push_back(
        SubCheck{"square_is_minus_half_identity", ok,
                 "Df(0)^2 == -1/2 I entrywise, exact rational arithmetic"});
  }
  {
    // Characteristic polynomial x^2 - tr x + det == x^2 + 1/2.
    const Rational tr = a + d;
    const Rational det = a * d - b * c;
    const Poly1 x = Poly1::x();
    const Poly1 char_poly = x * x - tr * x + Poly1::constant(det);
    const Poly1 expected =
        x * x + Poly1::constant(Rational(1, 2));
    checks.push_back(poly1_identity("characteristic_polynomial", char_poly,
                                    expected, "lambda^2 + 1/2"));
    const Rational disc = tr * tr - Rational(4) * det;
    checks.push_back(SubCheck{"negative_discriminant", disc == Rational(-2),
                              "discriminant -2 < 0: no real eigenvalues"});
    checks.push_back(SubCheck{"modulus_squared", det == Rational(1, 2),
                              "|lambda|^2 == det == 1/2 for both eigenvalues"});
  }

  // Strict bound |lambda| = sqrt(1/2) < 1 with interval margin.
  const IntervalFn slack = [](const Box& b) {
    return 1.0 - sqrt_enclosure(b[0]);
  };
  std::vector<ProofPart> parts;
  parts.push_back(prove_on_box("eigen_modulus_lt_one", slack, Rel::Gt,
                               Box{RealInterval::ratio(1, 2)}, 0));

  return assemble("eigenvalues", Box{RealInterval::ratio(1, 2)},
                  std::move(parts), std::move(checks), 0);
}

std::vector<CertificateReport> certify_all(int max_depth, double tail_bound) {
  std::vector<CertificateReport> out;
  out.push_back(certify_contraction(max_depth));
  out.push_back(certify_g_D1_case(max_depth));
  out.push_back(certify_g_D2_case(max_depth, tail_bound));
  out.push_back(certify_tube_inclusions(max_depth));
  out.push_back(certify_shear_identity());
  out.push_back(certify_eigenvalues());
  return out;
}

namespace {

nlohmann::ordered_json box_to_json(const Box& box) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& iv : box) j.push_back({iv.lo, iv.hi});
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const ProofPart& p) {
  nlohmann::ordered_json j;
  j["id"] = p.id;
  j["box"] = box_to_json(p.box);
  j["relation"] = p.rel == Rel::Gt ? "> 0" : ">= 0";
  j["verdict"] = to_string(p.verdict);
  j["subdivisions"] = p.subdivisions;
  j["max_depth"] = p.max_depth;
  j["margin"] = p.margin;
  if (p.witness) j["witness"] = box_to_json(*p.witness);
  return j;
}

nlohmann::ordered_json to_json(const CertificateReport& r) {
  nlohmann::ordered_json j;
  j["statement_id"] = r.statement_id;
  j["box"] = box_to_json(r.domain_box);
  j["verdict"] = to_string(r.verdict);
  j["subdivisions"] = r.subdivisions;
  j["max_depth"] = r.max_depth;
  j["margin"] = r.margin;
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& p : r.parts) j["parts"].push_back(to_json(p));
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"id", c.id}, {"passed", c.passed},
                           {"detail", c.detail}});
  }
  return j;
}

}  // namespace fbtube
