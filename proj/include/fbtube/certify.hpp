#pragma once
// Rigorous certification of the scalar inequalities behind the basin
// containment argument, by interval branch-and-bound plus exact polynomial
// identities.
//
// Each certificate combines up to three ingredient kinds:
//   * interval proof parts: branch-and-bound over a box, proving expr >= 0
//     (or > 0) on every leaf by outward-rounded evaluation;
//   * exact checks: polynomial identities and rational evaluations verified
//     by coefficient comparison, which carry boundary equalities and
//     unbounded tails that interval subdivision cannot close;
//   * numeric sweeps, recorded with their observed error bounds.
//
// Strict inequalities are certified through a positive proven margin (the
// branch-and-bound infimum of the slack); where the infimum is attained the
// margin is exactly 0 and the statement is certified as >=.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbtube/interval.hpp"

namespace fbtube {

inline constexpr int kDefaultProofDepth = 40;
inline constexpr double kDefaultTailBound = 1e6;

enum class Verdict { Proved, Failed, DepthExceeded };
const char* to_string(Verdict v);

/// Predicate relation for prove_on_box: expr >= 0 or expr > 0.
enum class Rel { Geq, Gt };

/// Interval evaluation of the certified expression over a box.
using IntervalFn = std::function<RealInterval(const Box&)>;

/// One branch-and-bound run.
struct ProofPart {
  std::string id;
  Box box;
  Rel rel = Rel::Geq;
  Verdict verdict = Verdict::DepthExceeded;
  long subdivisions = 0;
  int max_depth = 0;
  // Proven infimum of the expression over the box (valid when Proved). For
  // strict statements this is the positive margin that makes strictness
  // auditable.
  double margin = 0.0;
  // A leaf on which interval evaluation is entirely on the violating side
  // (present when Failed); its midpoint violates in plain arithmetic.
  std::optional<Box> witness;
};

/// An exact algebraic check (coefficient comparison, rational evaluation) or
/// a recorded numeric sweep.
struct SubCheck {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::string statement_id;
  Box domain_box;
  Verdict verdict = Verdict::DepthExceeded;
  long subdivisions = 0;
  int max_depth = 0;
  double margin = 0.0;
  std::vector<ProofPart> parts;
  std::vector<SubCheck> checks;
};

/// Branch-and-bound proof of `fn rel 0` on `box`: bisects the widest
/// coordinate until every leaf is decided or `max_depth` is reached.
/// Failed is sound (a witness leaf certifies violation); Proved reports the
/// infimum of the leaf lower bounds as margin.
ProofPart prove_on_box(std::string id, const IntervalFn& fn, Rel rel, Box box,
                       int max_depth);

/// The weighted norm contracts by 3/4 on the local basin:
/// (r^2 + (4/3) r)/2 <= (3/4) r for r in [0, 1/6], certified through the
/// equivalent factored form r (1 - 6r) >= 0 plus the exact rescaling
/// identity; boundary equalities at r = 0 and r = 1/6 are checked
/// rationally.
CertificateReport certify_contraction(int max_depth = kDefaultProofDepth);

/// Step backward from D1: s^2 - s - 20 >= 0 on [5, 25] (factored head over
/// [5, 6] carrying the boundary equality at s = 5, expanded tail over
/// [6, 25] needing genuine subdivision), with the exact factorization
/// identity and the |w1| < 5 case recorded as sub-statements.
CertificateReport certify_g_D1_case(int max_depth = kDefaultProofDepth);

/// Step backward from D2: s^2 - 3s + 20 >= 90 for s >= 10. Interval proof on
/// [10, tail_bound] (factored head, expanded tail) plus the exact identity
/// s^2 - 3s - 70 = (s - 10)(s + 7) whose factor signs cover the unbounded
/// tail.
CertificateReport certify_g_D2_case(int max_depth = kDefaultProofDepth,
                                    double tail_bound = kDefaultTailBound);

/// The rescaled containing sets land in the tube T: t/25 < 1 on t in [0, 5]
/// with proven margin ~4/5, and the reduced constant inequality -2/5 < 1
/// after the exact cancellation (1 + y) - (y - 2/5) = 7/5.
CertificateReport certify_tube_inclusions(int max_depth = kDefaultProofDepth);

/// The shear straightens the tube exactly: (u, v) = (x + y^2, y) implies
/// u - v^2 = x, verified by bivariate coefficient comparison and a numeric
/// sweep.
CertificateReport certify_shear_identity(std::uint64_t sweep_seed = 1,
                                         int sweep_samples = 10000);

/// The linear part at the fixed point is a strict contraction: its square is
/// exactly -1/2 I, both eigenvalue moduli equal 2^{-1/2}, and 2^{-1/2} < 1
/// with interval margin.
CertificateReport certify_eigenvalues();

/// All six certificates in a fixed order.
std::vector<CertificateReport> certify_all(
    int max_depth = kDefaultProofDepth, double tail_bound = kDefaultTailBound);

nlohmann::ordered_json to_json(const ProofPart& p);
nlohmann::ordered_json to_json(const CertificateReport& r);

}  // namespace fbtube
