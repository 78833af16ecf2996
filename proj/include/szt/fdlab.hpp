#pragma once

// Finite-dimensional checks on X = R^d with an l1, l2 or sup norm. Functionals
// live in the same coordinates and carry the dual norm. Data with l1 or sup
// norms stays rational end to end; l2 runs in doubles.

#include "szt/norms.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace szt {

inline constexpr std::size_t kMaxFdDim = 8;
inline constexpr double kFdTolerance = 1e-9;

using RVec = std::vector<Rational>;
using DVec = std::vector<double>;

struct EuclidModel {
  std::size_t dim = 2;
  NormTag norm = NormTag::l2;  // norm of X

  bool exact() const { return norm != NormTag::l2; }
  NormTag dual_norm() const { return dual(norm); }
};
/// Throws std::invalid_argument unless 1 <= dim <= kMaxFdDim.
void validate(const EuclidModel& m);

DVec to_double(const RVec& v);
double norm_of(const DVec& v, NormTag n);

/// Basis of {x* : x*(v) = 0 for every v}; the full dual when vectors is empty.
std::vector<RVec> annihilator(const std::vector<RVec>& vectors, std::size_t dim);
std::vector<DVec> annihilator(const std::vector<DVec>& vectors, std::size_t dim);

/// Distance from x* to span(basis) in the dual norm. The rational overload
/// needs an l1 or sup model.
Rational dual_distance(const EuclidModel& m, const RVec& xstar, const std::vector<RVec>& basis);
double dual_distance(const EuclidModel& m, const DVec& xstar, const std::vector<DVec>& basis);

/// sup{|x*(y)| : y in F_perp, |y| <= 1} where F_perp is the common kernel of
/// the functionals in F. Evaluated on the vertices of the ball section for l1
/// and sup, by projection for l2.
Rational restricted_sup(const EuclidModel& m, const RVec& xstar, const std::vector<RVec>& F);
double restricted_sup(const EuclidModel& m, const DVec& xstar, const std::vector<DVec>& F);

struct SphereNet {
  std::vector<DVec> points;
  std::vector<RVec> exact_points;  // same points, filled for exact models
  Rational delta;
  std::string mesh;  // "pair", "single", "angular" or "cube-face"
};
/// A delta-net of the unit sphere of span(F) in the dual norm, dim F <= 3.
/// Throws std::runtime_error when the mesh would exceed `budget` points.
SphereNet sphere_net(const EuclidModel& m, const std::vector<RVec>& F, const Rational& delta,
                     std::size_t budget = 200000);

/// Largest distance from `samples` random points of the sphere to the net.
double net_sampling_gap(const EuclidModel& m, const std::vector<RVec>& F, const SphereNet& net, std::size_t samples,
                        std::uint64_t seed);

struct LowerLemmaInput {
  EuclidModel model;
  Rational nu;
  std::vector<RVec> F;
  SphereNet net;
  std::vector<DVec> y;        // one per net point
  std::vector<RVec> y_exact;  // exact models only
  DVec xstar;
  RVec xstar_exact;           // exact models only
};

struct LowerLemmaReport {
  bool preconditions_ok = true;
  std::vector<std::string> failures;
  bool exact = false;
  std::size_t net_size = 0;
  double sup = 0, xnorm = 0, margin = 0;
  Rational sup_exact, xnorm_exact, margin_exact;
};

/// margin = sup over B_{F_perp} of |x*| minus |x*| / (2 + nu), with every
/// hypothesis of the lower bound itemized when it fails.
LowerLemmaReport lowerlemma_check(const LowerLemmaInput& in, std::size_t samples = 200);

struct FdInstance {
  EuclidModel model;
  Rational nu;
  std::vector<RVec> F;
  std::uint64_t seed = 0;
};

/// Random model, nu and F: signed coordinate bases for l1 and sup, rows of a
/// rational rotation for l2.
FdInstance random_fd_instance(std::uint64_t seed, std::size_t max_dim = 6);

/// Builds the net, the vectors y (norming vectors pushed along one fixed
/// direction of F_perp) and x* in their annihilator, all from the seed.
LowerLemmaInput materialize(const FdInstance& inst);
LowerLemmaReport run_lower_instance(const FdInstance& inst, std::size_t samples = 200);

/// Throws std::invalid_argument unless each subspace contains the previous.
void check_chain_increasing(const std::vector<std::vector<RVec>>& chain, std::size_t dim);

/// |x*| + (c-1) sum_n 2^-n dist(x*, B_n) over the finite chain.
double kk_norm(const EuclidModel& m, const DVec& xstar, const std::vector<std::vector<RVec>>& chain, double c);
Rational kk_norm(const EuclidModel& m, const RVec& xstar, const std::vector<std::vector<RVec>>& chain,
                 const Rational& c);

struct KkInstance {
  EuclidModel model;
  std::vector<std::vector<RVec>> chain;
  RVec xstar;
};
KkInstance random_kk_instance(std::uint64_t seed, std::size_t max_dim = 6);

}  // namespace szt
