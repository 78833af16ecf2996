#include "szt/fdlab.hpp"

#include "szt/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace szt {

namespace {

template <typename T>
T norm_t(const std::vector<T>& v, NormTag n) {
  T r(0);
  switch (n) {
    case NormTag::l1:
      for (const auto& x : v) r += detail::magnitude(x);
      return r;
    case NormTag::sup:
      for (const auto& x : v) r = std::max(r, detail::magnitude(x));
      return r;
    case NormTag::l2:
      if constexpr (std::is_floating_point_v<T>) {
        for (const auto& x : v) r += x * x;
        return std::sqrt(r);
      } else {
        throw std::domain_error("l2 norms are handled in floating point");
      }
  }
  return r;
}

template <typename T>
T dot_t(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Calls fn on every r-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

template <typename T>
void check_dims(const std::vector<std::vector<T>>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs)
    if (v.size() != dim)
      throw std::invalid_argument(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                                  " in dimension " + std::to_string(dim));
}

// A basis of the span, as reduced rows.
template <typename T>
std::vector<std::vector<T>> independent_rows(const std::vector<std::vector<T>>& vs, std::size_t dim) {
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;
  for (const auto& v : vs) {
    if (rows.size() == dim) break;
    std::vector<T> r = v;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      T f = r[pivots[k]];
      if (detail::is_zero(f)) continue;
      for (std::size_t j = 0; j < dim; ++j) r[j] -= f * rows[k][j];
    }
    std::size_t p = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (!detail::is_zero(r[j]) && (p == dim || detail::magnitude(r[j]) > detail::magnitude(r[p]))) p = j;
    if (p == dim) continue;
    T inv = T(1) / r[p];
    for (auto& x : r) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      T f = rows[k][p];
      if (detail::is_zero(f)) continue;
      for (std::size_t j = 0; j < dim; ++j) rows[k][j] -= f * r[j];
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
  }
  return rows;
}

template <typename T>
Matrix<T> rows_matrix(const std::vector<std::vector<T>>& rows, std::size_t dim) {
  Matrix<T> m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  return m;
}

// Distance in norm n from r to span(B) for n in {l1, sup}. The optimum of
// the linear program sits where k residuals vanish (l1), or where k+1
// residuals share one absolute value (sup); both kinds of point are tried.
template <typename T>
T polyhedral_distance(const std::vector<T>& r, const std::vector<std::vector<T>>& basis, NormTag n) {
  const std::size_t d = r.size();
  auto B = independent_rows(basis, d);
  const std::size_t k = B.size();
  if (k == 0) return norm_t(r, n);
  if (k == d) return T(0);
  T best = norm_t(r, n);
  auto residual_norm = [&](const std::vector<T>& c) {
    std::vector<T> res = r;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < d; ++i) res[i] -= c[j] * B[j][i];
    return norm_t(res, n);
  };
  for_each_subset(d, k, [&](const std::vector<std::size_t>& S) {
    Matrix<T> a(k, k);
    std::vector<T> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a(i, j) = B[j][S[i]];
      rhs[i] = r[S[i]];
    }
    auto inv = inverse(a);
    if (!inv) return;
    std::vector<T> c(k, T(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[i] += (*inv)(i, j) * rhs[j];
    best = std::min(best, residual_norm(c));
  });
  if (n == NormTag::sup) {
    for_each_subset(d, k + 1, [&](const std::vector<std::size_t>& S) {
      for (unsigned long sig = 0; sig < (1UL << k); ++sig) {
        Matrix<T> a(k + 1, k + 1);
        std::vector<T> rhs(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
          for (std::size_t j = 0; j < k; ++j) a(i, j) = B[j][S[i]];
          a(i, k) = (i > 0 && ((sig >> (i - 1)) & 1UL)) ? T(-1) : T(1);
          rhs[i] = r[S[i]];
        }
        auto sol = solve(a, rhs);
        if (!sol || rank(a) < k + 1) continue;
        sol->pop_back();
        best = std::min(best, residual_norm(*sol));
      }
    });
  }
  return best;
}

// max |x*(y)| over the vertices of {y : Fy = 0, |y| <= 1} for X = l1 or sup.
template <typename T>
T polyhedral_restricted_sup(const std::vector<T>& xstar, const std::vector<std::vector<T>>& F, NormTag n) {
  const std::size_t d = xstar.size();
  auto B = independent_rows(F, d);
  const std::size_t k = B.size();
  const std::size_t m = d - k;
  if (m == 0) return T(0);
  T best(0);
  if (n == NormTag::sup) {
    for_each_subset(d, m, [&](const std::vector<std::size_t>& S) {
      Matrix<T> a(d, d);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = B[i][j];
      for (std::size_t i = 0; i < m; ++i) a(k + i, S[i]) = T(1);
      auto inv = inverse(a);
      if (!inv) return;
      for (unsigned long sig = 0; sig < (1UL << (m - 1)); ++sig) {
        std::vector<T> y(d, T(0));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            T s = (j > 0 && ((sig >> (j - 1)) & 1UL)) ? T(-1) : T(1);
            y[i] += (*inv)(i, k + j) * s;
          }
        T len = norm_t(y, NormTag::sup);
        if (len > T(1) + (std::is_floating_point_v<T> ? T(1e-12) : T(0))) continue;
        best = std::max(best, detail::magnitude(dot_t(xstar, y)));
      }
    });
  } else {
    for_each_subset(d, m - 1, [&](const std::vector<std::size_t>& Z) {
      Matrix<T> a(k + Z.size(), d);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = B[i][j];
      for (std::size_t i = 0; i < Z.size(); ++i) a(k + i, Z[i]) = T(1);
      auto ns = nullspace(a);
      if (ns.size() != 1) return;
      T len = norm_t(ns.front(), NormTag::l1);
      best = std::max(best, T(detail::magnitude(dot_t(xstar, ns.front())) / len));
    });
  }
  return best;
}

Eigen::MatrixXd to_eigen_rows(const std::vector<DVec>& rows, std::size_t dim) {
  Eigen::MatrixXd m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

double euclid_distance(const DVec& r, const std::vector<DVec>& basis) {
  const std::size_t d = r.size();
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(d));
  if (basis.empty()) return v.norm();
  Eigen::MatrixXd A = to_eigen_rows(basis, d).transpose();
  Eigen::VectorXd c = A.completeOrthogonalDecomposition().solve(v);
  return (v - A * c).norm();
}

std::vector<DVec> to_double_all(const std::vector<RVec>& vs) {
  std::vector<DVec> out;
  for (const auto& v : vs) out.push_back(szt::to_double(v));
  return out;
}

Rational ceil_rational(const Rational& q) {
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  Rational r(std::uniform_int_distribution<long>(lo, hi)(rng), den);
  r.canonicalize();
  return r;
}

Rational sign_of(const Rational& x) { return x > 0 ? Rational(1) : x < 0 ? Rational(-1) : Rational(0); }

}  // namespace

void validate(const EuclidModel& m) {
  if (m.dim == 0 || m.dim > kMaxFdDim)
    throw std::invalid_argument("dimension " + std::to_string(m.dim) + " outside 1.." + std::to_string(kMaxFdDim));
}

DVec to_double(const RVec& v) {
  DVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

double norm_of(const DVec& v, NormTag n) { return norm_t(v, n); }

std::vector<RVec> annihilator(const std::vector<RVec>& vectors, std::size_t dim) {
  check_dims(vectors, dim, "annihilator");
  auto rows = independent_rows(vectors, dim);
  if (rows.empty()) {
    std::vector<RVec> full;
    for (std::size_t i = 0; i < dim; ++i) {
      RVec e(dim, Rational(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  return nullspace(rows_matrix(rows, dim));
}

std::vector<DVec> annihilator(const std::vector<DVec>& vectors, std::size_t dim) {
  check_dims(vectors, dim, "annihilator");
  std::vector<DVec> out;
  if (vectors.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      DVec e(dim, 0.0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  Eigen::MatrixXd m = to_eigen_rows(vectors, dim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double tol = 1e-9 * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol) ++r;
  for (Eigen::Index j = r; j < static_cast<Eigen::Index>(dim); ++j) {
    DVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = svd.matrixV()(static_cast<Eigen::Index>(i), j);
    out.push_back(std::move(v));
  }
  return out;
}

Rational dual_distance(const EuclidModel& m, const RVec& xstar, const std::vector<RVec>& basis) {
  validate(m);
  if (!m.exact()) throw std::domain_error("exact distances need an l1 or sup model");
  if (xstar.size() != m.dim) throw std::invalid_argument("functional has the wrong dimension");
  check_dims(basis, m.dim, "dual_distance");
  return polyhedral_distance(xstar, basis, m.dual_norm());
}

double dual_distance(const EuclidModel& m, const DVec& xstar, const std::vector<DVec>& basis) {
  validate(m);
  if (xstar.size() != m.dim) throw std::invalid_argument("functional has the wrong dimension");
  check_dims(basis, m.dim, "dual_distance");
  if (m.norm == NormTag::l2) return euclid_distance(xstar, basis);
  return polyhedral_distance(xstar, basis, m.dual_norm());
}

Rational restricted_sup(const EuclidModel& m, const RVec& xstar, const std::vector<RVec>& F) {
  validate(m);
  if (!m.exact()) throw std::domain_error("exact evaluation needs an l1 or sup model");
  if (xstar.size() != m.dim) throw std::invalid_argument("functional has the wrong dimension");
  check_dims(F, m.dim, "restricted_sup");
  return polyhedral_restricted_sup(xstar, F, m.norm);
}

double restricted_sup(const EuclidModel& m, const DVec& xstar, const std::vector<DVec>& F) {
  validate(m);
  if (xstar.size() != m.dim) throw std::invalid_argument("functional has the wrong dimension");
  check_dims(F, m.dim, "restricted_sup");
  // For l2 the supremum is the length of the component of x* orthogonal to F.
  if (m.norm == NormTag::l2) return euclid_distance(xstar, F);
  return polyhedral_restricted_sup(xstar, F, m.norm);
}

SphereNet sphere_net(const EuclidModel& m, const std::vector<RVec>& F, const Rational& delta, std::size_t budget) {
  validate(m);
  check_dims(F, m.dim, "sphere_net");
  if (delta <= 0) throw std::invalid_argument("net mesh must be positive");
  auto B = independent_rows(F, m.dim);
  const std::size_t k = B.size();
  if (k == 0) throw std::invalid_argument("sphere_net: the subspace is zero");
  if (k > 3) throw std::invalid_argument("sphere_net supports subspaces of dimension at most 3");
  const NormTag dn = m.dual_norm();
  SphereNet net;
  net.delta = delta;

  auto add_exact = [&](RVec f) {
    Rational len = vec_norm(f, dn);
    for (auto& x : f) x /= len;
    net.points.push_back(to_double(f));
    net.exact_points.push_back(std::move(f));
  };
  auto add_double = [&](DVec f) {
    double len = norm_t(f, dn);
    for (auto& x : f) x /= len;
    net.points.push_back(std::move(f));
  };
  auto add = [&](const RVec& f) {
    if (m.exact())
      add_exact(f);
    else
      add_double(to_double(f));
  };

  if (delta >= 2) {
    net.mesh = "single";
    add(B[0]);
    return net;
  }
  if (k == 1) {
    net.mesh = "pair";
    RVec neg = B[0];
    for (auto& x : neg) x = -x;
    add(B[0]);
    add(neg);
    return net;
  }
  if (dn == NormTag::l2 && k == 2) {
    net.mesh = "angular";
    Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(to_double(B[0]).data(), static_cast<Eigen::Index>(m.dim));
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(to_double(B[1]).data(), static_cast<Eigen::Index>(m.dim));
    u.normalize();
    v -= v.dot(u) * u;
    v.normalize();
    double step = 2 * std::asin(delta.get_d() / 2);
    auto n = static_cast<std::size_t>(std::ceil(2 * std::numbers::pi / step));
    if (n > budget) throw std::runtime_error("sphere_net: mesh needs more than the point budget");
    for (std::size_t i = 0; i < n; ++i) {
      double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      Eigen::VectorXd p = std::cos(a) * u + std::sin(a) * v;
      net.points.emplace_back(p.data(), p.data() + p.size());
    }
    return net;
  }

  // Cube-face lattice on coefficient space. For f = sum c_j b_j with
  // |c|_inf = 1 and a lattice point g at distance <= 1/M, the normalized
  // images differ by at most 2 |B(c-g)| / |Bc| <= 2 L beta / M, where L bounds
  // |Bc| on the cube and 1/beta bounds it below on the cube surface.
  net.mesh = "cube-face";
  Rational M;
  std::vector<DVec> ortho;  // l2 only: orthonormal basis, so L = sqrt(k), beta = 1
  if (m.exact()) {
    // Pivot coordinates whose inverse has the smallest entries keep beta small.
    std::vector<std::size_t> piv;
    Rational best = -1;
    for_each_subset(m.dim, k, [&](const std::vector<std::size_t>& P) {
      Matrix<Rational> C(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) C(i, j) = B[i][P[j]];
      auto inv = inverse(C);
      if (!inv) return;
      Rational worst = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) worst = std::max(worst, abs((*inv)(i, j)));
      if (best < 0 || worst < best) {
        best = worst;
        piv = P;
      }
    });
    Matrix<Rational> C(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) C(i, j) = B[i][piv[j]];
    Matrix<Rational> left = *inverse(C.transpose());
    Rational L = 0, beta = 0;
    for (unsigned long sig = 0; sig < (1UL << k); ++sig) {
      RVec f(m.dim, Rational(0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.dim; ++i) f[i] += ((sig >> j) & 1UL ? -1 : 1) * B[j][i];
      L = std::max(L, vec_norm(f, dn));
    }
    for (std::size_t j = 0; j < k; ++j) {
      RVec row(m.dim, Rational(0));
      for (std::size_t i = 0; i < k; ++i) row[piv[i]] = left(j, i);
      beta = std::max(beta, vec_norm(row, m.norm));
    }
    M = ceil_rational(2 * L * beta / delta);
  } else {
    Eigen::MatrixXd A = to_eigen_rows(to_double_all(B), m.dim).transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m.dim),
                                                                      static_cast<Eigen::Index>(k));
    for (std::size_t j = 0; j < k; ++j) {
      DVec q(m.dim);
      for (std::size_t i = 0; i < m.dim; ++i) q[i] = Q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      ortho.push_back(std::move(q));
    }
    // A little slack over the floating bound.
    double bound = 2 * std::sqrt(static_cast<double>(k)) / delta.get_d() * (1 + 1e-9);
    M = Rational(static_cast<long>(std::ceil(bound)));
  }
  if (M < 1) M = 1;
  double count = 2.0 * static_cast<double>(k) * std::pow(M.get_d() + 1, static_cast<double>(k - 1));
  if (count > static_cast<double>(budget))
    throw std::runtime_error("sphere_net: mesh of " + std::to_string(static_cast<long long>(count)) +
                             " points exceeds the budget");
  const long steps = M.get_num().get_si();
  std::vector<Rational> grid;
  for (long i = 0; i <= steps; ++i) grid.push_back(Rational(2 * i, 1) / M - 1);
  for (std::size_t face = 0; face < k; ++face)
    for (int s : {1, -1}) {
      std::vector<std::size_t> idx(k - 1, 0);
      while (true) {
        RVec c(k);
        for (std::size_t j = 0, t = 0; j < k; ++j) c[j] = j == face ? Rational(s) : grid[idx[t++]];
        if (m.exact()) {
          RVec f(m.dim, Rational(0));
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < m.dim; ++i) f[i] += c[j] * B[j][i];
          add_exact(std::move(f));
        } else {
          DVec f(m.dim, 0.0);
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < m.dim; ++i) f[i] += c[j].get_d() * ortho[j][i];
          add_double(std::move(f));
        }
        std::size_t t = 0;
        while (t < idx.size() && ++idx[t] == grid.size()) idx[t++] = 0;
        if (t == idx.size()) break;
      }
    }
  return net;
}

double net_sampling_gap(const EuclidModel& m, const std::vector<RVec>& F, const SphereNet& net, std::size_t samples,
                        std::uint64_t seed) {
  auto B = to_double_all(independent_rows(F, m.dim));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const NormTag dn = m.dual_norm();
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    DVec f(m.dim, 0.0);
    for (const auto& b : B) {
      double c = gauss(rng);
      for (std::size_t i = 0; i < m.dim; ++i) f[i] += c * b[i];
    }
    double len = norm_t(f, dn);
    if (len == 0) continue;
    for (auto& x : f) x /= len;
    double best = std::numeric_limits<double>::infinity();
    DVec diff(m.dim);
    for (const auto& p : net.points) {
      for (std::size_t i = 0; i < m.dim; ++i) diff[i] = f[i] - p[i];
      best = std::min(best, norm_t(diff, dn));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

LowerLemmaReport lowerlemma_check(const LowerLemmaInput& in, std::size_t samples) {
  const EuclidModel& m = in.model;
  validate(m);
  if (in.nu <= 0) throw std::invalid_argument("nu must be positive");
  LowerLemmaReport rep;
  rep.exact = m.exact();
  rep.net_size = in.net.points.size();
  const NormTag dn = m.dual_norm();
  const Rational delta = in.nu / (4 + 2 * in.nu);
  const Rational need = (4 + in.nu) / (4 + 2 * in.nu);
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };

  if (in.net.delta > delta) fail("net mesh " + to_string(in.net.delta) + " is coarser than nu/(4+2nu)");
  if (in.y.size() != in.net.points.size()) fail("one vector y per net point is required");
  double gap = net_sampling_gap(m, in.F, in.net, samples, 0x5eed);
  if (gap > delta.get_d() + kFdTolerance) fail("sampled point at distance " + std::to_string(gap) + " from the net");

  if (rep.exact) {
    if (in.y_exact.size() != in.net.exact_points.size() || in.xstar_exact.size() != m.dim)
      throw std::invalid_argument("exact model needs exact net, vectors and functional");
    auto Fb = independent_rows(in.F, m.dim);
    for (std::size_t i = 0; i < in.net.exact_points.size(); ++i) {
      const RVec& f = in.net.exact_points[i];
      const RVec& y = in.y_exact[i];
      if (vec_norm(f, dn) != 1) fail("net point " + std::to_string(i) + " is off the sphere");
      auto withf = Fb;
      withf.push_back(f);
      if (independent_rows(withf, m.dim).size() != Fb.size()) fail("net point " + std::to_string(i) + " is outside F");
      if (vec_norm(y, m.norm) != 1) fail("y " + std::to_string(i) + " is off the unit sphere");
      if (abs(dot(f, y)) < need) fail("|f(y)| below (4+nu)/(4+2nu) at net point " + std::to_string(i));
      if (dot(in.xstar_exact, y) != 0) fail("x* does not vanish on y " + std::to_string(i));
    }
    rep.sup_exact = restricted_sup(m, in.xstar_exact, in.F);
    rep.xnorm_exact = vec_norm(in.xstar_exact, dn);
    rep.margin_exact = rep.sup_exact - rep.xnorm_exact / (2 + in.nu);
    rep.sup = rep.sup_exact.get_d();
    rep.xnorm = rep.xnorm_exact.get_d();
    rep.margin = rep.margin_exact.get_d();
  } else {
    if (in.xstar.size() != m.dim) throw std::invalid_argument("functional has the wrong dimension");
    auto Fd = to_double_all(in.F);
    double xn = norm_t(in.xstar, dn);
    for (std::size_t i = 0; i < in.net.points.size() && i < in.y.size(); ++i) {
      const DVec& f = in.net.points[i];
      const DVec& y = in.y[i];
      if (std::abs(norm_t(f, dn) - 1) > kFdTolerance) fail("net point " + std::to_string(i) + " is off the sphere");
      if (euclid_distance(f, Fd) > kFdTolerance) fail("net point " + std::to_string(i) + " is outside F");
      if (std::abs(norm_t(y, m.norm) - 1) > kFdTolerance) fail("y " + std::to_string(i) + " is off the unit sphere");
      if (std::abs(dot_t(f, y)) < need.get_d() - kFdTolerance)
        fail("|f(y)| below (4+nu)/(4+2nu) at net point " + std::to_string(i));
      if (std::abs(dot_t(in.xstar, y)) > kFdTolerance * (1 + xn)) fail("x* does not vanish on y " + std::to_string(i));
    }
    rep.sup = restricted_sup(m, in.xstar, Fd);
    rep.xnorm = xn;
    rep.margin = rep.sup - rep.xnorm / (2 + in.nu.get_d());
  }
  rep.preconditions_ok = rep.failures.empty();
  return rep;
}

FdInstance random_fd_instance(std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  FdInstance inst;
  inst.seed = seed;
  const NormTag tags[] = {NormTag::l1, NormTag::l2, NormTag::sup};
  inst.model.norm = tags[rng() % 3];
  inst.model.dim = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_dim))(rng);
  const std::size_t d = inst.model.dim;
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, d - 1))(rng);
  // Three-dimensional F gets a coarser mesh to keep the nets small.
  if (k < 3) {
    const Rational pool[] = {Rational(1, 2), Rational(1), Rational(2)};
    inst.nu = pool[rng() % 3];
  } else {
    inst.nu = rng() % 2 ? Rational(2) : Rational(3);
  }
  if (inst.model.norm == NormTag::l2) {
    // Rows of the rational rotation (I - S)(I + S)^-1 with S skew.
    RatMatrix S(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        S(i, j) = random_rational(rng, -2, 2, 2);
        S(j, i) = -S(i, j);
      }
    RatMatrix I = RatMatrix::identity(d), minus(d, d), plus(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        minus(i, j) = I(i, j) - S(i, j);
        plus(i, j) = I(i, j) + S(i, j);
      }
    RatMatrix Q = minus * *inverse(plus);
    for (std::size_t j = 0; j < k; ++j) inst.F.push_back(Q.row(j));
  } else {
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t j = 0; j < k; ++j) {
      RVec row(d, Rational(0));
      row[perm[j]] = rng() % 2 ? 1 : -1;
      inst.F.push_back(std::move(row));
    }
  }
  return inst;
}

LowerLemmaInput materialize(const FdInstance& inst) {
  const EuclidModel& m = inst.model;
  validate(m);
  check_dims(inst.F, m.dim, "instance F");
  if (inst.nu <= 0) throw std::invalid_argument("nu must be positive");
  LowerLemmaInput in;
  in.model = m;
  in.nu = inst.nu;
  in.F = inst.F;
  in.net = sphere_net(m, inst.F, inst.nu / (4 + 2 * inst.nu));
  std::mt19937_64 rng(inst.seed ^ 0x9e3779b97f4a7c15ULL);

  // One fixed direction w of F_perp; every y leans along it.
  auto Fb = independent_rows(inst.F, m.dim);
  std::vector<RVec> perp = Fb.empty() ? std::vector<RVec>{} : nullspace(rows_matrix(Fb, m.dim));
  const Rational room = inst.nu / (4 + inst.nu);

  if (m.exact()) {
    RVec w = perp.empty() ? RVec(m.dim, Rational(0)) : perp.front();
    Rational wn = vec_norm(w, m.norm);
    for (const auto& f : in.net.exact_points) {
      RVec y(m.dim, Rational(0));
      if (m.norm == NormTag::l1) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < m.dim; ++i)
          if (abs(f[i]) > abs(f[best])) best = i;
        y[best] = sign_of(f[best]);
      } else {
        for (std::size_t i = 0; i < m.dim; ++i) y[i] = sign_of(f[i]);
      }
      if (wn != 0) {
        Rational s = random_rational(rng, -8, 8, 8) * room / wn;
        for (std::size_t i = 0; i < m.dim; ++i) y[i] += s * w[i];
      }
      Rational len = vec_norm(y, m.norm);
      for (auto& x : y) x /= len;
      in.y.push_back(to_double(y));
      in.y_exact.push_back(std::move(y));
    }
    auto ann = annihilator(in.y_exact, m.dim);
    in.xstar_exact.assign(m.dim, Rational(0));
    for (const auto& a : ann) {
      Rational c = random_rational(rng, -3, 3, 1);
      for (std::size_t i = 0; i < m.dim; ++i) in.xstar_exact[i] += c * a[i];
    }
    in.xstar = to_double(in.xstar_exact);
  } else {
    DVec w = perp.empty() ? DVec(m.dim, 0.0) : to_double(perp.front());
    double wn = norm_t(w, NormTag::l2);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (const auto& f : in.net.points) {
      DVec y = f;
      if (wn > 0) {
        double s = unit(rng) * room.get_d() / wn;
        for (std::size_t i = 0; i < m.dim; ++i) y[i] += s * w[i];
      }
      double len = norm_t(y, NormTag::l2);
      for (auto& x : y) x /= len;
      in.y.push_back(std::move(y));
    }
    auto ann = annihilator(in.y, m.dim);
    in.xstar.assign(m.dim, 0.0);
    for (const auto& a : ann) {
      double c = unit(rng) * 3;
      for (std::size_t i = 0; i < m.dim; ++i) in.xstar[i] += c * a[i];
    }
  }
  return in;
}

LowerLemmaReport run_lower_instance(const FdInstance& inst, std::size_t samples) {
  return lowerlemma_check(materialize(inst), samples);
}

void check_chain_increasing(const std::vector<std::vector<RVec>>& chain, std::size_t dim) {
  for (const auto& B : chain) check_dims(B, dim, "kk chain");
  for (std::size_t n = 1; n < chain.size(); ++n) {
    auto both = chain[n - 1];
    both.insert(both.end(), chain[n].begin(), chain[n].end());
    if (independent_rows(both, dim).size() != independent_rows(chain[n], dim).size())
      throw std::invalid_argument("chain is not increasing at B_" + std::to_string(n + 1));
  }
}

double kk_norm(const EuclidModel& m, const DVec& xstar, const std::vector<std::vector<RVec>>& chain, double c) {
  validate(m);
  if (!(c > 1)) throw std::invalid_argument("kk_norm needs c > 1");
  check_chain_increasing(chain, m.dim);
  double total = norm_t(xstar, m.dual_norm()), weight = 1;
  for (const auto& B : chain) {
    weight /= 2;
    total += (c - 1) * weight * dual_distance(m, xstar, to_double_all(B));
  }
  return total;
}

Rational kk_norm(const EuclidModel& m, const RVec& xstar, const std::vector<std::vector<RVec>>& chain,
                 const Rational& c) {
  validate(m);
  if (!m.exact()) throw std::domain_error("exact kk_norm needs an l1 or sup model");
  if (c <= 1) throw std::invalid_argument("kk_norm needs c > 1");
  check_chain_increasing(chain, m.dim);
  Rational total = vec_norm(xstar, m.dual_norm()), weight = 1;
  for (const auto& B : chain) {
    weight /= 2;
    total += (c - 1) * weight * dual_distance(m, xstar, B);
  }
  return total;
}

KkInstance random_kk_instance(std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  KkInstance inst;
  const NormTag tags[] = {NormTag::l1, NormTag::l2, NormTag::sup};
  inst.model.norm = tags[rng() % 3];
  inst.model.dim = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_dim))(rng);
  const std::size_t d = inst.model.dim;
  std::vector<RVec> acc;
  const std::size_t len = 1 + rng() % 4;
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t extra = rng() % 3; extra > 0; --extra) {
      RVec v(d);
      for (auto& x : v) x = random_rational(rng, -3, 3, 1);
      acc.push_back(std::move(v));
    }
    inst.chain.push_back(acc);
  }
  inst.xstar.resize(d);
  for (auto& x : inst.xstar) x = random_rational(rng, -6, 6, 2);
  return inst;
}

}  // namespace szt
