#include "nchs/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nchs/bounds.hpp"

namespace nchs {
namespace {

constexpr int kSweepCap = 64;

DMatrix power_sum(const MatTupleD& xs, int exponent) {
  DMatrix sum(xs.k, xs.k);
  for (const DMatrix& x : xs.mats) {
    DMatrix p = DMatrix::identity(xs.k);
    for (int e = 0; e < exponent; ++e) p = p * x;
    sum += p;
  }
  return sum;
}

} // namespace

MatTupleD random_sym_tuple(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw std::invalid_argument("tuple needs n >= 1 and k >= 1");
  SplitMix64 rng(seed);
  MatTupleD xs;
  xs.n = n;
  xs.k = k;
  for (int m = 0; m < n; ++m) {
    DMatrix x(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        const double v = rng.uniform_pm1();
        x(i, j) = v;
        x(j, i) = v;
      }
    xs.mats.push_back(std::move(x));
  }
  return xs;
}

DMatrix to_double_matrix(const RatMatrix& a) {
  DMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = to_double(a(i, j));
  out.labels = a.labels;
  return out;
}

std::vector<double> jacobi_eigenvalues(DMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
  const int n = a.rows();
  double frob = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  frob = std::sqrt(frob);
  std::vector<double> eigs(static_cast<std::size_t>(n));
  if (frob == 0.0) return eigs;
  const double threshold = 1e-12 * frob;
  bool converged = false;
  for (int sweep = 0; sweep < kSweepCap && !converged; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= threshold) {
      converged = true;
      break;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (a(i, j) == 0.0) continue;
        const double tau = (a(j, j) - a(i, i)) / (2.0 * a(i, j));
        const double sign = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double aki = a(k, i);
          const double akj = a(k, j);
          a(k, i) = c * aki - s * akj;
          a(k, j) = s * aki + c * akj;
        }
        for (int k = 0; k < n; ++k) {
          const double aik = a(i, k);
          const double ajk = a(j, k);
          a(i, k) = c * aik - s * ajk;
          a(j, k) = s * aik + c * ajk;
        }
      }
  }
  if (!converged) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) > threshold)
      throw std::runtime_error("eigenvalue iteration failed to converge");
  }
  for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double min_eig_sym(const DMatrix& a) { return jacobi_eigenvalues(a).front(); }

double max_eig_sym(const DMatrix& a) { return jacobi_eigenvalues(a).back(); }

double psd_tolerance(double max_eig_power) { return 1e-8 * (1.0 + max_eig_power); }

GapReport check_lower_bound(int n, int d, const MatTupleD& xs, const Rat& mu) {
  if (xs.n != n) throw std::invalid_argument("tuple size disagrees with n");
  GapReport report;
  report.n = n;
  report.d = d;
  report.k = xs.k;
  const DMatrix h = eval_nc(nc_complete_homogeneous(n, 2 * d), xs);
  const DMatrix power = power_sum(xs, 2 * d);
  const DMatrix gap = h - to_double(mu) * power;
  report.min_eig_gap = min_eig_sym(gap);
  report.max_eig_power = max_eig_sym(power);
  report.entry11_gap = gap(0, 0);
  return report;
}

MatTupleD exa22_family(double t) {
  const double upper = std::pow(2.0 / 61.0, 0.25);
  if (!(t >= 0.01 && t < upper))
    throw std::domain_error("family parameter outside [0.01, (2/61)^(1/4))");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double root = std::sqrt(2.0 * std::pow(t, -4.0) - 61.0);
  MatTupleD xs;
  xs.n = 2;
  xs.k = 2;
  DMatrix x1(2, 2);
  x1(0, 0) = phi * t;
  x1(0, 1) = phi * t;
  x1(1, 0) = phi * t;
  x1(1, 1) = phi * t * (root - 3.0) / (2.0 * phi * phi);
  DMatrix x2(2, 2);
  const double scale = -t / phi;
  x2(0, 0) = scale;
  x2(0, 1) = scale;
  x2(1, 0) = scale;
  x2(1, 1) = scale * (root - 3.0) * (phi * phi) / 2.0;
  xs.mats = {x1, x2};
  return xs;
}

NoschurReport noschur_counterexample() {
  CPoly square_product(2);
  square_product.add_term(Monomial{{2, 2}}, Rat(1));
  const NCPoly lifted = symmetrized_lift(square_product);
  MatTupleQ xs;
  xs.n = 2;
  xs.k = 2;
  RatMatrix x1(2, 2);
  x1(1, 1) = 1;
  RatMatrix x2(2, 2);
  x2(0, 0) = 2;
  x2(0, 1) = 1;
  x2(1, 0) = 1;
  xs.mats = {x1, x2};
  NoschurReport report;
  report.value = eval_nc(lifted, xs);
  RatMatrix expected(2, 2);
  expected(0, 0) = frac(1, 6);
  expected(0, 1) = frac(2, 6);
  expected(1, 0) = frac(2, 6);
  expected(1, 1) = frac(3, 6);
  if (!(report.value == expected))
    throw std::logic_error("lifted square product evaluated to an unexpected matrix");
  report.min_eig = min_eig_sym(to_double_matrix(report.value));
  return report;
}

KernelProbe kernel_probe(int n, int d, const MatTupleD& xs, double tol) {
  if (xs.n != n) throw std::invalid_argument("tuple size disagrees with n");
  const DMatrix h = eval_nc(nc_complete_homogeneous(n, 2 * d), xs);
  const DMatrix gap = h - to_double(mu_closed(n, d)) * power_sum(xs, 2 * d);
  const DMatrix squares = power_sum(xs, 2);
  KernelProbe probe;
  for (double eig : jacobi_eigenvalues(gap))
    if (std::abs(eig) <= tol) ++probe.gap_kernel_dim;
  for (double eig : jacobi_eigenvalues(squares))
    if (std::abs(eig) <= tol) ++probe.common_kernel_dim;
  probe.agree = probe.gap_kernel_dim == probe.common_kernel_dim;
  return probe;
}

} // namespace nchs
