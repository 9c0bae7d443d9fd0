#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nchs/matrix.hpp"
#include "nchs/polynomial.hpp"

namespace nchs {

// Fixed 64-bit generator (splitmix-style) so every language binding can
// reproduce the exact same streams. The update adds the golden-ratio constant
// to the state and scrambles it with two xor-shift multiplies; uniform_pm1
// maps the top 53 bits onto [-1, 1).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform_pm1() {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }
};

// n symmetric k x k matrices; entries drawn row-major on the upper triangle,
// matrix by matrix, then mirrored. Bit-reproducible for a given (n, k, seed).
MatTupleD random_sym_tuple(int n, int k, std::uint64_t seed);

DMatrix to_double_matrix(const RatMatrix& a);

// Eigenvalues in ascending order via cyclic Jacobi rotations; converges to a
// relative off-diagonal residual of 1e-12 and throws if a sweep cap is hit.
std::vector<double> jacobi_eigenvalues(DMatrix a);

double min_eig_sym(const DMatrix& a);
double max_eig_sym(const DMatrix& a);

// Acceptance threshold for "numerically PSD", relative to the size of the
// comparison form.
double psd_tolerance(double max_eig_power);

struct GapReport {
  int n = 0;
  int d = 0;
  int k = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> t;
  double min_eig_gap = 0.0;   // smallest eigenvalue of the shaved evaluation
  double max_eig_power = 0.0; // largest eigenvalue of the pure-power sum
  double entry11_gap = 0.0;   // top-left entry of the shaved evaluation
};

GapReport check_lower_bound(int n, int d, const MatTupleD& xs, const Rat& mu);

// The explicit 2x2 pair family exhibiting the gap's decay; needs
// 0.01 <= t < (2/61)^(1/4) to keep the square root well conditioned.
MatTupleD exa22_family(double t);

struct NoschurReport {
  RatMatrix value; // exact evaluation of the lifted square product
  double min_eig;
};

// Evaluates the symmetrized lift of x1^2 x2^2 at a fixed integer pair where
// it dips below zero, exactly; the numeric minimum eigenvalue comes along.
NoschurReport noschur_counterexample();

struct KernelProbe {
  int gap_kernel_dim = 0;
  int common_kernel_dim = 0;
  bool agree = false;
};

// Compares the numeric kernel of the shaved evaluation (at the sharp
// constant) with the common kernel of the tuple, both at threshold tol.
KernelProbe kernel_probe(int n, int d, const MatTupleD& xs, double tol);

} // namespace nchs
