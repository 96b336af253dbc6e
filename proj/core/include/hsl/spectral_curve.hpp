#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hsl/lattice.hpp"

namespace hsl {

struct RootCollisionError : std::runtime_error {
  explicit RootCollisionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Quantities attached to a fixed set of spectral roots:
//   VN          = prod_{k<l} (s_l - s_k)
//   Delta[j]    = Vandermonde determinant of the nodes {1, s_1..s_N} \ {s_j}
//   DeltaTilde[j] = same for {s_1..s_N, -1} \ {s_j}
//   weight[j]   = 1 / prod_{m != j} (s_j - s_m)      (barycentric weights)
//   theta_inf_coeff[j] = prod_{m != j} 1/(s_m - s_j)
//   theta_zero_coeff[j] = theta_inf_coeff[j] / s_j
//   prod_sq[j]  = prod_{k != j} |s_k - s_j|^2
//   p_coeffs    = coefficients of p(lambda) = prod (lambda - s_j), p_coeffs[k] on lambda^k
struct VandermondeData {
  cplx VN;
  std::vector<cplx> Delta;
  std::vector<cplx> DeltaTilde;
  std::vector<cplx> weight;
  std::vector<cplx> theta_inf_coeff;
  std::vector<cplx> theta_zero_coeff;
  std::vector<double> prod_sq;
  std::vector<cplx> p_coeffs;
  cplx p_at_1;
  cplx p_at_minus_1;
  cplx p_at_0;
};

// The roots s_j = 2*gamma_j/beta0 of the minimal polynomial p(lambda).
// Simple, unit modulus, s_{j+N/2} = -s_j, none equal to +/-1.
struct SpectralRoots {
  std::vector<cplx> s;

  explicit SpectralRoots(std::vector<cplx> roots);

  int size() const { return static_cast<int>(s.size()); }
  int half() const { return size() / 2; }
  // the involution s_j -> -s_j as an index permutation
  int tau(int j) const { return (j + half()) % size(); }

  const VandermondeData& vandermonde() const { return vdm_; }

 private:
  VandermondeData vdm_;
};

SpectralRoots roots_from_frequencies(const FrequencySet& freqs,
                                     const MaslovClass& maslov);

const VandermondeData& vandermonde(const SpectralRoots& roots);

cplx evaluate_p(const SpectralRoots& roots, cplx lam);

// Homogeneous coordinates on CP^{N-1}; the stored representative has unit
// Euclidean norm.
struct SpectralPoint {
  std::vector<cplx> t;

  explicit SpectralPoint(std::vector<cplx> coords);

  int size() const { return static_cast<int>(t.size()); }
};

// Fubini-Study chordal distance between projective points.
double projective_distance(std::span<const cplx> a, std::span<const cplx> b);

// The unique polynomial of degree <= N-1 with phi(s_j) = t_j * VN,
// evaluated in barycentric Lagrange form.
cplx phi(const SpectralRoots& roots, std::span<const cplx> t, cplx lam);

// [h] -> [h(s_1), ..., h(s_N)]
SpectralPoint iota(const SpectralRoots& roots, std::span<const cplx> h);

// Coefficients h_0..h_{N-1} of phi(lambda, t)/VN, i.e. the solution of the
// Vandermonde system  sum_k h_k s_j^k = t_j  (Bjorck-Pereyra elimination).
std::vector<cplx> iota_inverse(const SpectralRoots& roots,
                               std::span<const cplx> t);

// Hyperplane functionals: theta_infinity vanishes iff deg phi < N-1,
// theta_zero vanishes iff phi(0, t) = 0.
cplx theta_infinity(const SpectralRoots& roots, std::span<const cplx> t);
cplx theta_zero(const SpectralRoots& roots, std::span<const cplx> t);

struct CurveReport {
  int N = 0;
  int full_genus = 0;
  std::vector<int> support;
  int N1 = 0;
  int stratum_genus = 0;
  std::vector<int> tau_permutation;
};

CurveReport curve_report(const SpectralRoots& roots, const SpectralPoint& t);

}  // namespace hsl
