#include "hsl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hsl {

namespace {

constexpr double kPi = std::numbers::pi;

double round_gap(double x) { return std::abs(x - std::round(x)); }

// Condition number of the symmetric positive definite 2x2 Gram matrix.
double gram_condition(double g11, double g12, double g22) {
  const double tr = g11 + g22;
  const double det = g11 * g22 - g12 * g12;
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  const double lmax = tr / 2.0 + disc;
  const double lmin = tr / 2.0 - disc;
  if (lmin <= 0.0) return std::numeric_limits<double>::infinity();
  return lmax / lmin;
}

}  // namespace

double real_pairing(cplx z, cplx w) { return std::real(z * std::conj(w)); }

Lattice::Lattice(cplx t1, cplx t2) : tau1(t1), tau2(t2) {
  if (!(area() > 0.0)) {
    throw std::invalid_argument(
        "Lattice basis must be oriented: Im(conj(tau1)*tau2) > 0");
  }
}

std::pair<cplx, cplx> dual_basis(const Lattice& lattice) {
  const double g11 = real_pairing(lattice.tau1, lattice.tau1);
  const double g12 = real_pairing(lattice.tau1, lattice.tau2);
  const double g22 = real_pairing(lattice.tau2, lattice.tau2);
  const double det = g11 * g22 - g12 * g12;
  // dual_i = a*tau1 + b*tau2 with Gram * (a,b)^T = e_i
  const cplx d1 = (g22 * lattice.tau1 - g12 * lattice.tau2) / det;
  const cplx d2 = (-g12 * lattice.tau1 + g11 * lattice.tau2) / det;
  return {d1, d2};
}

bool in_dual_lattice(const Lattice& lattice, cplx z, double tol) {
  return round_gap(real_pairing(z, lattice.tau1)) <= tol &&
         round_gap(real_pairing(z, lattice.tau2)) <= tol;
}

MaslovClass::MaslovClass(const Lattice& lattice, cplx b) : beta0(b) {
  if (std::abs(b) == 0.0) {
    throw std::invalid_argument("Maslov class must be non-zero");
  }
  if (!in_dual_lattice(lattice, b)) {
    throw std::invalid_argument(
        "Maslov class must pair integrally with the lattice basis");
  }
}

double lagrangian_angle(const MaslovClass& maslov, cplx z) {
  return 2.0 * kPi * real_pairing(maslov.beta0, z);
}

FrequencySet enumerate_maslov_frequencies(const Lattice& lattice,
                                          const MaslovClass& maslov) {
  const cplx beta0 = maslov.beta0;
  const cplx half_beta = beta0 / 2.0;
  const double radius2 = std::norm(half_beta);
  const auto [d1, d2] = dual_basis(lattice);

  const double g11 = real_pairing(lattice.tau1, lattice.tau1);
  const double g12 = real_pairing(lattice.tau1, lattice.tau2);
  const double g22 = real_pairing(lattice.tau2, lattice.tau2);
  const double kappa = gram_condition(g11, g12, g22);
  const double dual_norm = std::max(std::abs(d1), std::abs(d2));
  const double primal_norm = std::max(std::abs(lattice.tau1), std::abs(lattice.tau2));
  // |gamma - beta0/2| <= |beta0|, and the integer coordinate of a vector w
  // is <w, tau_i>, so |beta0| * max|tau_i| always covers the search box.
  const double reach = std::max(std::abs(beta0) * dual_norm * kappa,
                                std::abs(beta0) * primal_norm);
  const long bound = static_cast<long>(std::ceil(reach)) + 1;

  const double circle_tol = 1e-9 * std::norm(beta0);
  const double exclusion_tol = 1e-9 * std::abs(beta0);

  std::vector<cplx> upper;  // representatives with arg(s_j) in (0, pi)
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const cplx gamma = half_beta + static_cast<double>(a) * d1 +
                         static_cast<double>(b) * d2;
      if (std::abs(std::norm(gamma) - radius2) > circle_tol) continue;
      if (std::abs(gamma - half_beta) <= exclusion_tol) continue;
      if (std::abs(gamma + half_beta) <= exclusion_tol) continue;
      const cplx s = 2.0 * gamma / beta0;
      const double theta = std::arg(s);
      if (theta <= 0.0) continue;  // keep one representative per antipodal pair
      upper.push_back(gamma);
    }
  }

  if (upper.empty()) {
    throw EmptyFrequencySetError(
        "no non-trivial Maslov frequencies: the coset circle contains only "
        "+/- beta0/2");
  }

  std::sort(upper.begin(), upper.end(), [&](cplx ga, cplx gb) {
    return std::arg(2.0 * ga / beta0) < std::arg(2.0 * gb / beta0);
  });

  FrequencySet out;
  out.gammas = upper;
  for (const cplx g : upper) out.gammas.push_back(-g);
  return out;
}

MaslovIndices maslov_indices(const FrequencySet& freqs, const Lattice& lattice) {
  MaslovIndices out;
  out.integral = true;
  out.lm.reserve(freqs.gammas.size());
  for (const cplx g : freqs.gammas) {
    const double l = -real_pairing(g, lattice.tau1);
    const double m = -real_pairing(g, lattice.tau2);
    if (round_gap(l) > 1e-9 || round_gap(m) > 1e-9) out.integral = false;
    out.lm.emplace_back(l, m);
  }
  return out;
}

}  // namespace hsl
