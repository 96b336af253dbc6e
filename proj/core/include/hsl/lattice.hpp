#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hsl {

using cplx = std::complex<double>;

// Real inner product on C viewed as R^2: <z,w> = Re(z * conj(w)).
double real_pairing(cplx z, cplx w);

// A lattice Gamma = Z*tau1 + Z*tau2 with oriented, non-degenerate basis.
struct Lattice {
  cplx tau1;
  cplx tau2;

  Lattice(cplx t1, cplx t2);

  // Area of the fundamental domain, Im(conj(tau1)*tau2).
  double area() const { return std::imag(std::conj(tau1) * tau2); }
};

// Dual basis (tau1*, tau2*) with real_pairing(taui*, tauj) = delta_ij,
// obtained by solving the 2x2 Gram system.
std::pair<cplx, cplx> dual_basis(const Lattice& lattice);

// Returns true when real_pairing(z, tau1) and real_pairing(z, tau2) are
// both integral, i.e. z lies in the dual lattice.
bool in_dual_lattice(const Lattice& lattice, cplx z, double tol = 1e-9);

// The class beta0 in the dual lattice; fixes the Lagrangian angle
// beta(z) = 2*pi*<beta0,z>.
struct MaslovClass {
  cplx beta0;

  MaslovClass(const Lattice& lattice, cplx b);
};

double lagrangian_angle(const MaslovClass& maslov, cplx z);

struct EmptyFrequencySetError : std::runtime_error {
  explicit EmptyFrequencySetError(const std::string& what)
      : std::runtime_error(what) {}
};

// The frequency set: all points of Gamma* + beta0/2 on the circle of
// radius |beta0|/2, minus {beta0/2, -beta0/2}.  Stored so that
// gamma[j + N/2] = -gamma[j]; the first half is ordered by the principal
// argument of s_j = 2*gamma_j/beta0 in [0, pi).
struct FrequencySet {
  std::vector<cplx> gammas;

  int size() const { return static_cast<int>(gammas.size()); }
  int half() const { return size() / 2; }
};

FrequencySet enumerate_maslov_frequencies(const Lattice& lattice,
                                          const MaslovClass& maslov);

// Indices l_j = -<gamma_j, tau1>, m_j = -<gamma_j, tau2>.  Integers when
// beta0/2 lies in the dual lattice, half-integers otherwise (flagged).
struct MaslovIndices {
  std::vector<std::pair<double, double>> lm;
  bool integral = false;
};

MaslovIndices maslov_indices(const FrequencySet& freqs, const Lattice& lattice);

}  // namespace hsl
