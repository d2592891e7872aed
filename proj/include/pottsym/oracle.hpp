#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pottsym/model.hpp"
#include "pottsym/perm.hpp"

namespace pottsym {

// Spin assignment, one value in [0, q) per vertex.
struct Configuration {
  std::vector<int> spins;
};

// Element of the group algebra of Z_q on the dense basis of group elements.
struct GroupAlgebraElement {
  std::vector<GaussianRational> coeffs;

  explicit GroupAlgebraElement(int q = 0) : coeffs(q) {}
  int q() const { return static_cast<int>(coeffs.size()); }

  GroupAlgebraElement star() const;  // f*(g) = conj(f(g^{-1}))
  friend GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GaussianRational tau() const { return coeffs.at(0); }  // evaluation at the identity
};

struct EnergySpectrum {
  // (energy, multiplicity), sorted by energy; multiplicities sum to q^n.
  std::vector<std::pair<GaussianRational, std::uint64_t>> entries;
  std::uint64_t totalConfigurations = 0;
};

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t(1) << 24;

// Throws GuardError when q^n exceeds the enumeration limit.
std::uint64_t enumeration_count(const PottsModel& model);

// Ordered-pair convention: the sum runs over all ordered vertex pairs, so each
// undirected edge contributes twice when its endpoint spins agree.
GaussianRational hamiltonian(const PottsModel& model, const Configuration& omega);

EnergySpectrum energy_spectrum(const PottsModel& model);

// Z(beta) from the exact spectrum, evaluated in double precision. Complex
// couplings give a complex value; real models land on the real axis.
std::complex<double> partition_function(const PottsModel& model, double beta);
std::complex<double> partition_function(const EnergySpectrum& spectrum, double beta);

// <F, H> = sum_{i,j} J'_{ij} tau(F(i)* . H(j)), computed through the group
// algebra operations.
GaussianRational bilinear_form(const PottsModel& model, const std::vector<GroupAlgebraElement>& F,
                               const std::vector<GroupAlgebraElement>& H);

std::vector<GroupAlgebraElement> lift_configuration(const PottsModel& model,
                                                    const Configuration& omega);

// True iff the hamiltonian is preserved under relabeling vertices by sigma,
// checked exactly on every configuration.
bool check_preservation(const PottsModel& model, const Permutation& sigma);

}  // namespace pottsym
