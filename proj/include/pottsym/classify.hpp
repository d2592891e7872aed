#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pottsym/autgroup.hpp"
#include "pottsym/model.hpp"
#include "pottsym/relations.hpp"

namespace pottsym {

enum class Verdict { Commutative, Quantum, Undetermined };
std::string verdict_str(Verdict v);

// Concrete matrix representation of the magic unitary: a d x d matrix per
// entry. Exact entries are kept alongside doubles when available, and the
// verifier then runs in exact arithmetic.
struct NumericRep {
  int n = 0, d = 1;
  bool exact = false;
  std::vector<GaussianRational> exactEntries;   // n*n*d*d when exact
  std::vector<std::complex<double>> entries;    // n*n*d*d

  std::complex<double>& at(int i, int j, int r, int c) {
    return entries[((i * n + j) * d + r) * d + c];
  }
  const std::complex<double>& at(int i, int j, int r, int c) const {
    return entries[((i * n + j) * d + r) * d + c];
  }
  GaussianRational& exactAt(int i, int j, int r, int c) {
    return exactEntries[((i * n + j) * d + r) * d + c];
  }
  const GaussianRational& exactAt(int i, int j, int r, int c) const {
    return exactEntries[((i * n + j) * d + r) * d + c];
  }
  void syncDoubles();
};

struct VerifyFamily {
  std::string name;
  double residual = 0.0;
};

struct VerifyReport {
  bool exactMode = false;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<VerifyFamily> families;
  double maxResidual() const;
};

struct WitnessInfo {
  double magnitude = 0.0;
  std::string exactMagnitude;  // empty when not exact
  int entryA = -1, entryB = -1;  // entry ids of the witnessing classes
};

struct Classification {
  Verdict verdict = Verdict::Undetermined;
  std::optional<std::string> structureHint;
  std::optional<std::pair<Permutation, Permutation>> disjointPair;
  std::optional<NumericRep> certificate;
  std::optional<VerifyReport> verification;
  std::optional<WitnessInfo> witness;
  std::vector<std::string> notes;
};

// d = 1 representation of a classical automorphism: P[i][j] = [i == s(j)].
NumericRep classical_rep(const PottsModel& model, const Permutation& sigma);

// Two-dimensional representation built from two disjoint involutive
// automorphisms: entries over supp(s) use the coordinate projection, entries
// over supp(t) the projection at angle pi/4 (all entries rational). Throws
// InputError when the witnesses do not have the required shape.
NumericRep build_numeric_certificate(const PottsModel& model, const Permutation& s,
                                     const Permutation& t);

// Residuals per relation family: projection axioms, row/column sums, entry
// states, equal classes, vanishing products, linear identities, the coupling
// commutant, the quadratic preservation form, and the level identity.
VerifyReport verify_numeric_rep(const PottsModel& model, const RelationSet& rs,
                                const NumericRep& rep, double tol);

// Largest entrywise commutator norm over pairs of surviving classes.
WitnessInfo noncommutation_witness(const RelationSet& rs, const NumericRep& rep);

std::optional<std::string> structure_hint(const RelationSet& rs, const Presentation& pres,
                                          const AutGroup& aut, Verdict verdict);

inline constexpr double kCertificateTol = 1e-9;
inline constexpr double kWitnessThreshold = 1e-2;

Classification classify(const PottsModel& model, const RelationSet& rs, const AutGroup& aut);

}  // namespace pottsym
