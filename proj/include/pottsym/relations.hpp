#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pottsym/linear.hpp"
#include "pottsym/model.hpp"

namespace pottsym {

enum class EntryKind { Zero, One, Var };

// Affine expression over free variable classes: constant + sum(coeff * key).
struct AffineExpr {
  Rational constant = 0;
  std::vector<std::pair<int, Rational>> terms;  // sorted by class key
};

// Evolving presentation of the hamiltonian-preserving quantum permutation
// algebra: per-entry states of the n x n magic unitary, a union-find over
// entries forced equal, exact linear identities, and (derived) vanishing
// products and commutation facts. Entry (i, j) stands for the generator
// carrying vertex j to vertex i.
class RelationSet {
 public:
  // Seeds level-set vanishing and the row/column sum identities. Vanishing
  // monomials from the magic axioms and from coupling-color mismatches are
  // derived facts, available through hasZeroProduct.
  static RelationSet init(const PottsModel& model);

  // Appends the entrywise commutant identities (QM - MQ)_{ij} = 0 for the real
  // and imaginary parts of the coupling matrix.
  void addCommutantIdentities(const PottsModel& model);
  // Same for an arbitrary real matrix (row-major n x n).
  void addCommutantForMatrix(const std::vector<Rational>& m);

  void addIdentity(LinEq eq);  // raw identity in entry-id variable space

  // Runs the rule system to a fixpoint. Throws InternalError when the
  // relations are inconsistent (which signals an input or seeding bug; the
  // identity representation satisfies every sound relation).
  void propagate();

  int n() const { return n_; }
  int entryId(int i, int j) const { return i * n_ + j; }
  EntryKind kind(int i, int j) const;
  EntryKind kindOfClass(int key) const;
  // Canonical class key (smallest member entry id).
  int classKey(int i, int j) const;
  bool sameClass(int i, int j, int k, int l) const;

  std::vector<int> survivingClasses() const;                    // sorted keys, kind Var
  std::map<int, std::vector<int>> classMembers() const;         // key -> entry ids
  // True when some member pair carries a vanishing product (magic
  // orthogonality or coupling-color mismatch).
  bool hasZeroProduct(int keyA, int keyB) const;
  const std::set<std::pair<int, int>>& commutingPairs() const { return commuting_; }
  bool commute(int keyA, int keyB) const;
  bool allSurvivingCommute() const;

  const LinearBasis& basis() const { return basis_; }
  AffineExpr normalForm(int key) const;

  bool isFixpoint() const { return fixpoint_; }
  int rounds() const { return rounds_; }
  const std::vector<std::string>& trace() const { return trace_; }

  const ColorTable& colors() const { return colors_; }
  const std::vector<GaussianRational>& levels() const { return levels_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string entryName(int entryId) const;

  // Testing hook: overrides an entry state without justification.
  void forceKind(int i, int j, EntryKind k);

 private:
  int find(int e) const;
  bool unite(int a, int b);               // returns true when classes merged
  bool setKind(int entry, EntryKind k);   // returns true when state changed
  LinEq normalizeIdentity(const LinEq& raw) const;
  bool substituteAndExtract();            // R-subst, R-pos, R-eq
  bool ruleSumOne();                      // R-sum1
  bool ruleDerivedZeroProducts();         // merged/one-adjacent vanishing
  bool ruleColorRefine();                 // R-wl
  void computeCommuting();                // R-comm closure
  bool entryPairHasZeroProduct(int e1, int e2) const;

  int n_ = 0;
  std::vector<std::string> labels_;
  ColorTable colors_;
  std::vector<GaussianRational> levels_;
  mutable std::vector<int> parent_;   // union-find over entry ids, root = min
  std::vector<EntryKind> kinds_;      // authoritative at class roots
  std::vector<LinEq> identities_;     // raw, entry-id variable space
  LinearBasis basis_;                 // rebuilt each round; final at fixpoint
  std::set<std::pair<int, int>> commuting_;  // canonical key pairs, a < b
  bool fixpoint_ = false;
  int rounds_ = 0;
  std::vector<std::string> trace_;
};

// Deterministic pretty form of a fixpoint relation set.
struct Presentation {
  int n = 0;
  std::vector<std::string> grid;       // n*n entry expressions over free names
  std::vector<int> entryClassKey;      // -1 for resolved 0/1 entries
  std::vector<int> freeClassKeys;      // sorted (row-major first occurrence)
  std::map<int, std::string> varNames;
  struct Block {
    std::vector<int> rows, cols;
  };
  std::vector<Block> blocks;
  std::vector<std::string> identities;  // rendered basis rows
  bool allCommute = false;
  int freeVarCount = 0;
};

Presentation extract_presentation(const RelationSet& rs);

}  // namespace pottsym
