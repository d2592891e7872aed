#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pottsym/gaussian.hpp"

namespace pottsym {

// Linear identity sum(coeff * var) = rhs with exact rational coefficients.
// Terms are kept sorted by variable id with nonzero coefficients.
struct LinEq {
  std::vector<std::pair<int, Rational>> terms;
  Rational rhs = 0;

  bool empty() const { return terms.empty(); }
  void normalize();  // sorts, merges duplicates, drops zeros
  friend bool operator==(const LinEq& a, const LinEq& b) {
    return a.terms == b.terms && a.rhs == b.rhs;
  }
};

// Reduced row echelon basis over ordered variable ids; each row's pivot is its
// smallest variable and pivots are eliminated from every other row.
class LinearBasis {
 public:
  // Reduces eq against the basis; inserts the residue if nonzero. Returns true
  // when the rank grew. Throws InternalError on 0 = c contradictions.
  bool insert(LinEq eq);

  LinEq reduce(LinEq eq) const;

  // Normal form of a single variable: its defining row when it is a pivot.
  // Free variables have no row.
  const LinEq* rowForPivot(int var) const;
  bool isPivot(int var) const { return pivotRow_.count(var) > 0; }

  const std::vector<LinEq>& rows() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<LinEq> rows_;
  std::map<int, int> pivotRow_;
};

}  // namespace pottsym
