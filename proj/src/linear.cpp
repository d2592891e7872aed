#include "pottsym/linear.hpp"

#include <algorithm>

namespace pottsym {

void LinEq::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> out;
  for (auto& [v, c] : terms) {
    if (!out.empty() && out.back().first == v)
      out.back().second += c;
    else
      out.emplace_back(v, c);
  }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  terms = std::move(out);
}

namespace {

// eq -= factor * row. The factor is taken by value: callers pass references
// into eq's own term list, which this function rebuilds.
void axpy(LinEq& eq, const Rational factor, const LinEq& row) {
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(eq.terms.size() + row.terms.size());
  size_t a = 0, b = 0;
  while (a < eq.terms.size() || b < row.terms.size()) {
    if (b == row.terms.size() ||
        (a < eq.terms.size() && eq.terms[a].first < row.terms[b].first)) {
      merged.push_back(eq.terms[a++]);
    } else if (a == eq.terms.size() || row.terms[b].first < eq.terms[a].first) {
      merged.emplace_back(row.terms[b].first, Rational(-factor * row.terms[b].second));
      ++b;
    } else {
      Rational c = eq.terms[a].second - factor * row.terms[b].second;
      if (sgn(c) != 0) merged.emplace_back(eq.terms[a].first, c);
      ++a;
      ++b;
    }
  }
  eq.terms = std::move(merged);
  eq.rhs -= factor * row.rhs;
}

}  // namespace

LinEq LinearBasis::reduce(LinEq eq) const {
  eq.normalize();
  for (size_t k = 0; k < eq.terms.size();) {
    auto it = pivotRow_.find(eq.terms[k].first);
    if (it == pivotRow_.end()) {
      ++k;
      continue;
    }
    Rational factor = eq.terms[k].second;  // basis rows have unit pivots
    axpy(eq, factor, rows_[it->second]);
    // axpy removed the pivot term; rescan from the same position.
  }
  return eq;
}

bool LinearBasis::insert(LinEq eq) {
  eq = reduce(std::move(eq));
  if (eq.empty()) {
    if (sgn(eq.rhs) != 0)
      throw InternalError("inconsistent linear identities: 0 = " + rational_str(eq.rhs));
    return false;
  }
  // Unit pivot on the smallest variable.
  Rational lead = eq.terms.front().second;
  for (auto& [v, c] : eq.terms) c /= lead;
  eq.rhs /= lead;
  int pivot = eq.terms.front().first;
  // Eliminate from existing rows to stay fully reduced.
  for (auto& row : rows_) {
    for (const auto& [v, c] : row.terms) {
      if (v == pivot) {
        axpy(row, c, eq);
        break;
      }
      if (v > pivot) break;
    }
  }
  pivotRow_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(eq));
  return true;
}

const LinEq* LinearBasis::rowForPivot(int var) const {
  auto it = pivotRow_.find(var);
  if (it == pivotRow_.end()) return nullptr;
  return &rows_[it->second];
}

}  // namespace pottsym
