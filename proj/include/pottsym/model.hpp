#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pottsym/gaussian.hpp"

namespace pottsym {

// Hard cap for the symbolic machinery; enumeration oracles have their own guards.
inline constexpr int kMaxVertices = 64;

struct Edge {
  int u, v;  // normalized u < v
  friend bool operator<(const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  }
  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
};

// A q-state Potts instance on a finite weighted graph. The coupling matrix is
// symmetric with zero diagonal and vanishes off the edge set; zero weights on
// edges are allowed, so adjacency is kept separately from the couplings.
class PottsModel {
 public:
  PottsModel() = default;
  PottsModel(std::vector<std::string> labels, std::vector<Edge> edges,
             std::vector<GaussianRational> coupling, int q);

  int n() const { return static_cast<int>(labels_.size()); }
  int q() const { return q_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const GaussianRational& J(int i, int j) const { return coupling_[i * n() + j]; }
  bool adjacent(int i, int j) const;
  int indexOf(const std::string& label) const;  // throws InputError when unknown

  // True when J vanishes exactly on non-edges and nowhere else.
  bool zeroPatternMatchesAdjacency() const;

  bool couplingIsReal() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<GaussianRational> coupling_;  // n*n row-major
  int q_ = 2;
};

PottsModel build_model(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::tuple<std::string, std::string, GaussianRational>>& weights,
                       const GaussianRational& defaultWeight, int q);

// Dense ids for the distinct coupling values, assigned in row-major first
// occurrence order; the zero scalar always occurs (diagonal), so non-edges and
// zero-weight edges share its color.
struct ColorTable {
  int numColors = 0;
  int zeroColor = -1;
  std::vector<int> colorOf;                 // n*n
  std::vector<GaussianRational> valueOf;    // per color id
  int operator()(int i, int j) const { return colorOf[i * n + j]; }
  int n = 0;
};

ColorTable color_table(const PottsModel& model);

// Row sums of the coupling matrix, one value per vertex.
std::vector<GaussianRational> level_function(const PottsModel& model);

// Splits the given vertex classes by iterated (color, class) count signatures
// until stable. Class ids are renumbered by first occurrence.
std::vector<int> refine_by_color_degree(const ColorTable& colors, std::vector<int> classes);

// Initial partition for symmetry searches: level classes refined to stability.
std::vector<int> stable_vertex_classes(const PottsModel& model);

}  // namespace pottsym
