#include "pottsym/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pottsym {

PottsModel::PottsModel(std::vector<std::string> labels, std::vector<Edge> edges,
                       std::vector<GaussianRational> coupling, int q)
    : labels_(std::move(labels)), edges_(std::move(edges)), coupling_(std::move(coupling)), q_(q) {}

bool PottsModel::adjacent(int i, int j) const {
  if (i == j) return false;
  Edge e{std::min(i, j), std::max(i, j)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int PottsModel::indexOf(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels_[i] == label) return i;
  throw InputError("unknown vertex '" + label + "'");
}

bool PottsModel::zeroPatternMatchesAdjacency() const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if ((!J(i, j).isZero()) != adjacent(i, j)) return false;
  return true;
}

bool PottsModel::couplingIsReal() const {
  for (const auto& c : coupling_)
    if (!c.isReal()) return false;
  return true;
}

PottsModel build_model(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::tuple<std::string, std::string, GaussianRational>>& weights,
                       const GaussianRational& defaultWeight, int q) {
  if (labels.empty()) throw InputError("model needs at least one vertex");
  if (q < 2) throw InputError("q must be at least 2, got " + std::to_string(q));
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i].empty()) throw InputError("vertex labels must be non-empty");
    if (!index.emplace(labels[i], i).second)
      throw InputError("duplicate vertex label '" + labels[i] + "'");
  }
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw InputError("unknown vertex '" + s + "' in edge list");
    return it->second;
  };

  std::vector<Edge> edgeList;
  std::set<Edge> seen;
  for (const auto& [us, vs] : edges) {
    int u = lookup(us), v = lookup(vs);
    if (u == v) throw InputError("self-loop on vertex '" + us + "' is not allowed");
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw InputError("duplicate edge {" + us + ", " + vs + "}");
    edgeList.push_back(e);
  }
  std::sort(edgeList.begin(), edgeList.end());

  int n = static_cast<int>(labels.size());
  std::vector<GaussianRational> J(static_cast<size_t>(n) * n);
  for (const Edge& e : edgeList) {
    J[e.u * n + e.v] = defaultWeight;
    J[e.v * n + e.u] = defaultWeight;
  }
  for (const auto& [us, vs, w] : weights) {
    int u = lookup(us), v = lookup(vs);
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.count(e))
      throw InputError("weight assigned to non-edge {" + us + ", " + vs + "}");
    J[e.u * n + e.v] = w;
    J[e.v * n + e.u] = w;
  }
  return PottsModel(labels, std::move(edgeList), std::move(J), q);
}

ColorTable color_table(const PottsModel& model) {
  int n = model.n();
  ColorTable ct;
  ct.n = n;
  ct.colorOf.assign(static_cast<size_t>(n) * n, -1);
  std::map<GaussianRational, int> ids;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const GaussianRational& v = model.J(i, j);
      auto it = ids.find(v);
      int id;
      if (it == ids.end()) {
        id = static_cast<int>(ct.valueOf.size());
        ids.emplace(v, id);
        ct.valueOf.push_back(v);
      } else {
        id = it->second;
      }
      ct.colorOf[i * n + j] = id;
    }
  }
  ct.numColors = static_cast<int>(ct.valueOf.size());
  for (int c = 0; c < ct.numColors; ++c)
    if (ct.valueOf[c].isZero()) ct.zeroColor = c;
  return ct;
}

std::vector<GaussianRational> level_function(const PottsModel& model) {
  int n = model.n();
  std::vector<GaussianRational> f(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[i] += model.J(i, j);
  return f;
}

std::vector<int> refine_by_color_degree(const ColorTable& colors, std::vector<int> classes) {
  int n = colors.n;
  for (;;) {
    // Signature: own class plus counts of (edge color, other's class) pairs.
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::map<std::pair<int, int>, int> counts;
      for (int u = 0; u < n; ++u) counts[{colors(v, u), classes[u]}]++;
      std::vector<int> sig{classes[v]};
      for (const auto& [key, c] : counts) {
        sig.push_back(key.first);
        sig.push_back(key.second);
        sig.push_back(c);
      }
      auto it = ids.find(sig);
      if (it == ids.end()) it = ids.emplace(sig, static_cast<int>(ids.size())).first;
      next[v] = it->second;
    }
    // Renumber by first occurrence for determinism.
    std::vector<int> remap(ids.size(), -1);
    int fresh = 0;
    for (int v = 0; v < n; ++v) {
      if (remap[next[v]] == -1) remap[next[v]] = fresh++;
      next[v] = remap[next[v]];
    }
    if (next == classes) return classes;
    classes = std::move(next);
  }
}

std::vector<int> stable_vertex_classes(const PottsModel& model) {
  int n = model.n();
  std::vector<GaussianRational> f = level_function(model);
  std::map<GaussianRational, int> ids;
  std::vector<int> classes(n);
  for (int v = 0; v < n; ++v) {
    auto it = ids.find(f[v]);
    if (it == ids.end()) it = ids.emplace(f[v], static_cast<int>(ids.size())).first;
    classes[v] = it->second;
  }
  // Renumber by first occurrence.
  std::vector<int> remap(ids.size(), -1);
  int fresh = 0;
  for (int v = 0; v < n; ++v) {
    if (remap[classes[v]] == -1) remap[classes[v]] = fresh++;
    classes[v] = remap[classes[v]];
  }
  return refine_by_color_degree(color_table(model), classes);
}

}  // namespace pottsym
