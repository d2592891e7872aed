#include "pottsym/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pottsym {

bool commutes_with_coupling(const PottsModel& model, const Permutation& sigma) {
  if (sigma.n() != model.n()) throw InputError("permutation size does not match vertex count");
  int n = model.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(model.J(sigma(i), sigma(j)) == model.J(i, j))) return false;
  return true;
}

bool AutGroup::contains(const Permutation& p) const {
  if (!elements) throw InternalError("element list not available for membership query");
  return std::binary_search(elements->begin(), elements->end(), p);
}

std::optional<std::vector<Permutation>> group_closure(int n, const std::vector<Permutation>& gens,
                                                      long limit) {
  std::set<Permutation> seen;
  std::deque<Permutation> work;
  Permutation id(n);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Permutation cur = work.front();
    work.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = g.after(cur);
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > limit) return std::nullopt;
        work.push_back(next);
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

namespace {

// DFS for one automorphism fixing 0..level-1 pointwise and mapping level to
// target. Candidates must sit in the same stable class and agree in color
// against everything already mapped.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColorTable& colors, const std::vector<int>& classes)
      : colors_(colors), classes_(classes), n_(colors.n) {}

  std::optional<Permutation> find(int level, int target) {
    map_.assign(n_, -1);
    used_.assign(n_, false);
    mapped_.clear();
    for (int i = 0; i < level; ++i) {
      if (!consistent(i, i)) return std::nullopt;
      assign(i, i);
    }
    if (!consistent(level, target)) return std::nullopt;
    assign(level, target);
    if (dfs()) return Permutation(map_);
    return std::nullopt;
  }

 private:
  bool consistent(int v, int u) const {
    if (classes_[v] != classes_[u] || used_[u]) return false;
    for (int a : mapped_)
      if (colors_(u, map_[a]) != colors_(v, a)) return false;
    return true;
  }
  void assign(int v, int u) {
    map_[v] = u;
    used_[u] = true;
    mapped_.push_back(v);
  }
  void unassign(int v) {
    used_[map_[v]] = false;
    map_[v] = -1;
    mapped_.pop_back();
  }
  bool dfs() {
    int v = 0;
    while (v < n_ && map_[v] != -1) ++v;
    if (v == n_) return true;
    for (int u = 0; u < n_; ++u) {
      if (!consistent(v, u)) continue;
      assign(v, u);
      if (dfs()) return true;
      unassign(v);
    }
    return false;
  }

  const ColorTable& colors_;
  const std::vector<int>& classes_;
  int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> mapped_;
};

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens) {
  std::vector<int> orbit{point};
  std::set<int> seen{point};
  for (size_t k = 0; k < orbit.size(); ++k) {
    for (const Permutation& g : gens) {
      int img = g(orbit[k]);
      if (seen.insert(img).second) orbit.push_back(img);
    }
  }
  return orbit;
}

}  // namespace

AutGroup automorphisms(const PottsModel& model) {
  int n = model.n();
  if (n > kMaxVertices)
    throw GuardError("instance too large: automorphism search is capped at " +
                     std::to_string(kMaxVertices) + " vertices");
  ColorTable colors = color_table(model);
  std::vector<int> classes = stable_vertex_classes(model);
  AutomorphismSearch search(colors, classes);

  AutGroup group;
  group.n = n;
  std::vector<std::vector<Permutation>> levelGens(n);
  // Transversal reps found at each level double as coset representatives, so
  // the group order is the product of the orbit sizes along the chain.
  std::vector<std::vector<Permutation>> transversals(n);
  group.order = 1;

  for (int level = n - 1; level >= 0; --level) {
    std::vector<Permutation> gensHere;
    for (int l = level; l < n; ++l)
      gensHere.insert(gensHere.end(), levelGens[l].begin(), levelGens[l].end());
    std::vector<int> orbit = orbit_of(level, gensHere);
    std::set<int> inOrbit(orbit.begin(), orbit.end());
    for (int w = level + 1; w < n; ++w) {
      if (inOrbit.count(w) || classes[w] != classes[level]) continue;
      std::optional<Permutation> found = search.find(level, w);
      if (!found) continue;
      levelGens[level].push_back(*found);
      group.generators.push_back(*found);
      gensHere.push_back(*found);
      orbit = orbit_of(level, gensHere);
      inOrbit = std::set<int>(orbit.begin(), orbit.end());
    }
    group.orbitSizes.insert(group.orbitSizes.begin(), mpz_class(orbit.size()));
    group.order *= static_cast<unsigned long>(orbit.size());
    // Transversal: one representative mapping `level` to each orbit point.
    std::vector<Permutation> reps;
    std::set<int> covered;
    std::deque<std::pair<int, Permutation>> bfs;
    bfs.emplace_back(level, Permutation(n));
    covered.insert(level);
    while (!bfs.empty()) {
      auto [pt, rep] = bfs.front();
      bfs.pop_front();
      reps.push_back(rep);
      for (const Permutation& g : gensHere) {
        int img = g(pt);
        if (covered.insert(img).second) bfs.emplace_back(img, g.after(rep));
      }
    }
    transversals[level] = std::move(reps);
  }

  if (group.order <= kElementLimit) {
    std::vector<Permutation> elems{Permutation(n)};
    for (int level = n - 1; level >= 0; --level) {
      std::vector<Permutation> next;
      next.reserve(elems.size() * transversals[level].size());
      for (const Permutation& rep : transversals[level])
        for (const Permutation& tail : elems) next.push_back(rep.after(tail));
      elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    group.elements = std::move(elems);
  }
  return group;
}

AutGroup brute_force_automorphisms(const PottsModel& model) {
  int n = model.n();
  if (n > 8) throw GuardError("brute-force automorphism oracle is capped at 8 vertices");
  ColorTable colors = color_table(model);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Permutation> elems;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (colors(perm[i], perm[j]) != colors(i, j)) {
          ok = false;
          break;
        }
    if (ok) elems.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  AutGroup group;
  group.n = n;
  group.order = static_cast<unsigned long>(elems.size());
  // Greedy minimal-ish generating set, deterministic.
  std::vector<Permutation> closureSoFar{Permutation(n)};
  for (const Permutation& e : elems) {
    if (std::binary_search(closureSoFar.begin(), closureSoFar.end(), e)) continue;
    group.generators.push_back(e);
    auto closed = group_closure(n, group.generators);
    if (!closed) throw InternalError("brute-force closure exceeded the element limit");
    closureSoFar = *closed;
  }
  group.elements = std::move(elems);  // already sorted (lexicographic scan)
  return group;
}

DisjointPairResult disjoint_pair_search(const AutGroup& group) {
  DisjointPairResult res;
  if (!group.elements) {
    res.status = DisjointPairResult::Status::Incomplete;
    res.note = "group order exceeds the enumeration limit; search incomplete";
    return res;
  }
  std::vector<const Permutation*> nontrivial;
  for (const Permutation& p : *group.elements)
    if (!p.isIdentity()) nontrivial.push_back(&p);
  std::vector<std::uint64_t> masks;
  std::vector<bool> involution;
  masks.reserve(nontrivial.size());
  for (const Permutation* p : nontrivial) {
    masks.push_back(p->supportMask());
    involution.push_back(p->order() == 2);
  }
  const std::uint64_t budget = 200000000;
  std::uint64_t checks = 0;
  // Involution pairs first: they feed the certificate construction directly.
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t a = 0; a < nontrivial.size(); ++a) {
      if (pass == 0 && !involution[a]) continue;
      for (size_t b = a + 1; b < nontrivial.size(); ++b) {
        if (pass == 0 && !involution[b]) continue;
        if (pass == 1 && involution[a] && involution[b]) continue;  // already tried
        if (++checks > budget) {
          res.status = DisjointPairResult::Status::Incomplete;
          res.note = "pair scan budget exhausted; search incomplete";
          return res;
        }
        if ((masks[a] & masks[b]) == 0) {
          res.status = DisjointPairResult::Status::Found;
          res.witnesses = {*nontrivial[a], *nontrivial[b]};
          res.bothInvolutions = pass == 0;
          return res;
        }
      }
    }
  }
  res.status = DisjointPairResult::Status::None;
  return res;
}

}  // namespace pottsym
