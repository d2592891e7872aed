#include "pottsym/relations.hpp"

#include <algorithm>
#include <sstream>

namespace pottsym {

namespace {

constexpr int kMaxRounds = 10000;

struct Fact {
  enum Type { SetZero, SetOne, Merge } type;
  int a = -1, b = -1;
};

// Small disjoint-set over vertices, root = smallest member.
struct VertexDsu {
  std::vector<int> parent;
  explicit VertexDsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

RelationSet RelationSet::init(const PottsModel& model) {
  if (model.n() > kMaxVertices)
    throw GuardError("instance too large: symbolic engine is capped at " +
                     std::to_string(kMaxVertices) + " vertices");
  RelationSet rs;
  rs.n_ = model.n();
  rs.labels_ = model.labels();
  rs.colors_ = color_table(model);
  rs.levels_ = level_function(model);
  int n = rs.n_;
  rs.parent_.resize(static_cast<size_t>(n) * n);
  for (int e = 0; e < n * n; ++e) rs.parent_[e] = e;
  rs.kinds_.assign(static_cast<size_t>(n) * n, EntryKind::Var);
  // Entries across different row-sum levels vanish.
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (!(rs.levels_[v] == rs.levels_[w])) rs.kinds_[rs.entryId(v, w)] = EntryKind::Zero;
  // Magic unitary row and column sums.
  for (int i = 0; i < n; ++i) {
    LinEq row, col;
    for (int j = 0; j < n; ++j) {
      row.terms.emplace_back(rs.entryId(i, j), Rational(1));
      col.terms.emplace_back(rs.entryId(j, i), Rational(1));
    }
    row.rhs = 1;
    col.rhs = 1;
    rs.identities_.push_back(std::move(row));
    rs.identities_.push_back(std::move(col));
  }
  return rs;
}

void RelationSet::addCommutantForMatrix(const std::vector<Rational>& m) {
  int n = n_;
  if (static_cast<int>(m.size()) != n * n)
    throw InputError("commutant matrix size does not match the model");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LinEq eq;  // (QM)_{ij} - (MQ)_{ij} = 0
      for (int k = 0; k < n; ++k) {
        if (sgn(m[k * n + j]) != 0) eq.terms.emplace_back(entryId(i, k), m[k * n + j]);
        if (sgn(m[i * n + k]) != 0) eq.terms.emplace_back(entryId(k, j), Rational(-m[i * n + k]));
      }
      eq.normalize();
      if (!eq.empty()) identities_.push_back(std::move(eq));
    }
  }
  fixpoint_ = false;
}

void RelationSet::addCommutantIdentities(const PottsModel& model) {
  int n = n_;
  std::vector<Rational> re(static_cast<size_t>(n) * n), im(static_cast<size_t>(n) * n);
  bool anyIm = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      re[i * n + j] = model.J(i, j).re;
      im[i * n + j] = model.J(i, j).im;
      if (sgn(im[i * n + j]) != 0) anyIm = true;
    }
  }
  addCommutantForMatrix(re);
  if (anyIm) addCommutantForMatrix(im);
}

void RelationSet::addIdentity(LinEq eq) {
  eq.normalize();
  if (!eq.empty()) identities_.push_back(std::move(eq));
  fixpoint_ = false;
}

int RelationSet::find(int e) const {
  while (parent_[e] != e) {
    parent_[e] = parent_[parent_[e]];
    e = parent_[e];
  }
  return e;
}

bool RelationSet::unite(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return false;
  EntryKind ka = kinds_[ra], kb = kinds_[rb];
  if (ka != EntryKind::Var && kb != EntryKind::Var && ka != kb)
    throw InternalError("inconsistent relations: " + entryName(ra) + " and " + entryName(rb) +
                        " are forced equal but resolved to different constants");
  if (ra > rb) std::swap(ra, rb);
  parent_[rb] = ra;
  kinds_[ra] = ka != EntryKind::Var ? ka : kb;
  return true;
}

bool RelationSet::setKind(int entry, EntryKind k) {
  int r = find(entry);
  if (kinds_[r] == k) return false;
  if (kinds_[r] != EntryKind::Var)
    throw InternalError("inconsistent relations: " + entryName(r) + " forced to both 0 and 1");
  kinds_[r] = k;
  return true;
}

EntryKind RelationSet::kind(int i, int j) const { return kinds_[find(entryId(i, j))]; }
EntryKind RelationSet::kindOfClass(int key) const { return kinds_[find(key)]; }
int RelationSet::classKey(int i, int j) const { return find(entryId(i, j)); }
bool RelationSet::sameClass(int i, int j, int k, int l) const {
  return find(entryId(i, j)) == find(entryId(k, l));
}

std::vector<int> RelationSet::survivingClasses() const {
  std::vector<int> out;
  for (int e = 0; e < n_ * n_; ++e)
    if (find(e) == e && kinds_[e] == EntryKind::Var) out.push_back(e);
  return out;
}

std::map<int, std::vector<int>> RelationSet::classMembers() const {
  std::map<int, std::vector<int>> m;
  for (int e = 0; e < n_ * n_; ++e) m[find(e)].push_back(e);
  return m;
}

std::string RelationSet::entryName(int e) const {
  return "q(" + labels_[e / n_] + "," + labels_[e % n_] + ")";
}

bool RelationSet::entryPairHasZeroProduct(int e1, int e2) const {
  int k = e1 / n_, i = e1 % n_;
  int l = e2 / n_, j = e2 % n_;
  if (k == l && i != j) return true;  // orthogonality within a row of Q
  if (i == j && k != l) return true;  // orthogonality within a column
  return colors_(k, l) != colors_(i, j);
}

bool RelationSet::hasZeroProduct(int keyA, int keyB) const {
  int ra = find(keyA), rb = find(keyB);
  std::vector<int> memA, memB;
  for (int e = 0; e < n_ * n_; ++e) {
    int r = find(e);
    if (r == ra) memA.push_back(e);
    if (r == rb) memB.push_back(e);
  }
  for (int e1 : memA)
    for (int e2 : memB)
      if (e1 != e2 && entryPairHasZeroProduct(e1, e2)) return true;
  return false;
}

LinEq RelationSet::normalizeIdentity(const LinEq& raw) const {
  LinEq out;
  out.rhs = raw.rhs;
  for (const auto& [v, c] : raw.terms) {
    int r = find(v);
    switch (kinds_[r]) {
      case EntryKind::Zero:
        break;
      case EntryKind::One:
        out.rhs -= c;
        break;
      case EntryKind::Var:
        out.terms.emplace_back(r, c);
        break;
    }
  }
  out.normalize();
  return out;
}

bool RelationSet::substituteAndExtract() {
  std::vector<Fact> facts;
  std::vector<LinEq> normed;
  normed.reserve(identities_.size());
  for (const LinEq& raw : identities_) {
    LinEq eq = normalizeIdentity(raw);
    if (eq.empty()) {
      if (sgn(eq.rhs) != 0)
        throw InternalError("inconsistent relations: an identity reduced to 0 = " +
                            rational_str(eq.rhs));
      continue;
    }
    int s = sgn(eq.terms.front().second);
    bool sameSign = true;
    for (const auto& [v, c] : eq.terms) sameSign = sameSign && sgn(c) == s;
    if (sameSign && sgn(eq.rhs) == 0) {
      for (const auto& [v, c] : eq.terms) facts.push_back({Fact::SetZero, v, -1});
    }
    normed.push_back(std::move(eq));
  }

  basis_ = LinearBasis();
  for (LinEq& eq : normed) basis_.insert(std::move(eq));

  std::map<std::string, int> tails;
  for (const LinEq& row : basis_.rows()) {
    if (row.terms.size() == 1) {
      if (sgn(row.rhs) == 0)
        facts.push_back({Fact::SetZero, row.terms[0].first, -1});
      else if (row.rhs == 1)
        facts.push_back({Fact::SetOne, row.terms[0].first, -1});
      else
        throw InternalError("inconsistent relations: " + entryName(row.terms[0].first) +
                            " forced to the scalar " + rational_str(row.rhs) +
                            ", which is not a projection value");
    } else {
      int s = sgn(row.terms.front().second);
      bool sameSign = true;
      for (const auto& [v, c] : row.terms) sameSign = sameSign && sgn(c) == s;
      if (sameSign && sgn(row.rhs) == 0) {
        for (const auto& [v, c] : row.terms) facts.push_back({Fact::SetZero, v, -1});
      }
      if (row.terms.size() == 2 && sgn(row.rhs) == 0 && row.terms[1].second == -1)
        facts.push_back({Fact::Merge, row.terms[0].first, row.terms[1].first});
    }
    // Pivots sharing a normal form are equal.
    std::ostringstream tail;
    for (size_t k = 1; k < row.terms.size(); ++k)
      tail << row.terms[k].first << ":" << row.terms[k].second.get_str() << ";";
    tail << "=" << row.rhs.get_str();
    auto [it, fresh] = tails.emplace(tail.str(), row.terms[0].first);
    if (!fresh) facts.push_back({Fact::Merge, it->second, row.terms[0].first});
  }

  bool changed = false;
  for (const Fact& f : facts) {
    switch (f.type) {
      case Fact::SetZero:
        if (setKind(f.a, EntryKind::Zero)) {
          trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(find(f.a)) +
                           " := 0 (linear identities)");
          changed = true;
        }
        break;
      case Fact::SetOne:
        if (setKind(f.a, EntryKind::One)) {
          trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(find(f.a)) +
                           " := 1 (linear identities)");
          changed = true;
        }
        break;
      case Fact::Merge:
        if (unite(f.a, f.b)) {
          trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(f.a) + " = " +
                           entryName(f.b) + " (linear identities)");
          changed = true;
        }
        break;
    }
  }
  return changed;
}

bool RelationSet::ruleSumOne() {
  bool changed = false;
  auto scanLine = [&](bool rows) {
    for (int i = 0; i < n_; ++i) {
      std::vector<int> nonZero;
      int oneEntry = -1;
      for (int j = 0; j < n_; ++j) {
        int e = rows ? entryId(i, j) : entryId(j, i);
        EntryKind k = kinds_[find(e)];
        if (k == EntryKind::Zero) continue;
        nonZero.push_back(e);
        if (k == EntryKind::One && oneEntry < 0) oneEntry = e;
      }
      if (oneEntry >= 0) {
        for (int e : nonZero)
          if (find(e) != find(oneEntry) && setKind(e, EntryKind::Zero)) {
            trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(find(e)) +
                             " := 0 (a 1 occupies its " + (rows ? "row" : "column") + ")");
            changed = true;
          }
      } else if (nonZero.size() == 1) {
        if (setKind(nonZero[0], EntryKind::One)) {
          trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(find(nonZero[0])) +
                           " := 1 (last survivor of its " + (rows ? "row" : "column") + ")");
          changed = true;
        }
      }
    }
  };
  scanLine(true);
  scanLine(false);
  return changed;
}

bool RelationSet::ruleDerivedZeroProducts() {
  bool changed = false;
  auto members = classMembers();
  std::vector<int> oneClasses, varClasses;
  for (const auto& [key, mems] : members) {
    if (kinds_[key] == EntryKind::One) oneClasses.push_back(key);
    if (kinds_[key] == EntryKind::Var) varClasses.push_back(key);
  }
  // A class whose own members carry a vanishing product is a projection with
  // x^2 = 0, hence 0.
  for (int key : varClasses) {
    const auto& mems = members[key];
    bool hit = false;
    for (size_t a = 0; a < mems.size() && !hit; ++a)
      for (size_t b = 0; b < mems.size() && !hit; ++b)
        if (a != b && entryPairHasZeroProduct(mems[a], mems[b])) hit = true;
    if (hit && setKind(key, EntryKind::Zero)) {
      trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(key) +
                       " := 0 (merged entries carry a vanishing product)");
      changed = true;
    }
  }
  // x = 1 and xy = 0 force y = 0.
  for (int one : oneClasses) {
    for (int key : varClasses) {
      if (kinds_[find(key)] != EntryKind::Var) continue;
      const auto& om = members[one];
      const auto& vm = members[key];
      bool hit = false;
      for (int e1 : om) {
        for (int e2 : vm)
          if (entryPairHasZeroProduct(e1, e2) || entryPairHasZeroProduct(e2, e1)) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (hit && setKind(key, EntryKind::Zero)) {
        trace_.push_back("round " + std::to_string(rounds_) + ": " + entryName(find(key)) +
                         " := 0 (vanishing product against an entry equal to 1)");
        changed = true;
      }
    }
  }
  return changed;
}

bool RelationSet::ruleColorRefine() {
  bool changed = false;
  for (;;) {
    VertexDsu dsu(n_);
    for (int v = 0; v < n_; ++v)
      for (int w = v + 1; w < n_; ++w)
        if (kind(v, w) != EntryKind::Zero || kind(w, v) != EntryKind::Zero) dsu.unite(v, w);
    std::vector<int> classes(n_);
    std::map<int, int> ids;
    for (int v = 0; v < n_; ++v) {
      int r = dsu.find(v);
      auto it = ids.find(r);
      if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
      classes[v] = it->second;
    }
    classes = refine_by_color_degree(colors_, classes);
    bool any = false;
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < n_; ++w) {
        if (classes[v] == classes[w]) continue;
        if (kind(v, w) != EntryKind::Zero && setKind(entryId(v, w), EntryKind::Zero)) {
          trace_.push_back("round " + std::to_string(rounds_) + ": " +
                           entryName(find(entryId(v, w))) +
                           " := 0 (derived rule: color-degree refinement)");
          any = true;
        }
      }
    }
    if (!any) break;
    changed = true;
  }
  return changed;
}

AffineExpr RelationSet::normalForm(int key) const {
  AffineExpr e;
  const LinEq* row = basis_.rowForPivot(find(key));
  if (!row) {
    e.terms.emplace_back(find(key), Rational(1));
    return e;
  }
  e.constant = row->rhs;
  for (size_t k = 1; k < row->terms.size(); ++k)
    e.terms.emplace_back(row->terms[k].first, Rational(-row->terms[k].second));
  return e;
}

void RelationSet::computeCommuting() {
  commuting_.clear();
  std::vector<int> survivors = survivingClasses();
  int m = static_cast<int>(survivors.size());
  if (m == 0) return;
  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index[survivors[i]] = i;
  auto members = classMembers();
  auto pairHasZero = [&](int a, int b) {
    for (int e1 : members[a])
      for (int e2 : members[b])
        if (e1 != e2 && entryPairHasZeroProduct(e1, e2)) return true;
    return false;
  };

  size_t words = static_cast<size_t>(m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cp(m, std::vector<std::uint64_t>(words, 0));
  auto setPair = [&](int x, int y) {
    cp[x][y / 64] |= std::uint64_t(1) << (y % 64);
    cp[y][x / 64] |= std::uint64_t(1) << (x % 64);
  };
  auto getPair = [&](int x, int y) {
    return (cp[x][y / 64] >> (y % 64)) & 1;
  };

  // Base: vanishing products ab = 0 = ba (the condition is symmetric for
  // self-adjoint entries and the seed families come in both orders).
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (pairHasZero(survivors[x], survivors[y]) && pairHasZero(survivors[y], survivors[x]))
        setPair(x, y);

  // Closure through the linear identities: a row solves any of its variables
  // as an affine combination of the others, so v commutes with u whenever all
  // other variables of some row containing v commute with u. Complement links
  // v = 1 - w are the two-variable case.
  std::vector<std::vector<int>> rowVars;
  for (const LinEq& row : basis_.rows()) {
    std::vector<int> vars;
    bool ok = true;
    for (const auto& [v, c] : row.terms) {
      auto it = index.find(v);
      if (it == index.end()) {
        ok = false;
        break;
      }
      vars.push_back(it->second);
    }
    if (ok && vars.size() >= 2) rowVars.push_back(std::move(vars));
  }
  std::vector<std::uint64_t> tmp(words);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& vars : rowVars) {
      for (int v : vars) {
        std::fill(tmp.begin(), tmp.end(), ~std::uint64_t(0));
        for (int w : vars) {
          if (w == v) continue;
          for (size_t k = 0; k < words; ++k) {
            std::uint64_t allow = cp[w][k];
            if (static_cast<size_t>(w / 64) == k) allow |= std::uint64_t(1) << (w % 64);
            tmp[k] &= allow;
          }
        }
        for (int u = 0; u < m; ++u) {
          if (u == v || getPair(u, v)) continue;
          if ((tmp[u / 64] >> (u % 64)) & 1) {
            setPair(u, v);
            changed = true;
          }
        }
      }
    }
  }

  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (getPair(x, y)) commuting_.insert({survivors[x], survivors[y]});
}

bool RelationSet::commute(int keyA, int keyB) const {
  int a = find(keyA), b = find(keyB);
  if (a == b) return true;
  return commuting_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool RelationSet::allSurvivingCommute() const {
  std::vector<int> s = survivingClasses();
  for (size_t x = 0; x < s.size(); ++x)
    for (size_t y = x + 1; y < s.size(); ++y)
      if (!commuting_.count({s[x], s[y]})) return false;
  return true;
}

void RelationSet::propagate() {
  rounds_ = 0;
  for (;;) {
    if (++rounds_ > kMaxRounds)
      throw InternalError("relation propagation failed to reach a fixpoint");
    bool changed = substituteAndExtract();
    changed = ruleSumOne() || changed;
    changed = ruleDerivedZeroProducts() || changed;
    changed = ruleColorRefine() || changed;
    if (!changed) break;
  }
  computeCommuting();
  fixpoint_ = true;
}

void RelationSet::forceKind(int i, int j, EntryKind k) {
  int r = find(entryId(i, j));
  kinds_[r] = k;
  fixpoint_ = false;
}

namespace {

std::string format_coeff_name(const Rational& c, const std::string& name, bool leading) {
  std::string out;
  Rational mag = c;
  bool neg = sgn(c) < 0;
  if (neg) mag = -mag;
  if (neg)
    out += "-";
  else if (!leading)
    out += "+";
  if (mag != 1) out += rational_str(mag) + "*";
  out += name;
  return out;
}

}  // namespace

Presentation extract_presentation(const RelationSet& rs) {
  if (!rs.isFixpoint()) throw InternalError("presentation requested before the fixpoint");
  Presentation p;
  int n = rs.n();
  p.n = n;
  p.allCommute = rs.allSurvivingCommute();

  std::vector<int> survivors = rs.survivingClasses();
  for (int key : survivors)
    if (!rs.basis().isPivot(key)) p.freeClassKeys.push_back(key);
  p.freeVarCount = static_cast<int>(p.freeClassKeys.size());

  static const char* kNames[] = {"p", "q", "r", "s", "t", "w", "y", "z"};
  for (size_t k = 0; k < p.freeClassKeys.size(); ++k) {
    std::string name = k < 8 ? kNames[k] : "x" + std::to_string(k + 1);
    p.varNames[p.freeClassKeys[k]] = name;
  }

  auto exprString = [&](const AffineExpr& e) {
    std::string out;
    bool leading = true;
    if (sgn(e.constant) != 0 || e.terms.empty()) {
      out += rational_str(e.constant);
      leading = false;
    }
    for (const auto& [v, c] : e.terms) {
      out += format_coeff_name(c, p.varNames.at(v), leading);
      leading = false;
    }
    return out;
  };

  p.grid.resize(static_cast<size_t>(n) * n);
  p.entryClassKey.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int e = rs.entryId(i, j);
      switch (rs.kind(i, j)) {
        case EntryKind::Zero:
          p.grid[e] = "0";
          break;
        case EntryKind::One:
          p.grid[e] = "1";
          break;
        case EntryKind::Var:
          p.entryClassKey[e] = rs.classKey(i, j);
          p.grid[e] = exprString(rs.normalForm(p.entryClassKey[e]));
          break;
      }
    }
  }

  // Blocks: rows and columns connected through surviving entries or shared
  // variable classes.
  VertexDsu dsu(2 * n);
  auto memberLists = rs.classMembers();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.kind(i, j) != EntryKind::Zero) dsu.unite(i, n + j);
  for (const auto& [key, mems] : memberLists) {
    if (rs.kindOfClass(key) != EntryKind::Var) continue;
    for (size_t k = 1; k < mems.size(); ++k) {
      dsu.unite(mems[0] / n, mems[k] / n);
      dsu.unite(n + mems[0] % n, n + mems[k] % n);
    }
  }
  std::map<int, Presentation::Block> blocks;
  for (int i = 0; i < n; ++i) blocks[dsu.find(i)].rows.push_back(i);
  for (int j = 0; j < n; ++j) blocks[dsu.find(n + j)].cols.push_back(j);
  for (auto& [root, b] : blocks) p.blocks.push_back(std::move(b));
  std::sort(p.blocks.begin(), p.blocks.end(), [](const auto& a, const auto& b) {
    int ra = a.rows.empty() ? 1 << 20 : a.rows.front();
    int rb = b.rows.empty() ? 1 << 20 : b.rows.front();
    return ra < rb;
  });

  auto termName = [&](int key) {
    auto it = p.varNames.find(key);
    if (it != p.varNames.end()) return it->second;
    return rs.entryName(key);
  };
  for (const LinEq& row : rs.basis().rows()) {
    std::string s;
    bool leading = true;
    for (const auto& [v, c] : row.terms) {
      s += format_coeff_name(c, termName(v), leading);
      leading = false;
    }
    s += " = " + rational_str(row.rhs);
    p.identities.push_back(std::move(s));
  }
  std::sort(p.identities.begin(), p.identities.end());
  return p;
}

}  // namespace pottsym
