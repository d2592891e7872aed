#include "pottsym/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pottsym {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Commutative:
      return "Commutative";
    case Verdict::Quantum:
      return "Quantum";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

void NumericRep::syncDoubles() {
  entries.assign(static_cast<size_t>(n) * n * d * d, {0.0, 0.0});
  for (size_t k = 0; k < exactEntries.size(); ++k)
    entries[k] = {exactEntries[k].reDouble(), exactEntries[k].imDouble()};
}

double VerifyReport::maxResidual() const {
  double m = 0.0;
  for (const auto& f : families) m = std::max(m, f.residual);
  return m;
}

namespace {

template <typename T>
struct FieldOps;

template <>
struct FieldOps<GaussianRational> {
  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static GaussianRational fromCoupling(const GaussianRational& j) { return j; }
  static GaussianRational fromRational(const Rational& r) { return GaussianRational(r); }
  static double absMax(const GaussianRational& x) {
    return std::max(std::fabs(x.reDouble()), std::fabs(x.imDouble()));
  }
};

template <>
struct FieldOps<std::complex<double>> {
  using C = std::complex<double>;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static C conj(const C& x) { return std::conj(x); }
  static C fromCoupling(const GaussianRational& j) { return {j.reDouble(), j.imDouble()}; }
  static C fromRational(const Rational& r) { return {r.get_d(), 0.0}; }
  static double absMax(const C& x) { return std::max(std::fabs(x.real()), std::fabs(x.imag())); }
};

template <typename T>
struct MatOps {
  int d;
  using FO = FieldOps<T>;
  using Mat = std::vector<T>;

  Mat zero() const { return Mat(d * d, FO::zero()); }
  Mat identity() const {
    Mat m = zero();
    for (int r = 0; r < d; ++r) m[r * d + r] = FO::one();
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat m = zero();
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k)
        for (int c = 0; c < d; ++c) m[r * d + c] += a[r * d + k] * b[k * d + c];
    return m;
  }
  void addScaled(Mat& acc, const T& s, const Mat& a) const {
    for (int k = 0; k < d * d; ++k) acc[k] += s * a[k];
  }
  Mat sub(Mat a, const Mat& b) const {
    for (int k = 0; k < d * d; ++k) a[k] -= b[k];
    return a;
  }
  Mat conjTranspose(const Mat& a) const {
    Mat m = zero();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m[c * d + r] = FO::conj(a[r * d + c]);
    return m;
  }
  double absMax(const Mat& a) const {
    double v = 0.0;
    for (const T& x : a) v = std::max(v, FO::absMax(x));
    return v;
  }
};

template <typename T>
std::vector<T> rep_entry(const NumericRep& rep, int i, int j) {
  std::vector<T> m(rep.d * rep.d);
  for (int r = 0; r < rep.d; ++r)
    for (int c = 0; c < rep.d; ++c) {
      if constexpr (std::is_same_v<T, GaussianRational>)
        m[r * rep.d + c] = rep.exactAt(i, j, r, c);
      else
        m[r * rep.d + c] = rep.at(i, j, r, c);
    }
  return m;
}

template <typename T>
std::vector<VerifyFamily> verify_families(const PottsModel& model, const RelationSet& rs,
                                          const NumericRep& rep) {
  using FO = FieldOps<T>;
  MatOps<T> ops{rep.d};
  int n = model.n();
  auto M = [&](int i, int j) { return rep_entry<T>(rep, i, j); };
  auto I = ops.identity();
  std::vector<VerifyFamily> fams;

  double projection = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto m = M(i, j);
      projection = std::max(projection, ops.absMax(ops.sub(ops.mul(m, m), m)));
      projection = std::max(projection, ops.absMax(ops.sub(ops.conjTranspose(m), m)));
    }
  fams.push_back({"projection", projection});

  double sums = 0.0;
  for (int i = 0; i < n; ++i) {
    auto row = ops.zero();
    auto col = ops.zero();
    for (int j = 0; j < n; ++j) {
      ops.addScaled(row, FO::one(), M(i, j));
      ops.addScaled(col, FO::one(), M(j, i));
    }
    sums = std::max(sums, ops.absMax(ops.sub(row, I)));
    sums = std::max(sums, ops.absMax(ops.sub(col, I)));
  }
  fams.push_back({"row_column_sums", sums});

  double states = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rs.kind(i, j) == EntryKind::Zero)
        states = std::max(states, ops.absMax(M(i, j)));
      else if (rs.kind(i, j) == EntryKind::One)
        states = std::max(states, ops.absMax(ops.sub(M(i, j), I)));
    }
  fams.push_back({"entry_states", states});

  double equal = 0.0;
  for (const auto& [key, mems] : rs.classMembers()) {
    if (rs.kindOfClass(key) != EntryKind::Var) continue;
    auto first = M(mems[0] / n, mems[0] % n);
    for (size_t k = 1; k < mems.size(); ++k)
      equal = std::max(equal, ops.absMax(ops.sub(M(mems[k] / n, mems[k] % n), first)));
  }
  fams.push_back({"equal_classes", equal});

  double zprod = 0.0;
  {
    std::vector<int> survivors = rs.survivingClasses();
    for (int a : survivors)
      for (int b : survivors) {
        if (a == b) continue;
        if (!rs.hasZeroProduct(a, b)) continue;
        zprod = std::max(zprod, ops.absMax(ops.mul(M(a / n, a % n), M(b / n, b % n))));
      }
  }
  fams.push_back({"zero_products", zprod});

  double linear = 0.0;
  for (const LinEq& row : rs.basis().rows()) {
    auto acc = ops.zero();
    for (const auto& [v, c] : row.terms) ops.addScaled(acc, FO::fromRational(c), M(v / n, v % n));
    ops.addScaled(acc, FO::fromRational(Rational(-row.rhs)), I);
    linear = std::max(linear, ops.absMax(acc));
  }
  fams.push_back({"linear_identities", linear});

  double commutant = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto acc = ops.zero();
      for (int k = 0; k < n; ++k) {
        if (!model.J(k, j).isZero()) ops.addScaled(acc, FO::fromCoupling(model.J(k, j)), M(i, k));
        if (!model.J(i, k).isZero())
          ops.addScaled(acc, FO::fromCoupling(-model.J(i, k)), M(k, j));
      }
      commutant = std::max(commutant, ops.absMax(acc));
    }
  fams.push_back({"coupling_commutant", commutant});

  double form = 0.0;
  {
    // P(k, g) = sum_l J(k, l) M(l, g); then Q^{bg} = sum_k M(k, b) P(k, g).
    std::vector<std::vector<T>> P(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      for (int g = 0; g < n; ++g) {
        auto acc = ops.zero();
        for (int l = 0; l < n; ++l)
          if (!model.J(k, l).isZero()) ops.addScaled(acc, FO::fromCoupling(model.J(k, l)), M(l, g));
        P[k * n + g] = std::move(acc);
      }
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g) {
        auto acc = ops.zero();
        for (int k = 0; k < n; ++k) {
          auto prod = ops.mul(M(k, b), P[k * n + g]);
          ops.addScaled(acc, FO::one(), prod);
        }
        ops.addScaled(acc, FO::fromCoupling(-model.J(b, g)), I);
        form = std::max(form, ops.absMax(acc));
      }
  }
  fams.push_back({"preservation_form", form});

  double level = 0.0;
  {
    const std::vector<GaussianRational>& f = rs.levels();
    for (int j = 0; j < n; ++j) {
      auto acc = ops.zero();
      for (int i = 0; i < n; ++i)
        if (!f[i].isZero()) ops.addScaled(acc, FO::fromCoupling(f[i]), M(j, i));
      ops.addScaled(acc, FO::fromCoupling(-f[j]), I);
      level = std::max(level, ops.absMax(acc));
    }
  }
  fams.push_back({"level_identity", level});

  return fams;
}

}  // namespace

NumericRep classical_rep(const PottsModel& model, const Permutation& sigma) {
  if (sigma.n() != model.n()) throw InputError("permutation size does not match vertex count");
  NumericRep rep;
  rep.n = model.n();
  rep.d = 1;
  rep.exact = true;
  rep.exactEntries.assign(static_cast<size_t>(rep.n) * rep.n, GaussianRational());
  for (int j = 0; j < rep.n; ++j) rep.exactAt(sigma(j), j, 0, 0) = GaussianRational(1);
  rep.syncDoubles();
  return rep;
}

NumericRep build_numeric_certificate(const PottsModel& model, const Permutation& s,
                                     const Permutation& t) {
  int n = model.n();
  if (s.n() != n || t.n() != n) throw InputError("witness permutation size mismatch");
  if (s.isIdentity() || t.isIdentity())
    throw InputError("certificate witnesses must be nontrivial");
  if (s.order() != 2 || t.order() != 2)
    throw InputError("certificate construction requires involutions");
  if ((s.supportMask() & t.supportMask()) != 0)
    throw InputError("certificate witnesses must have disjoint supports");
  if (!commutes_with_coupling(model, s) || !commutes_with_coupling(model, t))
    throw InputError("certificate witnesses must preserve the coupling matrix");

  const Rational half(1, 2);
  GaussianRational one(1), zero;
  // p = [[1,0],[0,0]], q = [[1/2,1/2],[1/2,1/2]]: projections at angle pi/4.
  std::vector<GaussianRational> p{one, zero, zero, zero};
  std::vector<GaussianRational> q{GaussianRational(half), GaussianRational(half),
                                  GaussianRational(half), GaussianRational(half)};
  std::vector<GaussianRational> id{one, zero, zero, one};
  auto complement = [&](const std::vector<GaussianRational>& m) {
    std::vector<GaussianRational> out = id;
    for (int k = 0; k < 4; ++k) out[k] -= m[k];
    return out;
  };

  NumericRep rep;
  rep.n = n;
  rep.d = 2;
  rep.exact = true;
  rep.exactEntries.assign(static_cast<size_t>(n) * n * 4, GaussianRational());
  auto put = [&](int i, int j, const std::vector<GaussianRational>& m) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) rep.exactAt(i, j, r, c) = m[r * 2 + c];
  };
  for (int j = 0; j < n; ++j) {
    if (s(j) != j) {
      put(j, j, complement(p));
      put(s(j), j, p);
    } else if (t(j) != j) {
      put(j, j, complement(q));
      put(t(j), j, q);
    } else {
      put(j, j, id);
    }
  }
  rep.syncDoubles();
  return rep;
}

VerifyReport verify_numeric_rep(const PottsModel& model, const RelationSet& rs,
                                const NumericRep& rep, double tol) {
  if (rep.n != model.n() || rs.n() != model.n())
    throw InputError("representation dimensions do not match the model");
  if (rep.d < 1) throw InputError("representation dimension must be positive");
  VerifyReport report;
  report.tolerance = tol;
  report.exactMode = rep.exact;
  report.families = rep.exact ? verify_families<GaussianRational>(model, rs, rep)
                              : verify_families<std::complex<double>>(model, rs, rep);
  report.pass = true;
  for (const auto& f : report.families) report.pass = report.pass && f.residual < tol;
  return report;
}

WitnessInfo noncommutation_witness(const RelationSet& rs, const NumericRep& rep) {
  WitnessInfo w;
  std::vector<int> survivors = rs.survivingClasses();
  int n = rs.n();
  if (rep.exact) {
    MatOps<GaussianRational> ops{rep.d};
    Rational best(0);
    for (size_t x = 0; x < survivors.size(); ++x)
      for (size_t y = x + 1; y < survivors.size(); ++y) {
        int a = survivors[x], b = survivors[y];
        auto ma = rep_entry<GaussianRational>(rep, a / n, a % n);
        auto mb = rep_entry<GaussianRational>(rep, b / n, b % n);
        auto comm = ops.sub(ops.mul(ma, mb), ops.mul(mb, ma));
        for (const GaussianRational& e : comm) {
          Rational re = e.re, im = e.im;
          if (sgn(re) < 0) re = -re;
          if (sgn(im) < 0) im = -im;
          Rational mag = re > im ? re : im;
          if (mag > best) {
            best = mag;
            w.entryA = a;
            w.entryB = b;
          }
        }
      }
    w.magnitude = best.get_d();
    w.exactMagnitude = rational_str(best);
  } else {
    MatOps<std::complex<double>> ops{rep.d};
    for (size_t x = 0; x < survivors.size(); ++x)
      for (size_t y = x + 1; y < survivors.size(); ++y) {
        int a = survivors[x], b = survivors[y];
        auto ma = rep_entry<std::complex<double>>(rep, a / n, a % n);
        auto mb = rep_entry<std::complex<double>>(rep, b / n, b % n);
        double mag = ops.absMax(ops.sub(ops.mul(ma, mb), ops.mul(mb, ma)));
        if (mag > w.magnitude) {
          w.magnitude = mag;
          w.entryA = a;
          w.entryB = b;
        }
      }
  }
  return w;
}

std::optional<std::string> structure_hint(const RelationSet& rs, const Presentation& pres,
                                          const AutGroup& aut, Verdict verdict) {
  if (verdict == Verdict::Commutative) {
    // A commutative presentation realizes the function algebra of the
    // classical group, so name the group when a small template matches.
    if (aut.order == 1) return "C(1)";
    if (aut.order == 2) return "C(Z2)";
    if (aut.order == 4 && aut.elements) {
      bool allInvolutions = true;
      for (const Permutation& p : *aut.elements)
        if (!p.isIdentity() && p.order() != 2) allInvolutions = false;
      return allInvolutions ? "C(Z2 x Z2)" : "C(Z4)";
    }
    return "C(G), |G| = " + aut.order.get_str();
  }

  // Free-product hint: surviving variables split into blocks with no relation
  // crossing between them.
  int n = rs.n();
  std::vector<int> rowBlock(n, -1);
  for (size_t b = 0; b < pres.blocks.size(); ++b)
    for (int r : pres.blocks[b].rows) rowBlock[r] = static_cast<int>(b);
  std::vector<int> survivors = rs.survivingClasses();
  auto blockOfClass = [&](int key) { return rowBlock[key / n]; };
  std::set<int> blocksWithVars;
  for (int key : survivors) blocksWithVars.insert(blockOfClass(key));
  if (blocksWithVars.size() < 2) return std::nullopt;

  for (const LinEq& row : rs.basis().rows()) {
    std::set<int> touched;
    for (const auto& [v, c] : row.terms) touched.insert(blockOfClass(v));
    if (touched.size() > 1) return std::nullopt;
  }
  for (int a : survivors)
    for (int b : survivors)
      if (blockOfClass(a) != blockOfClass(b) && rs.hasZeroProduct(a, b)) return std::nullopt;

  std::vector<int> freePerBlock(pres.blocks.size(), 0);
  for (int key : pres.freeClassKeys) freePerBlock[blockOfClass(key)]++;
  std::string hint;
  for (int b : blocksWithVars) {
    if (!hint.empty()) hint += " * ";
    hint += freePerBlock[b] == 1 ? "C(Z2)" : "unnamed component";
  }
  return hint;
}

Classification classify(const PottsModel& model, const RelationSet& rs, const AutGroup& aut) {
  Classification c;
  Presentation pres = extract_presentation(rs);
  size_t survivors = rs.survivingClasses().size();

  if (rs.allSurvivingCommute()) {
    c.verdict = Verdict::Commutative;
    c.notes.push_back(survivors == 0
                          ? "no free entries survive; the presentation is scalar"
                          : "all " + std::to_string(survivors) +
                                " surviving variable classes commute pairwise");
    c.structureHint = structure_hint(rs, pres, aut, c.verdict);
  } else {
    DisjointPairResult dp = disjoint_pair_search(aut);
    if (dp.status == DisjointPairResult::Status::Found) {
      c.disjointPair = dp.witnesses;
      if (dp.bothInvolutions) {
        try {
          NumericRep rep =
              build_numeric_certificate(model, dp.witnesses->first, dp.witnesses->second);
          VerifyReport vr = verify_numeric_rep(model, rs, rep, kCertificateTol);
          WitnessInfo wit = noncommutation_witness(rs, rep);
          if (vr.pass && wit.magnitude >= kWitnessThreshold) {
            c.verdict = Verdict::Quantum;
            c.notes.push_back(
                "two coupling-preserving involutions with disjoint supports yield a verified "
                "2-dimensional representation with noncommuting entries");
            c.structureHint = structure_hint(rs, pres, aut, c.verdict);
          } else {
            c.verdict = Verdict::Undetermined;
            c.notes.push_back("certificate construction did not verify; leaving undetermined");
          }
          c.certificate = std::move(rep);
          c.verification = std::move(vr);
          c.witness = wit;
        } catch (const InputError& err) {
          c.verdict = Verdict::Undetermined;
          c.notes.push_back(std::string("certificate construction infeasible: ") + err.what());
        }
      } else {
        c.verdict = Verdict::Undetermined;
        c.notes.push_back(
            "a disjoint pair of automorphisms exists but not as involutions; the certificate "
            "builder only consumes involutions");
      }
    } else if (dp.status == DisjointPairResult::Status::None) {
      c.verdict = Verdict::Undetermined;
      c.notes.push_back(
          "not all surviving variables commute and no disjoint pair of nontrivial "
          "automorphisms exists");
    } else {
      c.verdict = Verdict::Undetermined;
      c.notes.push_back(dp.note);
    }
  }
  c.notes.push_back("verdict is independent of q: the derived relations hold for every q >= 2");
  return c;
}

}  // namespace pottsym
