#pragma once

// Randomized property suites shared by the unit tests and the acceptance binary.

#include "qflag/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qflag::props {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void record(bool pass, const std::string &what) {
    ++cases;
    if (pass) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline RatQ random_scalar(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  int v = c(rng);
  if (v == 0) v = 1;
  return RatQ(v) * RatQ::q_pow(e(rng));
}

// Product of up to `len` generators E_i, F_i, K_i^{+-1}, times a scalar.
inline UqElement random_word(const Uq &uq, std::mt19937_64 &rng, int len, bool positive = false) {
  std::uniform_int_distribution<int> idx(1, uq.rank()), kind(0, positive ? 0 : 3), l(1, len);
  UqElement x = uq.scalar(random_scalar(rng));
  for (int k = l(rng); k > 0; --k) {
    int i = idx(rng);
    switch (kind(rng)) {
      case 0: x = uq.mul(x, uq.E(i)); break;
      case 1: x = uq.mul(x, uq.F(i)); break;
      case 2: x = uq.mul(x, uq.K(i, 1)); break;
      default: x = uq.mul(x, uq.K(i, -1)); break;
    }
  }
  return x;
}

inline UqElement random_element(const Uq &uq, std::mt19937_64 &rng, int len, bool positive = false) {
  return random_word(uq, rng, len, positive) + random_word(uq, rng, len, positive);
}

// One shared U_q per rank; each suite is single-threaded.
inline const Uq &uq_of(int n) {
  static std::map<int, std::unique_ptr<Uq>> cache;
  auto &p = cache[n];
  if (!p) p = std::make_unique<Uq>(n);
  return *p;
}

inline SuiteResult braid_relations(int cases, std::uint64_t seed) {
  SuiteResult r{"braid relations of T_i"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 2);
    const Uq &uq = uq_of(n);
    std::uniform_int_distribution<int> idx(1, n);
    int i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    UqElement x = random_word(uq, rng, 2);
    UqElement lhs, rhs;
    if (std::abs(i - j) == 1) {
      lhs = uq.braid_T(i, uq.braid_T(j, uq.braid_T(i, x)));
      rhs = uq.braid_T(j, uq.braid_T(i, uq.braid_T(j, x)));
    } else {
      lhs = uq.braid_T(i, uq.braid_T(j, x));
      rhs = uq.braid_T(j, uq.braid_T(i, x));
    }
    // T_i is an algebra map: check on a product as well.
    UqElement y = random_word(uq, rng, 2);
    bool hom = uq.braid_T(i, uq.mul(x, y)) == uq.mul(uq.braid_T(i, x), uq.braid_T(i, y));
    r.record(lhs == rhs && hom, "n=" + std::to_string(n) + " T" + std::to_string(i) + " T" +
                                    std::to_string(j) + " on " + uq.render(x));
  }
  return r;
}

inline SuiteResult coproduct_multiplicative(int cases, std::uint64_t seed) {
  SuiteResult r{"coproduct multiplicativity and counit"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    int n = 1 + static_cast<int>(rng() % 3);
    const Uq &uq = uq_of(n);
    UqElement x = random_element(uq, rng, 3), y = random_element(uq, rng, 3);
    bool mult = uq.coproduct(uq.mul(x, y)) == uq.tensor_mul(uq.coproduct(x), uq.coproduct(y));
    TensorSquare d = uq.coproduct(x);
    bool counit = uq.apply_counit_left(d) == x && uq.apply_counit_right(d) == x;
    r.record(mult && counit, "n=" + std::to_string(n) + " x=" + uq.render(x) + " y=" + uq.render(y));
  }
  return r;
}

inline RatQ pair_tensor(const VectorRep &rep, const TensorSquare &t, const OqWord &a, const OqWord &b) {
  const Uq &uq = rep.uq();
  RatQ s;
  for (const auto &[mm, c] : t.terms()) {
    RatQ l = rep.pair(uq.from_monomial(mm.first), a);
    if (l.is_zero()) continue;
    s = s + c * l * rep.pair(uq.from_monomial(mm.second), b);
  }
  return s;
}

inline OqWord random_oq_word(std::mt19937_64 &rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n + 1);
  OqWord w;
  for (int k = 0; k < len; ++k) w.push_back({idx(rng), idx(rng)});
  return w;
}

// <XY, a> = <X (x) Y, Delta a> and <X, ab> = <Delta X, a (x) b>.
inline SuiteResult hopf_pairing(int cases, std::uint64_t seed) {
  SuiteResult r{"Hopf pairing axioms"};
  std::mt19937_64 rng(seed);
  static std::map<int, std::unique_ptr<VectorRep>> reps;
  for (int c = 0; c < cases; ++c) {
    int n = 1 + static_cast<int>(rng() % 2);
    const Uq &uq = uq_of(n);
    auto &rp = reps[n];
    if (!rp) rp = std::make_unique<VectorRep>(uq);
    const VectorRep &rep = *rp;
    UqElement x = random_element(uq, rng, 2), y = random_element(uq, rng, 2);
    int len = 1 + static_cast<int>(rng() % 2);
    OqWord a = random_oq_word(rng, n, len);
    // Delta of a word: sum over intermediate indices.
    RatQ rhs1;
    std::vector<int> mids(a.size(), 1);
    for (;;) {
      OqWord l, rr;
      for (std::size_t t = 0; t < a.size(); ++t) {
        l.push_back({a[t].first, mids[t]});
        rr.push_back({mids[t], a[t].second});
      }
      rhs1 = rhs1 + rep.pair(x, l) * rep.pair(y, rr);
      std::size_t t = 0;
      while (t < mids.size() && ++mids[t] > n + 1) mids[t++] = 1;
      if (t == mids.size()) break;
    }
    bool ax1 = rep.pair(uq.mul(x, y), a) == rhs1;
    OqWord b = random_oq_word(rng, n, 1 + static_cast<int>(rng() % 2));
    OqWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    bool ax2 = rep.pair(x, ab) == pair_tensor(rep, uq.coproduct(x), a, b);
    bool unit = rep.pair(x, OqWord{}) == uq.counit(x);
    r.record(ax1 && ax2 && unit, "n=" + std::to_string(n) + " x=" + uq.render(x) + " a=" + oq_word_str(a));
  }
  return r;
}

// Root vectors of commutation-equivalent words coincide as sets.
inline SuiteResult class_invariance(int cases, std::uint64_t seed) {
  SuiteResult r{"commutation-class invariance of root vectors"};
  std::mt19937_64 rng(seed);
  std::map<int, std::vector<WWord>> words;
  std::map<int, ClassGraph> graphs;
  for (int n : {2, 3, 4}) {
    words[n] = reduced_words_longest(n);
    graphs[n] = commutation_classes(n);
  }
  for (int c = 0; c < cases; ++c) {
    int n = 2 + static_cast<int>(rng() % 3);
    const Uq &uq = uq_of(n);
    const auto &ws = words[n];
    const ClassGraph &g = graphs[n];
    const WWord &w1 = ws[rng() % ws.size()];
    std::size_t cls = g.class_of(w1);
    std::vector<const WWord *> same;
    for (const auto &w : ws)
      if (g.class_of(w) == cls) same.push_back(&w);
    const WWord &w2 = *same[rng() % same.size()];
    auto render_all = [&](const WWord &w) {
      std::vector<std::string> s;
      for (const auto &x : uq.root_vectors(w)) s.push_back(uq.render(x));
      std::sort(s.begin(), s.end());
      return s;
    };
    r.record(render_all(w1) == render_all(w2),
             "n=" + std::to_string(n) + " " + word_str(w1, n) + " vs " + word_str(w2, n));
  }
  return r;
}

inline Verdict mirror(Verdict v) {
  if (v == Verdict::left_only) return Verdict::right_only;
  if (v == Verdict::right_only) return Verdict::left_only;
  return v;
}

struct ClassData {
  Verdict verdict = Verdict::neither;
  std::vector<std::uint64_t> dims;  // empty for neither
};

inline const ClassData &class_data(int n, const WWord &rep) {
  static std::map<std::pair<int, WWord>, ClassData> memo;
  auto key = std::make_pair(n, rep);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Uq &uq = uq_of(n);
  TangentSpace t = tangent_from_word(uq, rep);
  ClassData d;
  d.verdict = coideal_check(uq, t).verdict;
  if (d.verdict != Verdict::neither)
    d.dims = exterior_dims(t, quadratic_relations(uq, t), default_kmax(t)).dims;
  return memo.emplace(key, d).first->second;
}

// Index flip preserves verdicts and dimensions; word reversal mirrors verdicts.
inline SuiteResult opposite_duality(int cases, std::uint64_t seed) {
  SuiteResult r{"opposite-involution duality"};
  std::mt19937_64 rng(seed);
  std::map<int, ClassGraph> graphs;
  for (int n : {3, 4}) graphs[n] = commutation_classes(n);
  for (int c = 0; c < cases; ++c) {
    int n = 3 + static_cast<int>(rng() % 2);
    const ClassGraph &g = graphs[n];
    std::size_t k = rng() % g.nodes.size();
    const WWord &w = g.nodes[k].rep;
    const WWord &o = g.nodes[g.opposite[k]].rep;
    WWord rev(w.rbegin(), w.rend());
    const WWord &rv = g.nodes[g.class_of(rev)].rep;
    const ClassData &dw = class_data(n, w), &dop = class_data(n, o), &drv = class_data(n, rv);
    bool ok = dw.verdict == dop.verdict && dw.dims == dop.dims && drv.verdict == mirror(dw.verdict);
    r.record(ok, "n=" + std::to_string(n) + " " + word_str(w, n) + " " + verdict_str(dw.verdict) +
                     " opposite " + verdict_str(dop.verdict) + " reversed " + verdict_str(drv.verdict));
  }
  return r;
}

// Graded dimensions do not depend on the monomial order used for completion.
inline SuiteResult hilbert_order_invariance(int cases, std::uint64_t seed) {
  SuiteResult r{"Hilbert-function order invariance"};
  std::mt19937_64 rng(seed);
  struct Item {
    int n;
    TangentSpace t;
    RelationSpace rel;
    std::vector<std::uint64_t> dims;
  };
  std::vector<Item> items;
  for (int n : {2, 3}) {
    const Uq &uq = uq_of(n);
    ClassGraph g = commutation_classes(n);
    for (const auto &node : g.nodes) {
      TangentSpace t = tangent_from_word(uq, node.rep);
      if (coideal_check(uq, t).verdict == Verdict::neither) continue;
      RelationSpace rel = quadratic_relations(uq, t);
      auto d = exterior_dims(t, rel, default_kmax(t)).dims;
      items.push_back({n, t, rel, d});
    }
  }
  {
    const Uq &uq = uq_of(2);
    for (std::string th : {"1", "2", "q^2"}) {
      TangentSpace t = tangent_from_exprs(uq, {"E1", "E2", "[E2,E1]_{t}"}, {{"t", RatQ::parse(th)}});
      RelationSpace rel = quadratic_relations(uq, t);
      auto d = exterior_dims(t, rel, default_kmax(t)).dims;
      items.push_back({2, t, rel, d});
    }
  }
  for (int c = 0; c < cases; ++c) {
    const Item &it = items[rng() % items.size()];
    std::vector<int> rank(it.t.dim());
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    auto d = graded_dims(it.rel.all(), it.t.alphabet(), MonomialOrder(rank), default_kmax(it.t));
    std::ostringstream os;
    os << "n=" << it.n << " order";
    for (int x : rank) os << " " << x;
    r.record(d == it.dims, os.str());
  }
  return r;
}

inline std::vector<SuiteResult> all_suites(int cases, std::uint64_t seed) {
  return {braid_relations(cases, seed),       coproduct_multiplicative(cases, seed + 1),
          hopf_pairing(cases, seed + 2),      class_invariance(cases, seed + 3),
          opposite_duality(cases, seed + 4),  hilbert_order_invariance(cases, seed + 5)};
}

}  // namespace qflag::props
