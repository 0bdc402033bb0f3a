#include "qflag/calculus.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qflag {

// ---------------------------------------------------------------- helpers

int MonomialIndex::index(const Monomial &m) {
  auto it = idx_.find(m);
  if (it != idx_.end()) return it->second;
  int i = static_cast<int>(idx_.size());
  idx_.emplace(m, i);
  return i;
}

SparseVec MonomialIndex::coords(const UqElement &x) {
  std::map<int, RatQ> m;
  for (const auto &[mono, c] : x.terms()) m[index(mono)] = c;
  return sparse_from_map(m);
}

bool in_span(const std::vector<UqElement> &basis, const UqElement &x) {
  MonomialIndex idx;
  Echelon ech;
  for (const auto &b : basis) ech.insert(idx.coords(b));
  return ech.contains(idx.coords(x));
}

namespace {

bool is_root_weight(const std::vector<int> &w, Root &r) {
  int first = -1, last = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (w[i] != 1) return false;
    if (first < 0) first = static_cast<int>(i);
    else if (last != static_cast<int>(i) - 1) return false;
    last = static_cast<int>(i);
  }
  if (first < 0) return false;
  r = Root{first + 1, last + 2};
  return true;
}

std::vector<int> add_weights(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

Alphabet TangentSpace::alphabet() const { return Alphabet(labels, weights); }

int TangentSpace::letter_of(const Root &r) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return static_cast<int>(k);
  std::string lab = cotangent_label(r);
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == lab) return static_cast<int>(k);
  throw Error("tangent space has no generator for root " + root_label(r));
}

TangentSpace tangent_from_word(const Uq &uq, const WWord &w) {
  TangentSpace t;
  t.n = uq.rank();
  t.word = w;
  t.roots = beta_sequence(w, t.n);
  t.basis = uq.root_vectors(w);
  for (std::size_t k = 0; k < t.roots.size(); ++k) {
    std::vector<int> wt = root_weight(t.roots[k], t.n);
    if (uq.weight(t.basis[k]) != wt) throw Error("tangent_from_word: root vector weight mismatch");
    t.weights.push_back(wt);
    t.labels.push_back(cotangent_label(t.roots[k]));
  }
  return t;
}

TangentSpace tangent_from_exprs(const Uq &uq, const std::vector<std::string> &exprs,
                                const std::map<std::string, RatQ> &vars) {
  TangentSpace t;
  t.n = uq.rank();
  t.exprs = exprs;
  MonomialIndex idx;
  Echelon ech;
  std::map<std::string, int> seen;
  for (const auto &s : exprs) {
    UqElement x = parse_uq(uq, s, vars);
    if (x.is_zero()) throw Error("tangent expression '" + s + "' is zero");
    if (!x.positive()) throw Error("tangent expression '" + s + "' is not in the positive part");
    if (!uq.counit(x).is_zero()) throw Error("tangent expression '" + s + "' has a constant term");
    std::vector<int> wt = uq.weight(x);
    if (!ech.insert(idx.coords(x))) throw Error("tangent expressions are linearly dependent at '" + s + "'");
    Root r;
    std::string lab = is_root_weight(wt, r) ? cotangent_label(r) : "x" + std::to_string(t.basis.size() + 1);
    if (int c = seen[lab]++; c > 0) lab += "_" + std::to_string(c + 1);
    t.basis.push_back(x);
    t.weights.push_back(wt);
    t.labels.push_back(lab);
  }
  return t;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::two_sided: return "two_sided";
    case Verdict::left_only: return "left_only";
    case Verdict::right_only: return "right_only";
    case Verdict::neither: return "neither";
  }
  return "neither";
}

Verdict parse_verdict(const std::string &s) {
  for (Verdict v : {Verdict::two_sided, Verdict::left_only, Verdict::right_only, Verdict::neither})
    if (verdict_str(v) == s) return v;
  throw Error("unknown verdict '" + s + "'");
}

// ---------------------------------------------------------------- coideal

CoidealReport coideal_check(const Uq &uq, const TangentSpace &t) {
  MonomialIndex idx;
  Echelon span;
  for (const auto &x : t.basis) span.insert(idx.coords(x));
  span.insert(idx.coords(uq.one()));
  const std::vector<int> zero(static_cast<std::size_t>(t.n), 0);
  CoidealReport rep;
  rep.right = rep.left = true;
  for (std::size_t e = 0; e < t.basis.size(); ++e) {
    TensorSquare d = uq.coproduct(t.basis[e]);
    for (int side = 0; side < 2; ++side) {
      bool &ok = side == 0 ? rep.right : rep.left;
      if (!ok) continue;
      // Group by the untested leg; drop K from the tested leg.
      std::map<Monomial, UqElement> groups;
      for (const auto &[k, c] : d.terms()) {
        const Monomial &tested = side == 0 ? k.first : k.second;
        const Monomial &fixed = side == 0 ? k.second : k.first;
        groups[fixed].add(Monomial{tested.F, zero, tested.E}, c);
      }
      for (const auto &[fixed, comb] : groups) {
        if (comb.is_zero() || span.contains(idx.coords(comb))) continue;
        ok = false;
        rep.witnesses.push_back({side == 0 ? "right" : "left", e, uq.render(fixed), uq.render(comb)});
        break;
      }
    }
  }
  if (rep.right && rep.left) rep.verdict = Verdict::two_sided;
  else if (rep.right) rep.verdict = Verdict::right_only;
  else if (rep.left) rep.verdict = Verdict::left_only;
  else rep.verdict = Verdict::neither;
  return rep;
}

// ---------------------------------------------------------------- relations

std::vector<FreeElement> RelationSpace::all() const {
  std::vector<FreeElement> out;
  for (const auto &[w, v] : by_weight) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::size_t RelationSpace::size() const {
  std::size_t s = 0;
  for (const auto &[w, v] : by_weight) s += v.size();
  return s;
}

MonomialOrder cotangent_order(const TangentSpace &t) { return MonomialOrder::natural(t.dim()); }

int default_kmax(const TangentSpace &t) { return static_cast<int>(t.dim()) + 1; }

namespace {

struct WeightBlock {
  std::vector<Word> pairs;
  std::vector<SparseVec> kernel_part;  // basis of C_mu in pair coordinates
};

std::map<std::vector<int>, WeightBlock> product_blocks(const Uq &uq, const TangentSpace &t) {
  std::map<std::vector<int>, WeightBlock> blocks;
  const std::size_t d = t.dim();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      blocks[add_weights(t.weights[k], t.weights[l])].pairs.push_back(
          Word{static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)});
  for (auto &[mu, b] : blocks) {
    MonomialIndex idx;
    std::vector<SparseVec> vs;
    for (const auto &p : b.pairs) vs.push_back(idx.coords(uq.mul(t.basis[p[0]], t.basis[p[1]])));
    for (std::size_t k = 0; k < d; ++k)
      if (t.weights[k] == mu) vs.push_back(idx.coords(t.basis[k]));
    const int m = static_cast<int>(b.pairs.size());
    Echelon ech;
    for (const auto &v : kernel(vs)) {
      SparseVec part;
      for (const auto &[i, c] : v)
        if (i < m) part.emplace_back(i, c);
      if (!part.empty()) ech.insert(part);
    }
    b.kernel_part = ech.rref();
  }
  return blocks;
}

// Row-reduce relations so that each row leads with its largest word.
std::vector<FreeElement> canonical_rows(const std::vector<SparseVec> &rows, const std::vector<Word> &words,
                                        const std::function<bool(const Word &, const Word &)> &greater) {
  std::vector<int> perm(words.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return greater(words[a], words[b]); });
  std::vector<int> pos(words.size());
  for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  Echelon ech;
  for (const auto &r : rows) {
    std::map<int, RatQ> m;
    for (const auto &[i, c] : r) m[pos[static_cast<std::size_t>(i)]] = c;
    ech.insert(sparse_from_map(m));
  }
  std::vector<FreeElement> out;
  for (const auto &r : ech.rref()) {
    FreeElement f;
    for (const auto &[i, c] : r) f.add(words[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], c);
    out.push_back(f);
  }
  return out;
}

}  // namespace

RelationSpace quadratic_relations(const Uq &uq, const TangentSpace &t) {
  RelationSpace rs;
  MonomialOrder ord = cotangent_order(t);
  auto greater = [&](const Word &a, const Word &b) { return ord.less(b, a); };
  for (const auto &[mu, b] : product_blocks(uq, t)) {
    auto ann = annihilator(b.kernel_part, static_cast<int>(b.pairs.size()));
    if (ann.empty()) continue;
    rs.by_weight[mu] = canonical_rows(ann, b.pairs, greater);
  }
  return rs;
}

std::map<std::vector<int>, std::size_t> product_kernel_dims(const Uq &uq, const TangentSpace &t) {
  std::map<std::vector<int>, std::size_t> out;
  for (const auto &[mu, b] : product_blocks(uq, t)) out[mu] = b.kernel_part.size();
  return out;
}

DimensionTable exterior_dims(const TangentSpace &t, const RelationSpace &r, int kmax,
                             CompletionLimits limits) {
  DimensionTable dt;
  dt.dims = graded_dims(r.all(), t.alphabet(), cotangent_order(t), kmax, limits);
  const int d = static_cast<int>(t.dim());
  dt.classical = kmax >= d + 1;
  for (int k = 0; k <= kmax && dt.classical; ++k)
    if (dt.dims[static_cast<std::size_t>(k)] != binom(d, k)) dt.classical = false;
  return dt;
}

// ---------------------------------------------------------------- cotangent module

std::vector<OqElement> cotangent_representatives(const VectorRep &rep, const TangentSpace &t) {
  const int n = t.n;
  const std::size_t d = t.dim();
  std::vector<OqWord> words = all_oq_words(n, 1);
  std::vector<SparseVec> vs;
  for (const auto &w : words) {
    std::map<int, RatQ> m;
    for (std::size_t k = 0; k < d; ++k) {
      RatQ p = rep.pair(t.basis[k], w);
      if (!p.is_zero()) m[static_cast<int>(k)] = p;
    }
    vs.push_back(sparse_from_map(m));
  }
  std::vector<OqElement> out;
  for (std::size_t g = 0; g < d; ++g) {
    std::vector<SparseVec> all = vs;
    all.push_back({{static_cast<int>(g), RatQ(1)}});
    const int last = static_cast<int>(words.size());
    bool found = false;
    for (const auto &kv : kernel(all)) {
      RatQ cl;
      for (const auto &[i, c] : kv)
        if (i == last) cl = c;
      if (cl.is_zero()) continue;
      OqElement y;
      for (const auto &[i, c] : kv)
        if (i < last) y.add(words[static_cast<std::size_t>(i)], -c / cl);
      out.push_back(y);
      found = true;
      break;
    }
    if (!found) throw Error("cotangent_representatives: no degree-one dual element for " + t.labels[g]);
  }
  return out;
}

std::vector<std::vector<RatQ>> cotangent_action(const VectorRep &rep, const TangentSpace &t, int a, int b) {
  if (a < 1 || b < 1 || a > t.n + 1 || b > t.n + 1) throw Error("cotangent_action: generator index out of range");
  const std::size_t d = t.dim();
  auto reps = cotangent_representatives(rep, t);
  OqElement u = OqElement::word({{a, b}});
  std::vector<std::vector<RatQ>> m(d, std::vector<RatQ>(d));
  for (std::size_t g = 0; g < d; ++g) {
    OqElement img = reps[g] * u;
    for (std::size_t k = 0; k < d; ++k) m[k][g] = rep.pair(t.basis[k], img);
  }
  return m;
}

// ---------------------------------------------------------------- associated graded

namespace {

// Sorted letters; the multiset with the larger ascending sequence is bigger.
std::vector<std::uint8_t> multiset_key(const Word &w) {
  std::vector<std::uint8_t> s(w.begin(), w.end());
  std::sort(s.begin(), s.end());
  return s;
}

bool multiset_greater(const Word &a, const Word &b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return multiset_key(a) > multiset_key(b);
}

}  // namespace

RelationSpace gr_leading_relations(const TangentSpace &t, const RelationSpace &r) {
  MonomialOrder ord = cotangent_order(t);
  auto greater = [&](const Word &a, const Word &b) {
    if (multiset_key(a) != multiset_key(b) || a.size() != b.size()) return multiset_greater(a, b);
    return ord.less(b, a);
  };
  RelationSpace out;
  for (const auto &[mu, rows] : r.by_weight) {
    std::vector<Word> words;
    std::map<Word, int> pos;
    for (const auto &f : rows)
      for (const auto &[w, c] : f.terms())
        if (!pos.count(w)) {
          pos[w] = static_cast<int>(words.size());
          words.push_back(w);
        }
    std::vector<SparseVec> vs;
    for (const auto &f : rows) {
      std::map<int, RatQ> m;
      for (const auto &[w, c] : f.terms()) m[pos[w]] = c;
      vs.push_back(sparse_from_map(m));
    }
    std::vector<SparseVec> leads;
    for (const auto &f : canonical_rows(vs, words, greater)) {
      const Word *top = nullptr;
      for (const auto &[w, c] : f.terms())
        if (!top || multiset_greater(w, *top)) top = &w;
      std::map<int, RatQ> m;
      auto key = multiset_key(*top);
      for (const auto &[w, c] : f.terms())
        if (multiset_key(w) == key) m[pos[w]] = c;
      leads.push_back(sparse_from_map(m));
    }
    out.by_weight[mu] = canonical_rows(leads, words, [&](const Word &a, const Word &b) { return ord.less(b, a); });
  }
  return out;
}

std::vector<FreeElement> q_commutation_relations(const TangentSpace &t) {
  if (t.roots.size() != t.dim()) throw Error("q-commutation relations need a word-derived tangent space");
  std::vector<FreeElement> out;
  const std::size_t d = t.dim();
  for (std::size_t b = 0; b < d; ++b) {
    auto lb = static_cast<std::uint8_t>(b);
    out.push_back(FreeElement::word(Word{lb, lb}));
    // Relations list the later convex letter first.
    for (std::size_t g = 0; g < b; ++g) {
      auto lg = static_cast<std::uint8_t>(g);
      out.push_back(FreeElement::word(Word{lb, lg}) +
                    FreeElement::word(Word{lg, lb}, RatQ::q_pow(root_pairing(t.roots[b], t.roots[g]))));
    }
  }
  return out;
}

std::vector<FreeElement> five_family_relations(const TangentSpace &t) {
  const int m = t.n + 1;
  auto L = [&](int j, int i) { return static_cast<std::uint8_t>(t.letter_of(Root{i, j})); };
  auto w2 = [](std::uint8_t a, std::uint8_t b) { return Word{a, b}; };
  std::vector<FreeElement> out;
  const RatQ q = RatQ::q_pow(1);
  for (int i = 1; i <= m; ++i)
    for (int ip = i + 1; ip <= m; ++ip)
      for (int j = ip + 1; j <= m; ++j)
        out.push_back(FreeElement::word(w2(L(j, i), L(j, ip))) + FreeElement::word(w2(L(j, ip), L(j, i)), q));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int jp = j + 1; jp <= m; ++jp)
        out.push_back(FreeElement::word(w2(L(j, i), L(jp, i))) + FreeElement::word(w2(L(jp, i), L(j, i)), q));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.push_back(FreeElement::word(w2(L(j, i), L(j, i))));
  for (int i = 1; i <= m; ++i)
    for (int ip = i + 1; ip <= m; ++ip)
      for (int j = ip + 1; j <= m; ++j)
        for (int jp = j + 1; jp <= m; ++jp)
          out.push_back(FreeElement::word(w2(L(j, ip), L(jp, i))) + FreeElement::word(w2(L(jp, i), L(j, ip))) +
                        FreeElement::word(w2(L(jp, ip), L(j, i)), RatQ::nu()));
  for (int k = 1; k <= m; ++k)
    for (int j = k + 1; j <= m; ++j)
      for (int kp = k + 1; kp <= m; ++kp)
        for (int jp = std::max(j + 1, kp + 1); jp <= m; ++jp)
          out.push_back(FreeElement::word(w2(L(j, k), L(jp, kp))) +
                        FreeElement::word(w2(L(jp, kp), L(j, k)), RatQ::q_pow(j == kp ? -1 : 0)));
  return out;
}

// ---------------------------------------------------------------- Frobenius

FrobeniusReport frobenius_report(const TangentSpace &t, const RelationSpace &r, CompletionLimits limits) {
  const int d = static_cast<int>(t.dim());
  Completer comp(t.alphabet(), cotangent_order(t), r.all(), limits);
  comp.extend_to(d + 1);
  const TruncatedGB &gb = comp.gb();
  auto dims = count_normal_words(gb, d + 1);
  FrobeniusReport fr;
  if (dims[static_cast<std::size_t>(d + 1)] != 0) {
    fr.top_degree = -1;
    return fr;
  }
  int top = 0;
  for (int k = 0; k <= d; ++k)
    if (dims[static_cast<std::size_t>(k)]) top = k;
  fr.top_degree = top;
  fr.top_dimension = dims[static_cast<std::size_t>(top)];
  if (fr.top_dimension != 1) return fr;
  const Word topw = normal_words(gb, top).front();
  auto top_coeff = [&](const Word &a, const Word &b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    const FreeElement &nf = gb.nf_word(w);
    auto it = nf.terms().find(topw);
    return it == nf.terms().end() ? RatQ(0) : it->second;
  };
  for (int k = 0; k <= top; ++k) {
    auto lo = normal_words(gb, k), hi = normal_words(gb, top - k);
    Echelon ech;
    for (const auto &u : lo) {
      std::map<int, RatQ> row;
      for (std::size_t j = 0; j < hi.size(); ++j) {
        RatQ c = top_coeff(u, hi[j]);
        if (!c.is_zero()) row[static_cast<int>(j)] = c;
      }
      ech.insert(sparse_from_map(row));
    }
    fr.pairing_nondegenerate.push_back(ech.rank() == lo.size() && lo.size() == hi.size());
  }
  for (int g = 0; g < d; ++g) {
    Word hat;
    for (int x = 0; x < d; ++x)
      if (x != g) hat.push_back(static_cast<std::uint8_t>(x));
    Word gw{static_cast<std::uint8_t>(g)};
    RatQ a = top_coeff(gw, hat), b = top_coeff(hat, gw);
    if (a.is_zero() || b.is_zero()) {
      fr.nakayama.push_back(RatQ(0));
      fr.nakayama_sign.push_back(0);
      continue;
    }
    RatQ c = a / b;
    fr.nakayama.push_back(c);
    fr.nakayama_sign.push_back(c == RatQ(1) ? 1 : (c == RatQ(-1) ? -1 : 0));
  }
  return fr;
}

// ---------------------------------------------------------------- lines, Grassmannian, Borel-Weil

std::vector<std::vector<int>> line_decomposition(const TangentSpace &t, const DimensionTable &d, int k) {
  if (!d.classical) throw Error("line_decomposition: calculus is not classical");
  const int m = static_cast<int>(t.dim());
  if (k < 0 || k > m) throw Error("line_decomposition: degree out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> sel(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> w(static_cast<std::size_t>(t.n), 0);
      for (int s : sel) w = add_weights(w, t.weights[static_cast<std::size_t>(s)]);
      out.push_back(w);
      return;
    }
    for (int i = start; i < m; ++i) {
      sel[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GrassmannReport grassmann_restriction(const Uq &uq, const TangentSpace &t, int r) {
  if (r < 1 || r > t.n) throw Error("grassmann_restriction: r out of range");
  GrassmannReport g;
  TangentSpace &s = g.restricted;
  s.n = t.n;
  s.word = t.word;
  for (std::size_t k = 0; k < t.dim(); ++k) {
    if (t.weights[k][static_cast<std::size_t>(r - 1)] == 0) continue;
    s.basis.push_back(t.basis[k]);
    s.weights.push_back(t.weights[k]);
    s.labels.push_back(t.labels[k]);
    if (!t.roots.empty()) s.roots.push_back(t.roots[k]);
  }
  std::vector<Generator> gens;
  for (int j = 1; j <= t.n; ++j) {
    if (j != r) {
      gens.push_back({'E', j, 1});
      gens.push_back({'F', j, 1});
    }
    gens.push_back({'K', j, 1});
    gens.push_back({'K', j, -1});
  }
  // Membership is tested in the dual of the Grassmannian: elements X E_j with
  // j != r pair to zero with it, so they are added to the span.
  MonomialIndex idx;
  std::map<std::vector<int>, Echelon> spans;
  auto span_at = [&](const std::vector<int> &wt) -> Echelon & {
    auto it = spans.find(wt);
    if (it != spans.end()) return it->second;
    Echelon &e = spans[wt];
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (s.weights[k] == wt) e.insert(idx.coords(s.basis[k]));
    for (int j = 1; j <= t.n; ++j) {
      if (j == r || wt[static_cast<std::size_t>(j - 1)] == 0) continue;
      std::vector<int> letters;
      for (int i = 1; i <= t.n; ++i)
        for (int c = 0; c < wt[static_cast<std::size_t>(i - 1)] - (i == j ? 1 : 0); ++c)
          letters.push_back(i);
      do {
        std::vector<int> w = letters;
        w.push_back(j);
        e.insert(idx.coords(uq.E_word(w)));
      } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return e;
  };
  g.closed = true;
  for (const auto &y : gens)
    for (std::size_t k = 0; k < s.dim() && g.closed; ++k) {
      UqElement raw = uq.adjoint(y, s.basis[k]);
      // K_j with j != r acts trivially once moved to the right of the E-word.
      UqElement img;
      for (const auto &[m, c] : raw.terms()) {
        if (!m.F.empty() || m.K[static_cast<std::size_t>(r - 1)] != 0) {
          img.add(m, c);
          continue;
        }
        long e = 0;
        for (std::size_t i = 0; i < m.K.size(); ++i)
          for (auto l : m.E) e += static_cast<long>(m.K[i]) * uq.cartan(static_cast<int>(i), l);
        img.add(Monomial{{}, std::vector<int>(m.K.size(), 0), m.E}, c * RatQ::q_pow(e));
      }
      if (img.is_zero()) continue;
      bool ok = img.positive();
      if (ok) {
        std::vector<int> wt = s.weights[k];
        if (y.kind == 'E') ++wt[static_cast<std::size_t>(y.index - 1)];
        if (y.kind == 'F') --wt[static_cast<std::size_t>(y.index - 1)];
        bool valid = std::all_of(wt.begin(), wt.end(), [](int v) { return v >= 0; });
        ok = valid && span_at(wt).contains(idx.coords(img));
      }
      if (!ok) {
        g.closed = false;
        g.failure = "ad(" + y.str() + ") " + s.labels[k] + " = " + uq.render(img);
      }
    }
  return g;
}

std::vector<OqElement> dbar_kernel(const VectorRep &rep, const std::vector<OqWord> &words, const TangentSpace &t) {
  return rep.action_kernel(words, t.basis);
}

}  // namespace qflag
