#include "qflag/freealg.hpp"
#include "qflag/linalg.hpp"

#include <algorithm>
#include <set>

namespace qflag {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> labels, std::vector<std::vector<int>> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) throw Error("Alphabet: labels/weights size mismatch");
  if (labels_.size() > 250) throw Error("Alphabet: too many generators");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("Alphabet: duplicate labels");
  for (const auto &w : weights_)
    if (w.size() != weights_[0].size()) throw Error("Alphabet: ragged weights");
}

std::vector<int> Alphabet::weight_of(const Word &w) const {
  std::vector<int> r(weight_dim(), 0);
  for (auto c : w)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += weights_[c][i];
  return r;
}

std::string Alphabet::render(const Word &w, const std::string &sep) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += labels_[w[i]];
  }
  return s;
}

// ---------------------------------------------------------------- order

MonomialOrder MonomialOrder::natural(std::size_t m) {
  std::vector<int> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<int>(i);
  return MonomialOrder(r);
}

MonomialOrder MonomialOrder::reversed(std::size_t m) {
  std::vector<int> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<int>(m - 1 - i);
  return MonomialOrder(r);
}

bool MonomialOrder::less(const Word &a, const Word &b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return rank_[a[i]] < rank_[b[i]];
  }
  return false;
}

// ---------------------------------------------------------------- FreeElement

FreeElement FreeElement::word(Word w, RatQ c) {
  FreeElement e;
  e.add(w, c);
  return e;
}

void FreeElement::add(const Word &w, const RatQ &c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator+(const FreeElement &o) const {
  FreeElement r = *this;
  for (const auto &[w, c] : o.terms_) r.add(w, c);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement &o) const {
  FreeElement r = *this;
  for (const auto &[w, c] : o.terms_) r.add(w, -c);
  return r;
}

FreeElement FreeElement::operator*(const FreeElement &o) const {
  FreeElement r;
  for (const auto &[a, x] : terms_)
    for (const auto &[b, y] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add(w, x * y);
    }
  return r;
}

FreeElement FreeElement::scaled(const RatQ &c) const {
  FreeElement r;
  if (c.is_zero()) return r;
  for (const auto &[w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

int FreeElement::max_degree() const {
  int d = -1;
  for (const auto &[w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

const Word &FreeElement::leading(const MonomialOrder &ord) const {
  if (terms_.empty()) throw Error("leading word of zero element");
  const Word *best = &terms_.begin()->first;
  for (const auto &[w, c] : terms_)
    if (ord.less(*best, w)) best = &w;
  return *best;
}

std::string FreeElement::render(const Alphabet &a, const std::string &sep) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    s += render_term(c, w.empty() ? "1" : a.render(w, sep), first);
    first = false;
  }
  return s;
}

bool is_homogeneous(const FreeElement &e, const Alphabet &a) {
  if (e.is_zero()) return true;
  const Word &w0 = e.terms().begin()->first;
  auto wt0 = a.weight_of(w0);
  for (const auto &[w, c] : e.terms())
    if (w.size() != w0.size() || a.weight_of(w) != wt0) return false;
  return true;
}

// ---------------------------------------------------------------- TruncatedGB

bool TruncatedGB::find_factor(const Word &w, std::size_t &rule, std::size_t &pos) const {
  if (lead_index_.empty()) return false;
  Word sub;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (auto len : lead_lengths_) {
      if (p + len > w.size()) break;
      sub.assign(w.begin() + static_cast<long>(p), w.begin() + static_cast<long>(p + len));
      auto it = lead_index_.find(sub);
      if (it != lead_index_.end()) {
        rule = it->second;
        pos = p;
        return true;
      }
    }
  }
  return false;
}

const FreeElement &TruncatedGB::nf_word(const Word &w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  std::size_t r, p;
  FreeElement out;
  if (!find_factor(w, r, p)) {
    out.add(w, RatQ(1));
  } else {
    const RewriteRule &rule = rules_[r];
    Word pre(w.begin(), w.begin() + static_cast<long>(p));
    Word post(w.begin() + static_cast<long>(p + rule.lead.size()), w.end());
    for (const auto &[t, c] : rule.tail.terms()) {
      Word x = pre;
      x.insert(x.end(), t.begin(), t.end());
      x.insert(x.end(), post.begin(), post.end());
      const FreeElement &sub = nf_word(x);
      for (const auto &[y, d] : sub.terms()) out.add(y, c * d);
    }
  }
  return cache_.emplace(w, std::move(out)).first->second;
}

FreeElement TruncatedGB::nf_unchecked(const FreeElement &e) const {
  FreeElement out;
  for (const auto &[w, c] : e.terms()) {
    const FreeElement &n = nf_word(w);
    for (const auto &[y, d] : n.terms()) out.add(y, c * d);
  }
  return out;
}

void TruncatedGB::add_rule(RewriteRule r) {
  lead_index_.emplace(r.lead, rules_.size());
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), r.lead.size()) == lead_lengths_.end()) {
    lead_lengths_.push_back(r.lead.size());
    std::sort(lead_lengths_.begin(), lead_lengths_.end());
  }
  rules_.push_back(std::move(r));
}

void TruncatedGB::drop_cache_from(std::size_t len) const {
  for (auto it = cache_.begin(); it != cache_.end();) {
    if (it->first.size() >= len) it = cache_.erase(it);
    else ++it;
  }
}

FreeElement nf_reduce(const FreeElement &e, const TruncatedGB &gb) {
  if (e.max_degree() > gb.valid_degree())
    throw Error("nf_reduce: degree " + std::to_string(e.max_degree()) +
                " exceeds valid degree " + std::to_string(gb.valid_degree()));
  return gb.nf_unchecked(e);
}

FreeElement nf_reduce_random(const FreeElement &e, const TruncatedGB &gb, std::mt19937_64 &rng) {
  if (e.max_degree() > gb.valid_degree())
    throw Error("nf_reduce: degree exceeds valid degree");
  FreeElement work = e, out;
  while (!work.is_zero()) {
    std::uniform_int_distribution<std::size_t> pick(0, work.terms().size() - 1);
    auto it = work.terms().begin();
    std::advance(it, static_cast<long>(pick(rng)));
    Word w = it->first;
    RatQ c = it->second;
    work.add(w, -c);
    std::vector<std::pair<std::size_t, std::size_t>> hits;
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t r = 0; r < gb.rules().size(); ++r) {
        const Word &l = gb.rules()[r].lead;
        if (p + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(p)))
          hits.emplace_back(r, p);
      }
    if (hits.empty()) {
      out.add(w, c);
      continue;
    }
    std::uniform_int_distribution<std::size_t> ph(0, hits.size() - 1);
    auto [r, p] = hits[ph(rng)];
    const RewriteRule &rule = gb.rules()[r];
    for (const auto &[t, d] : rule.tail.terms()) {
      Word x(w.begin(), w.begin() + static_cast<long>(p));
      x.insert(x.end(), t.begin(), t.end());
      x.insert(x.end(), w.begin() + static_cast<long>(p + rule.lead.size()), w.end());
      work.add(x, c * d);
    }
  }
  return out;
}

// ---------------------------------------------------------------- completion

Completer::Completer(Alphabet alphabet, MonomialOrder order, std::vector<FreeElement> relations,
                     CompletionLimits limits)
    : relations_(std::move(relations)),
      gb_(std::move(alphabet), std::move(order)),
      limits_(limits) {
  for (const auto &r : relations_)
    if (!is_homogeneous(r, gb_.alphabet()))
      throw Error("complete_truncated: inhomogeneous relation " + r.render(gb_.alphabet()));
}

void Completer::extend_to(int dmax) {
  for (int d = gb_.valid_degree_ + 1; d <= dmax; ++d) {
    run_degree(d);
    gb_.valid_degree_ = d;
  }
}

void Completer::run_degree(int d) {
  const auto &rules = gb_.rules_;
  std::vector<FreeElement> cands;
  for (const auto &r : relations_)
    if (!r.is_zero() && r.max_degree() == d) cands.push_back(r);
  for (const auto &a : rules) {
    for (const auto &b : rules) {
      int la = static_cast<int>(a.lead.size()), lb = static_cast<int>(b.lead.size());
      int k = la + lb - d;
      if (k < 1 || k >= la || k >= lb) continue;
      if (!std::equal(a.lead.end() - k, a.lead.end(), b.lead.begin())) continue;
      Word x(a.lead.begin(), a.lead.end() - k);
      Word y(b.lead.begin() + k, b.lead.end());
      FreeElement s = a.tail * FreeElement::word(y) - FreeElement::word(x) * b.tail;
      cands.push_back(std::move(s));
    }
  }
  // Reduce candidates and group by weight.
  std::map<std::vector<int>, std::vector<FreeElement>> groups;
  for (const auto &c : cands) {
    FreeElement r = gb_.nf_unchecked(c);
    if (r.is_zero()) continue;
    groups[gb_.alphabet().weight_of(r.terms().begin()->first)].push_back(std::move(r));
  }
  std::vector<RewriteRule> fresh;
  const MonomialOrder &ord = gb_.order();
  for (auto &[wt, elems] : groups) {
    std::set<Word> words;
    for (const auto &e : elems)
      for (const auto &[w, c] : e.terms()) words.insert(w);
    if (words.size() > limits_.max_group_words)
      throw ResourceLimit("completion: weight group too large at degree " + std::to_string(d));
    std::vector<Word> cols(words.begin(), words.end());
    std::sort(cols.begin(), cols.end(), [&](const Word &a, const Word &b) { return ord.less(b, a); });
    std::map<Word, int> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = static_cast<int>(i);
    Echelon ech;
    for (const auto &e : elems) {
      std::map<int, RatQ> m;
      for (const auto &[w, c] : e.terms()) m[idx[w]] = c;
      ech.insert(sparse_from_map(m));
    }
    for (const auto &row : ech.rref()) {
      RewriteRule rule;
      rule.lead = cols[static_cast<std::size_t>(row.front().first)];
      for (std::size_t i = 1; i < row.size(); ++i)
        rule.tail.add(cols[static_cast<std::size_t>(row[i].first)], -row[i].second);
      fresh.push_back(std::move(rule));
    }
  }
  if (fresh.empty()) return;
  // Larger leading words first among rules of equal degree.
  std::sort(fresh.begin(), fresh.end(),
            [&](const RewriteRule &a, const RewriteRule &b) { return ord.less(b.lead, a.lead); });
  if (gb_.rules_.size() + fresh.size() > limits_.max_rules)
    throw ResourceLimit("completion: rule limit exceeded at degree " + std::to_string(d));
  for (auto &r : fresh) gb_.add_rule(std::move(r));
  gb_.drop_cache_from(static_cast<std::size_t>(d));
}

TruncatedGB complete_truncated(const std::vector<FreeElement> &relations, const Alphabet &a,
                               const MonomialOrder &order, int dmax, CompletionLimits limits) {
  Completer c(a, order, relations, limits);
  c.extend_to(dmax);
  return c.gb();
}

// ---------------------------------------------------------------- counting

namespace {

// Aho-Corasick automaton over the leading words.
struct Automaton {
  std::vector<std::vector<int>> next;
  std::vector<bool> dead;

  Automaton(const TruncatedGB &gb, std::size_t m) {
    next.emplace_back(m, -1);
    dead.push_back(false);
    for (const auto &r : gb.rules()) {
      int s = 0;
      for (auto c : r.lead) {
        if (next[static_cast<std::size_t>(s)][c] < 0) {
          next[static_cast<std::size_t>(s)][c] = static_cast<int>(next.size());
          next.emplace_back(m, -1);
          dead.push_back(false);
        }
        s = next[static_cast<std::size_t>(s)][c];
      }
      dead[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> fail(next.size(), 0);
    std::vector<int> queue;
    for (std::size_t c = 0; c < m; ++c) {
      int t = next[0][c];
      if (t < 0) {
        next[0][c] = 0;
      } else {
        fail[static_cast<std::size_t>(t)] = 0;
        queue.push_back(t);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto s = static_cast<std::size_t>(queue[qi]);
      if (dead[static_cast<std::size_t>(fail[s])]) dead[s] = true;
      for (std::size_t c = 0; c < m; ++c) {
        int t = next[s][c];
        int f = next[static_cast<std::size_t>(fail[s])][c];
        if (t < 0) {
          next[s][c] = f;
        } else {
          fail[static_cast<std::size_t>(t)] = f;
          queue.push_back(t);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::uint64_t> count_normal_words(const TruncatedGB &gb, int kmax) {
  if (kmax > gb.valid_degree()) throw Error("count_normal_words: degree exceeds valid degree");
  std::size_t m = gb.alphabet().size();
  Automaton au(gb, m);
  std::vector<std::uint64_t> cur(au.next.size(), 0), out;
  cur[0] = 1;
  for (int k = 0; k <= kmax; ++k) {
    std::uint64_t tot = 0;
    for (auto v : cur) tot += v;
    out.push_back(tot);
    if (k == kmax) break;
    std::vector<std::uint64_t> nxt(cur.size(), 0);
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (!cur[s]) continue;
      for (std::size_t c = 0; c < m; ++c) {
        auto t = static_cast<std::size_t>(au.next[s][c]);
        if (!au.dead[t]) nxt[t] += cur[s];
      }
    }
    cur.swap(nxt);
  }
  return out;
}

std::vector<Word> normal_words(const TruncatedGB &gb, int k) {
  if (k > gb.valid_degree()) throw Error("normal_words: degree exceeds valid degree");
  std::size_t m = gb.alphabet().size();
  Automaton au(gb, m);
  std::vector<std::pair<Word, int>> layer{{Word{}, 0}};
  for (int d = 0; d < k; ++d) {
    std::vector<std::pair<Word, int>> nxt;
    for (const auto &[w, s] : layer)
      for (std::size_t c = 0; c < m; ++c) {
        auto t = au.next[static_cast<std::size_t>(s)][c];
        if (au.dead[static_cast<std::size_t>(t)]) continue;
        Word x = w;
        x.push_back(static_cast<std::uint8_t>(c));
        nxt.emplace_back(std::move(x), t);
      }
    layer.swap(nxt);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (auto &[w, s] : layer) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), [&](const Word &a, const Word &b) { return gb.order().less(a, b); });
  return out;
}

std::vector<std::uint64_t> graded_dims(const std::vector<FreeElement> &relations,
                                       const Alphabet &a, const MonomialOrder &order, int kmax,
                                       CompletionLimits limits) {
  Completer c(a, order, relations, limits);
  c.extend_to(kmax + 1);
  return count_normal_words(c.gb(), kmax);
}

namespace {

struct WordIndex {
  std::map<Word, int> idx;
  SparseVec coords(const FreeElement &x) {
    std::map<int, RatQ> m;
    for (const auto &[w, c] : x.terms()) m[idx.emplace(w, static_cast<int>(idx.size())).first->second] = c;
    return sparse_from_map(m);
  }
};

}  // namespace

bool span_contains(const std::vector<FreeElement> &basis, const FreeElement &x) {
  WordIndex wi;
  Echelon e;
  for (const auto &b : basis) e.insert(wi.coords(b));
  return e.contains(wi.coords(x));
}

bool span_equal(const std::vector<FreeElement> &a, const std::vector<FreeElement> &b) {
  WordIndex wi;
  Echelon ea, eb;
  for (const auto &x : a) ea.insert(wi.coords(x));
  for (const auto &x : b) eb.insert(wi.coords(x));
  if (ea.rank() != eb.rank()) return false;
  for (const auto &x : a)
    if (!eb.contains(wi.coords(x))) return false;
  return true;
}

}  // namespace qflag
