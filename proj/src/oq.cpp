#include "qflag/oq.hpp"

#include <cctype>

namespace qflag {

// ---------------------------------------------------------------- OqElement

OqElement OqElement::word(OqWord w, RatQ c) {
  OqElement e;
  e.add(w, c);
  return e;
}

void OqElement::add(const OqWord &w, const RatQ &c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

OqElement OqElement::operator+(const OqElement &o) const {
  OqElement r = *this;
  for (const auto &[w, c] : o.terms_) r.add(w, c);
  return r;
}

OqElement OqElement::operator-(const OqElement &o) const {
  OqElement r = *this;
  for (const auto &[w, c] : o.terms_) r.add(w, -c);
  return r;
}

OqElement OqElement::operator*(const OqElement &o) const {
  OqElement r;
  for (const auto &[a, x] : terms_)
    for (const auto &[b, y] : o.terms_) {
      OqWord w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add(w, x * y);
    }
  return r;
}

OqElement OqElement::scaled(const RatQ &c) const {
  OqElement r;
  for (const auto &[w, x] : terms_) r.add(w, x * c);
  return r;
}

int OqElement::length() const {
  if (terms_.empty()) throw Error("OqElement::length: zero element has no length");
  int k = static_cast<int>(terms_.begin()->first.size());
  for (const auto &[w, c] : terms_)
    if (static_cast<int>(w.size()) != k) throw Error("OqElement: mixed word lengths");
  return k;
}

std::string oq_word_str(const OqWord &w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto &[a, b] : w) s += "u[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return s;
}

std::string OqElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    s += render_term(c, oq_word_str(w), first);
    first = false;
  }
  return s;
}

OqWord parse_oq_word(const std::string &s, int n) {
  OqWord w;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < s.size() && (std::isspace(static_cast<unsigned char>(s[p])) || s[p] == '*')) ++p;
  };
  auto num = [&]() {
    skip();
    std::size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (st == p) throw Error("malformed O_q word '" + s + "'");
    int v = std::stoi(s.substr(st, p - st));
    if (v < 1 || v > n + 1) throw Error("O_q index " + std::to_string(v) + " out of range 1.." + std::to_string(n + 1));
    skip();
    return v;
  };
  skip();
  if (s.substr(p) == "1") return w;
  while (p < s.size()) {
    if (s[p] != 'u' || p + 1 >= s.size() || s[p + 1] != '[') throw Error("malformed O_q word '" + s + "'");
    p += 2;
    int a = num();
    if (p >= s.size() || s[p] != ',') throw Error("malformed O_q word '" + s + "'");
    ++p;
    int b = num();
    if (p >= s.size() || s[p] != ']') throw Error("malformed O_q word '" + s + "'");
    ++p;
    w.push_back({a, b});
    skip();
  }
  return w;
}

std::vector<OqWord> all_oq_words(int n, int k) {
  std::vector<OqWord> out{OqWord{}};
  for (int t = 0; t < k; ++t) {
    std::vector<OqWord> next;
    for (const auto &w : out)
      for (int a = 1; a <= n + 1; ++a)
        for (int b = 1; b <= n + 1; ++b) {
          OqWord x = w;
          x.push_back({a, b});
          next.push_back(x);
        }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- VectorRep

struct VectorRep::Caches {
  std::map<int, std::vector<SparseVec>> spans;
};

namespace {

long encode(const std::vector<int> &c, int base) {
  long x = 0;
  for (int v : c) x = x * base + (v - 1);
  return x;
}

std::vector<int> decode(long x, int base, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int t = k - 1; t >= 0; --t) {
    c[static_cast<std::size_t>(t)] = static_cast<int>(x % base) + 1;
    x /= base;
  }
  return c;
}

// Exponent of q in rho(K_j) on e_m (all 1-based).
int k_weight(int j, int m) { return (m == j + 1 ? 1 : 0) - (m == j ? 1 : 0); }

void add_to(TensorVec &v, long i, const RatQ &c) {
  if (c.is_zero()) return;
  auto it = v.find(i);
  if (it == v.end()) {
    v.emplace(i, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

VectorRep::VectorRep(const Uq &uq) : uq_(uq), n_(uq.rank()), c_(std::make_unique<Caches>()) {}

VectorRep::~VectorRep() = default;

void VectorRep::apply_gen(char kind, int j, int exp, TensorVec &v, int k) const {
  const int base = n_ + 1;
  TensorVec out;
  for (const auto &[idx, coef] : v) {
    std::vector<int> c = decode(idx, base, k);
    if (kind == 'K') {
      int e = 0;
      for (int m : c) e += k_weight(j, m);
      add_to(out, idx, coef * RatQ::q_pow(static_cast<long>(e) * exp));
    } else if (kind == 'E') {
      for (int t = 0; t < k; ++t) {
        if (c[static_cast<std::size_t>(t)] != j) continue;
        int e = 0;
        for (int s = t + 1; s < k; ++s) e += k_weight(j, c[static_cast<std::size_t>(s)]);
        std::vector<int> d = c;
        d[static_cast<std::size_t>(t)] = j + 1;
        add_to(out, encode(d, base), coef * RatQ::q_pow(e));
      }
    } else {
      for (int t = 0; t < k; ++t) {
        if (c[static_cast<std::size_t>(t)] != j + 1) continue;
        int e = 0;
        for (int s = 0; s < t; ++s) e += k_weight(j, c[static_cast<std::size_t>(s)]);
        std::vector<int> d = c;
        d[static_cast<std::size_t>(t)] = j;
        add_to(out, encode(d, base), coef * RatQ::q_pow(-e));
      }
    }
  }
  v = std::move(out);
}

TensorVec VectorRep::act_mono(const Monomial &m, const std::vector<int> &b) const {
  int k = static_cast<int>(b.size());
  TensorVec v;
  v.emplace(encode(b, n_ + 1), RatQ(1));
  for (auto it = m.E.rbegin(); it != m.E.rend() && !v.empty(); ++it) apply_gen('E', *it + 1, 1, v, k);
  for (std::size_t i = 0; i < m.K.size() && !v.empty(); ++i)
    if (m.K[i]) apply_gen('K', static_cast<int>(i) + 1, m.K[i], v, k);
  for (auto it = m.F.rbegin(); it != m.F.rend() && !v.empty(); ++it) apply_gen('F', *it + 1, 1, v, k);
  return v;
}

TensorVec VectorRep::act(const UqElement &x, const std::vector<int> &b) const {
  TensorVec out;
  for (const auto &[m, c] : x.terms())
    for (const auto &[i, y] : act_mono(m, b)) add_to(out, i, c * y);
  return out;
}

RatQ VectorRep::pair(const UqElement &x, const OqWord &w) const {
  std::vector<int> a, b;
  for (const auto &[r, s] : w) {
    if (r < 1 || r > n_ + 1 || s < 1 || s > n_ + 1) throw Error("pair: O_q index out of range");
    a.push_back(r);
    b.push_back(s);
  }
  if (w.empty()) return uq_.counit(x);
  TensorVec v = act(x, b);
  auto it = v.find(encode(a, n_ + 1));
  return it == v.end() ? RatQ(0) : it->second;
}

RatQ VectorRep::pair(const UqElement &x, const OqElement &e) const {
  RatQ s;
  for (const auto &[w, c] : e.terms()) s += c * pair(x, w);
  return s;
}

OqElement VectorRep::left_act(const UqElement &x, const OqElement &e) const {
  if (e.is_zero()) return e;
  int k = e.length();
  OqElement out;
  for (const auto &[w, c] : e.terms()) {
    if (k == 0) {
      out.add(w, c * uq_.counit(x));
      continue;
    }
    std::vector<int> b;
    for (const auto &p : w) b.push_back(p.second);
    for (const auto &[idx, y] : act(x, b)) {
      std::vector<int> cols = decode(idx, n_ + 1, k);
      OqWord nw = w;
      for (int t = 0; t < k; ++t) nw[static_cast<std::size_t>(t)].second = cols[static_cast<std::size_t>(t)];
      out.add(nw, c * y);
    }
  }
  return out;
}

const std::vector<SparseVec> &VectorRep::image_span(int k) const {
  auto it = c_->spans.find(k);
  if (it != c_->spans.end()) return it->second;
  const int base = n_ + 1;
  const long N = ipow(base, k);
  // Matrices as column maps; flattened index row * N + col.
  using Mat = std::map<long, TensorVec>;
  auto flatten = [N](const Mat &m) {
    std::map<int, RatQ> f;
    for (const auto &[col, v] : m)
      for (const auto &[row, c] : v) f[static_cast<int>(row * N + col)] = c;
    return sparse_from_map(f);
  };
  Mat id;
  for (long i = 0; i < N; ++i) id[i][i] = RatQ(1);
  Echelon ech;
  ech.insert(flatten(id));
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto &m : frontier)
      for (int j = 1; j <= n_; ++j)
        for (auto [kind, exp] : {std::pair{'E', 1}, std::pair{'F', 1}, std::pair{'K', 1}, std::pair{'K', -1}}) {
          Mat r;
          for (const auto &[col, v] : m) {
            TensorVec w = v;
            apply_gen(kind, j, exp, w, k);
            if (!w.empty()) r[col] = std::move(w);
          }
          if (r.empty()) continue;
          if (ech.insert(flatten(r))) next.push_back(std::move(r));
        }
    frontier = std::move(next);
  }
  return c_->spans.emplace(k, ech.rref()).first->second;
}

namespace {

SparseVec word_functional(const OqElement &e, int base, int k) {
  long N = ipow(base, k);
  std::map<int, RatQ> f;
  for (const auto &[w, c] : e.terms()) {
    std::vector<int> a, b;
    for (const auto &[r, s] : w) {
      a.push_back(r);
      b.push_back(s);
    }
    RatQ &slot = f[static_cast<int>(encode(a, base) * N + encode(b, base))];
    slot += c;
  }
  return sparse_from_map(f);
}

RatQ dot(const SparseVec &a, const SparseVec &b) {
  RatQ s;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (a[i].first > b[j].first) ++j;
    else {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace

bool VectorRep::oq_equal(const OqElement &a, const OqElement &b, int k) const {
  for (const auto *e : {&a, &b})
    if (!e->is_zero() && e->length() != k) throw Error("oq_equal: element not homogeneous of the given length");
  OqElement d = a - b;
  if (d.is_zero()) return true;
  if (k == 0) return d.terms().begin()->second.is_zero();
  SparseVec f = word_functional(d, n_ + 1, k);
  for (const auto &row : image_span(k))
    if (!dot(f, row).is_zero()) return false;
  return true;
}

std::vector<OqElement> VectorRep::action_kernel(const std::vector<OqWord> &words,
                                                const std::vector<UqElement> &ops) const {
  if (words.empty()) return {};
  const int k = static_cast<int>(words.front().size());
  for (const auto &w : words)
    if (static_cast<int>(w.size()) != k) throw Error("action_kernel: words of mixed length");
  const int dim = static_cast<int>(words.size());
  const int base = n_ + 1;
  std::vector<SparseVec> null_cons, act_cons;
  if (k == 0) {
    // Constants: X |> 1 = eps(X) 1.
    for (const auto &x : ops)
      if (!uq_.counit(x).is_zero()) act_cons.push_back({{0, RatQ(1)}});
    null_cons.push_back({{0, RatQ(1)}});
  } else {
    const long N = ipow(base, k);
    std::vector<std::vector<int>> rows, cols;
    for (const auto &w : words) {
      std::vector<int> a, b;
      for (const auto &[r, s] : w) {
        a.push_back(r);
        b.push_back(s);
      }
      rows.push_back(a);
      cols.push_back(b);
    }
    const auto &span = image_span(k);
    for (const auto &m : span) {
      std::map<long, RatQ> entries;
      for (const auto &[i, c] : m) entries[i] = c;
      auto entry = [&](long r, long c) {
        auto it = entries.find(r * N + c);
        return it == entries.end() ? RatQ(0) : it->second;
      };
      std::map<int, RatQ> nc;
      for (int t = 0; t < dim; ++t) {
        RatQ v = entry(encode(rows[static_cast<std::size_t>(t)], base), encode(cols[static_cast<std::size_t>(t)], base));
        if (!v.is_zero()) nc[t] = v;
      }
      null_cons.push_back(sparse_from_map(nc));
      for (const auto &x : ops) {
        // (M rho(X))_{a,b} = sum_c M_{a,c} rho(X)_{c,b}
        std::map<int, RatQ> ac;
        for (int t = 0; t < dim; ++t) {
          long a = encode(rows[static_cast<std::size_t>(t)], base);
          RatQ s;
          for (const auto &[c, y] : act(x, cols[static_cast<std::size_t>(t)])) s += entry(a, c) * y;
          if (!s.is_zero()) ac[t] = s;
        }
        act_cons.push_back(sparse_from_map(ac));
      }
    }
  }
  std::vector<SparseVec> kern = annihilator(act_cons, dim);
  std::vector<SparseVec> null = annihilator(null_cons, dim);
  Echelon ech;
  for (const auto &v : null) ech.insert(v);
  std::vector<OqElement> out;
  for (const auto &v : kern) {
    if (!ech.insert(v)) continue;
    OqElement e;
    for (const auto &[t, c] : v) e.add(words[static_cast<std::size_t>(t)], c);
    out.push_back(e);
  }
  return out;
}

}  // namespace qflag
