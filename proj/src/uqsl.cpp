#include "qflag/uqsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qflag {

// ---------------------------------------------------------------- containers

bool Monomial::operator<(const Monomial &o) const {
  std::size_t da = E.size() + F.size(), db = o.E.size() + o.F.size();
  if (da != db) return da < db;
  if (E != o.E) return E < o.E;
  if (F != o.F) return F < o.F;
  return K < o.K;
}

bool Monomial::is_one() const {
  return E.empty() && F.empty() && std::all_of(K.begin(), K.end(), [](int k) { return k == 0; });
}

bool Monomial::positive() const {
  return F.empty() && std::all_of(K.begin(), K.end(), [](int k) { return k == 0; });
}

void UqElement::add(const Monomial &m, const RatQ &c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UqElement UqElement::operator+(const UqElement &o) const {
  UqElement r = *this;
  for (const auto &[m, c] : o.terms_) r.add(m, c);
  return r;
}

UqElement UqElement::operator-(const UqElement &o) const {
  UqElement r = *this;
  for (const auto &[m, c] : o.terms_) r.add(m, -c);
  return r;
}

UqElement UqElement::scaled(const RatQ &c) const {
  UqElement r;
  if (c.is_zero()) return r;
  for (const auto &[m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

bool UqElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RatQ UqElement::scalar_value() const {
  for (const auto &[m, c] : terms_)
    if (m.is_one()) return c;
  return RatQ(0);
}

bool UqElement::positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.positive(); });
}

void TensorSquare::add(const Monomial &a, const Monomial &b, const RatQ &c) {
  if (c.is_zero()) return;
  Key k{a, b};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorSquare TensorSquare::operator+(const TensorSquare &o) const {
  TensorSquare r = *this;
  for (const auto &[k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

TensorSquare TensorSquare::operator-(const TensorSquare &o) const {
  TensorSquare r = *this;
  for (const auto &[k, c] : o.terms_) r.add(k.first, k.second, -c);
  return r;
}

TensorSquare TensorSquare::scaled(const RatQ &c) const {
  TensorSquare r;
  for (const auto &[k, x] : terms_) r.add(k.first, k.second, x * c);
  return r;
}

std::string Generator::str() const {
  std::string s(1, kind);
  s += std::to_string(index);
  if (kind == 'K' && exp != 1) s += "^" + std::to_string(exp);
  return s;
}

// ---------------------------------------------------------------- context

struct Uq::Caches {
  std::unique_ptr<Completer> serre;
  std::map<std::pair<Word, Word>, UqElement> ef;
  std::vector<std::map<Monomial, UqElement>> braid;
};

namespace {

std::vector<FreeElement> serre_relations(int n) {
  std::vector<FreeElement> rels;
  auto w = [](std::initializer_list<int> l) {
    Word x;
    for (int c : l) x.push_back(static_cast<std::uint8_t>(c));
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) == 1) {
        FreeElement r = FreeElement::word(w({j, j, i})) + FreeElement::word(w({j, i, j}), -RatQ::qint2()) +
                        FreeElement::word(w({i, j, j}));
        rels.push_back(r);
      } else if (j > i + 1) {
        rels.push_back(FreeElement::word(w({j, i})) - FreeElement::word(w({i, j})));
      }
    }
  return rels;
}

Alphabet serre_alphabet(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> weights;
  for (int i = 0; i < n; ++i) {
    labels.push_back("E" + std::to_string(i + 1));
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    wt[static_cast<std::size_t>(i)] = 1;
    weights.push_back(wt);
  }
  return Alphabet(labels, weights);
}

Word concat(const Word &a, const Word &b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

Uq::Uq(int n) : n_(n), c_(std::make_unique<Caches>()) {
  check_rank(n);
  c_->serre = std::make_unique<Completer>(serre_alphabet(n), MonomialOrder::natural(static_cast<std::size_t>(n)),
                                          serre_relations(n));
  c_->serre->extend_to(3);
  c_->braid.resize(static_cast<std::size_t>(n));
}

Uq::~Uq() = default;

int Uq::cartan(int i, int j) const {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

const TruncatedGB &Uq::serre_gb() const { return c_->serre->gb(); }

const FreeElement &Uq::nf_word(const Word &w) const {
  if (static_cast<int>(w.size()) > c_->serre->gb().valid_degree()) c_->serre->extend_to(static_cast<int>(w.size()));
  return c_->serre->gb().nf_word(w);
}

int Uq::pair_kw(const std::vector<int> &k, const Word &w) const {
  int s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k[i]) continue;
    for (auto j : w) s += k[i] * cartan(static_cast<int>(i), j);
  }
  return s;
}

UqElement Uq::from_monomial(const Monomial &m, const RatQ &c) const {
  UqElement r;
  const FreeElement &fe = nf_word(m.F);
  const FreeElement &ee = nf_word(m.E);
  for (const auto &[f, a] : fe.terms())
    for (const auto &[e, b] : ee.terms()) r.add(Monomial{f, m.K, e}, c * a * b);
  return r;
}

UqElement Uq::nf_E(const Word &w) const {
  return from_monomial(Monomial{{}, std::vector<int>(static_cast<std::size_t>(n_), 0), w});
}

UqElement Uq::one() const { return scalar(RatQ(1)); }

UqElement Uq::scalar(const RatQ &c) const {
  UqElement r;
  r.add(Monomial{{}, std::vector<int>(static_cast<std::size_t>(n_), 0), {}}, c);
  return r;
}

UqElement Uq::E(int i) const {
  if (i < 1 || i > n_) throw Error("E index out of range");
  return nf_E(Word{static_cast<std::uint8_t>(i - 1)});
}

UqElement Uq::F(int i) const {
  if (i < 1 || i > n_) throw Error("F index out of range");
  UqElement r;
  r.add(Monomial{Word{static_cast<std::uint8_t>(i - 1)}, std::vector<int>(static_cast<std::size_t>(n_), 0), {}}, RatQ(1));
  return r;
}

UqElement Uq::K(int i, int exp) const {
  if (i < 1 || i > n_) throw Error("K index out of range");
  std::vector<int> k(static_cast<std::size_t>(n_), 0);
  k[static_cast<std::size_t>(i - 1)] = exp;
  UqElement r;
  r.add(Monomial{{}, k, {}}, RatQ(1));
  return r;
}

UqElement Uq::gen(const Generator &g) const {
  switch (g.kind) {
    case 'E': return E(g.index);
    case 'F': return F(g.index);
    case 'K': return K(g.index, g.exp);
    default: throw Error("unknown generator kind");
  }
}

UqElement Uq::E_word(const std::vector<int> &idx) const {
  Word w;
  for (int i : idx) {
    if (i < 1 || i > n_) throw Error("E index out of range");
    w.push_back(static_cast<std::uint8_t>(i - 1));
  }
  return nf_E(w);
}

// E-word times F-word in triangular normal form.
const UqElement &Uq::order_EF(const Word &e, const Word &f) const {
  auto key = std::make_pair(e, f);
  auto it = c_->ef.find(key);
  if (it != c_->ef.end()) return it->second;
  std::vector<int> zero(static_cast<std::size_t>(n_), 0);
  UqElement out;
  if (e.empty() || f.empty()) {
    out = from_monomial(Monomial{f, zero, e});
    return c_->ef.emplace(key, std::move(out)).first->second;
  }
  std::uint8_t last = e.back();
  Word rest_e(e.begin(), e.end() - 1);
  // last * f = f * last + sum over occurrences of (K - K^-1)/nu
  struct Piece {
    Word f;
    std::vector<int> k;
    Word e;
    RatQ c;
  };
  std::vector<Piece> pieces;
  pieces.push_back({f, zero, Word{last}, RatQ(1)});
  const RatQ inv_nu = RatQ::nu().inverse();
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] != last) continue;
    Word tail(f.begin() + static_cast<long>(t) + 1, f.end());
    Word fw(f.begin(), f.begin() + static_cast<long>(t));
    fw.insert(fw.end(), tail.begin(), tail.end());
    int p = 0;
    for (auto j : tail) p += cartan(last, j);
    std::vector<int> kp = zero, km = zero;
    kp[last] = 1;
    km[last] = -1;
    pieces.push_back({fw, kp, {}, RatQ::q_pow(-p) * inv_nu});
    pieces.push_back({fw, km, {}, -RatQ::q_pow(p) * inv_nu});
  }
  for (const auto &pc : pieces) {
    const UqElement &sub = order_EF(rest_e, pc.f);
    for (const auto &[m, c] : sub.terms()) {
      // m = F'' K'' E''; then K_pc E_pc follows: E'' K_pc = q^{-pair} K_pc E''
      RatQ coef = c * pc.c * RatQ::q_pow(-pair_kw(pc.k, m.E));
      std::vector<int> k = m.K;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += pc.k[i];
      const FreeElement &ee = nf_word(concat(m.E, pc.e));
      for (const auto &[w, d] : ee.terms()) out.add(Monomial{m.F, k, w}, coef * d);
    }
  }
  return c_->ef.emplace(key, std::move(out)).first->second;
}

UqElement Uq::mul_mono(const Monomial &a, const Monomial &b) const {
  UqElement out;
  const UqElement &ef = order_EF(a.E, b.F);
  for (const auto &[m, c] : ef.terms()) {
    RatQ coef = c * RatQ::q_pow(-pair_kw(a.K, m.F) - pair_kw(b.K, m.E));
    std::vector<int> k = a.K;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += m.K[i] + b.K[i];
    const FreeElement &fe = nf_word(concat(a.F, m.F));
    const FreeElement &ee = nf_word(concat(m.E, b.E));
    for (const auto &[fw, x] : fe.terms())
      for (const auto &[ew, y] : ee.terms()) out.add(Monomial{fw, k, ew}, coef * x * y);
  }
  return out;
}

UqElement Uq::mul(const UqElement &a, const UqElement &b) const {
  UqElement out;
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      RatQ c = ca * cb;
      UqElement prod = mul_mono(ma, mb);
      for (const auto &[m, x] : prod.terms()) out.add(m, c * x);
    }
  return out;
}

UqElement Uq::pow(const UqElement &a, int k) const {
  if (k < 0) {
    if (a.terms().size() != 1) throw Error("negative power of a non-monomial");
    const auto &[m, c] = *a.terms().begin();
    if (!m.E.empty() || !m.F.empty()) throw Error("negative power of a non-invertible element");
    Monomial inv{{}, m.K, {}};
    for (auto &x : inv.K) x = -x;
    UqElement r;
    r.add(inv, c.inverse());
    return pow(r, -k);
  }
  UqElement r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

UqElement Uq::qcomm(const UqElement &x, const UqElement &y, const RatQ &c) const {
  return mul(x, y) - mul(y, x).scaled(c);
}

UqElement Uq::build_Eji(int i, int j) const {
  if (i < 1 || j > n_ + 1 || i >= j) throw Error("build_Eji: need 1 <= i < j <= n+1");
  UqElement x = E(i);
  for (int a = i + 1; a < j; ++a) x = qcomm(E(a), x, RatQ::q_pow(-1));
  return x;
}

UqElement Uq::K_range(int i, int j) const {
  std::vector<int> k(static_cast<std::size_t>(n_), 0);
  for (int a = i; a < j; ++a) k[static_cast<std::size_t>(a - 1)] = 1;
  UqElement r;
  r.add(Monomial{{}, k, {}}, RatQ(1));
  return r;
}

// ---------------------------------------------------------------- Hopf structure

TensorSquare Uq::coproduct_mono(const Monomial &m) const {
  TensorSquare out;
  const Word &w = m.F;
  const Word &v = m.E;
  std::size_t nf = w.size(), ne = v.size();
  for (std::size_t T = 0; T < (std::size_t{1} << nf); ++T) {
    int cf = 0;
    Word f1, f2;
    std::vector<int> k1 = m.K;
    for (std::size_t t = 0; t < nf; ++t) {
      bool in = (T >> t) & 1;
      if (in) {
        f1.push_back(w[t]);
      } else {
        f2.push_back(w[t]);
        k1[w[t]] -= 1;
        for (std::size_t s = t + 1; s < nf; ++s)
          if ((T >> s) & 1) cf += cartan(w[t], w[s]);
      }
    }
    for (std::size_t S = 0; S < (std::size_t{1} << ne); ++S) {
      int ce = 0;
      Word e1, e2;
      std::vector<int> k2 = m.K;
      for (std::size_t t = 0; t < ne; ++t) {
        bool in = (S >> t) & 1;
        if (in) {
          e1.push_back(v[t]);
          k2[v[t]] += 1;
          for (std::size_t s = 0; s < t; ++s)
            if (!((S >> s) & 1)) ce -= cartan(v[t], v[s]);
        } else {
          e2.push_back(v[t]);
        }
      }
      RatQ c = RatQ::q_pow(cf + ce);
      UqElement left = from_monomial(Monomial{f1, k1, e1});
      UqElement right = from_monomial(Monomial{f2, k2, e2});
      for (const auto &[a, x] : left.terms())
        for (const auto &[b, y] : right.terms()) out.add(a, b, c * x * y);
    }
  }
  return out;
}

TensorSquare Uq::coproduct(const UqElement &x) const {
  TensorSquare out;
  for (const auto &[m, c] : x.terms()) out = out + coproduct_mono(m).scaled(c);
  return out;
}

TensorSquare Uq::tensor(const UqElement &a, const UqElement &b) const {
  TensorSquare t;
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
  return t;
}

TensorSquare Uq::tensor_mul(const TensorSquare &a, const TensorSquare &b) const {
  TensorSquare out;
  for (const auto &[ka, ca] : a.terms())
    for (const auto &[kb, cb] : b.terms()) {
      UqElement l = mul_mono(ka.first, kb.first);
      UqElement r = mul_mono(ka.second, kb.second);
      RatQ c = ca * cb;
      for (const auto &[x, cx] : l.terms())
        for (const auto &[y, cy] : r.terms()) out.add(x, y, c * cx * cy);
    }
  return out;
}

RatQ Uq::counit(const UqElement &x) const {
  RatQ s;
  for (const auto &[m, c] : x.terms())
    if (m.E.empty() && m.F.empty()) s += c;
  return s;
}

UqElement Uq::apply_counit_left(const TensorSquare &t) const {
  UqElement r;
  for (const auto &[k, c] : t.terms())
    if (k.first.E.empty() && k.first.F.empty()) r.add(k.second, c);
  return r;
}

UqElement Uq::apply_counit_right(const TensorSquare &t) const {
  UqElement r;
  for (const auto &[k, c] : t.terms())
    if (k.second.E.empty() && k.second.F.empty()) r.add(k.first, c);
  return r;
}

// ---------------------------------------------------------------- braid action

const UqElement &Uq::braid_mono(int i, const Monomial &m) const {
  auto &cache = c_->braid[static_cast<std::size_t>(i)];
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto img_E = [&](int j) -> UqElement {
    if (j == i) return mul(F(i + 1), K(i + 1)).scaled(RatQ(-1));
    if (std::abs(j - i) == 1) return qcomm(E(i + 1), E(j + 1), RatQ::q_pow(-1)).scaled(RatQ(-1));
    return E(j + 1);
  };
  auto img_F = [&](int j) -> UqElement {
    if (j == i) return mul(K(i + 1, -1), E(i + 1)).scaled(RatQ(-1));
    if (std::abs(j - i) == 1) return qcomm(F(j + 1), F(i + 1), RatQ::q_pow(1)).scaled(RatQ(-1));
    return F(j + 1);
  };
  UqElement r = one();
  for (auto j : m.F) r = mul(r, img_F(j));
  std::vector<int> k = m.K;
  int s = 0;
  for (std::size_t j = 0; j < k.size(); ++j) s += m.K[j] * cartan(i, static_cast<int>(j));
  k[static_cast<std::size_t>(i)] -= s;
  UqElement kk;
  kk.add(Monomial{{}, k, {}}, RatQ(1));
  r = mul(r, kk);
  for (auto j : m.E) r = mul(r, img_E(j));
  return cache.emplace(m, std::move(r)).first->second;
}

UqElement Uq::braid_T(int i, const UqElement &x) const {
  if (i < 1 || i > n_) throw Error("braid_T index out of range");
  UqElement out;
  for (const auto &[m, c] : x.terms()) out = out + braid_mono(i - 1, m).scaled(c);
  return out;
}

std::vector<int> Uq::weight(const UqElement &x) const {
  if (x.is_zero()) throw Error("weight of zero element");
  std::vector<int> wt;
  std::string bad;
  for (const auto &[m, c] : x.terms()) {
    std::vector<int> w(static_cast<std::size_t>(n_), 0);
    for (auto e : m.E) ++w[e];
    for (auto f : m.F) --w[f];
    if (wt.empty()) wt = w;
    else if (w != wt) bad += " " + render(m);
  }
  if (!bad.empty()) throw Error("weight: inhomogeneous element; offending monomials:" + bad);
  return wt;
}

std::vector<UqElement> Uq::root_vectors(const WWord &w) const {
  if (!word_props(w, n_).is_longest) throw Error("root_vectors: word is not a reduced expression of the longest element");
  std::vector<UqElement> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    UqElement x = E(w[k]);
    for (std::size_t m = k; m-- > 0;) x = braid_T(w[m], x);
    if (!x.positive()) throw Error("root_vectors: F or K factor survived normalization");
    const Word *lead = nullptr;
    RatQ lc;
    for (const auto &[mono, c] : x.terms()) {
      if (!lead || serre_gb().order().less(*lead, mono.E)) {
        lead = &mono.E;
        lc = c;
      }
    }
    out.push_back(x.scaled(lc.inverse()));
  }
  return out;
}

UqElement Uq::adjoint(const Generator &y, const UqElement &x, bool left) const {
  int i = y.index;
  if (y.kind == 'K') {
    UqElement k = K(i, y.exp), ki = K(i, -y.exp);
    return left ? mul(mul(k, x), ki) : mul(mul(ki, x), k);
  }
  if (y.kind == 'E') {
    if (left) return mul(mul(E(i), x), K(i, -1)) - mul(x, mul(E(i), K(i, -1)));
    return mul(x, E(i)) - mul(mul(mul(E(i), K(i, -1)), x), K(i));
  }
  if (y.kind == 'F') {
    if (left) return mul(F(i), x) - mul(mul(mul(K(i, -1), x), K(i)), F(i));
    return mul(mul(K(i), x), F(i)) - mul(mul(K(i), F(i)), x);
  }
  throw Error("adjoint: unknown generator");
}

// ---------------------------------------------------------------- rendering

std::string Uq::render(const Monomial &m) const {
  std::string s;
  for (auto f : m.F) s += "F" + std::to_string(f + 1);
  for (std::size_t i = 0; i < m.K.size(); ++i) {
    if (!m.K[i]) continue;
    s += "K" + std::to_string(i + 1);
    if (m.K[i] != 1) s += "^" + std::to_string(m.K[i]);
  }
  for (auto e : m.E) s += "E" + std::to_string(e + 1);
  return s.empty() ? "1" : s;
}

std::string Uq::render(const UqElement &x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto &[m, c] : x.terms()) {
    s += render_term(c, render(m), first);
    first = false;
  }
  return s;
}

std::string Uq::render(const TensorSquare &t) const {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto &[k, c] : t.terms()) {
    s += render_term(c, render(k.first) + " (x) " + render(k.second), first);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class UqParser {
public:
  UqParser(const Uq &uq, const std::string &s, const std::map<std::string, RatQ> &vars)
      : uq_(uq), s_(s), vars_(vars) {}

  UqElement run() {
    UqElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error("parse error at " + std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }
  UqElement expr() {
    UqElement v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }
  UqElement term() {
    UqElement v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = uq_.mul(v, unary());
      } else if (peek('/')) {
        ++pos_;
        UqElement d = unary();
        if (!d.is_scalar() || d.is_zero()) fail("division by a non-scalar or zero");
        v = v.scaled(d.scalar_value().inverse());
      } else if (starts_atom()) {
        v = uq_.mul(v, power());
      } else {
        return v;
      }
    }
  }
  UqElement unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }
  long integer() {
    skip();
    bool neg = false;
    bool braced = false;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      braced = true;
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(s_.substr(start, pos_ - start));
    if (braced) {
      if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return neg ? -v : v;
  }
  UqElement power() {
    UqElement b = atom();
    if (peek('^')) {
      ++pos_;
      long e = integer();
      if (b.is_scalar()) {
        RatQ c = b.scalar_value();
        if (c.is_zero() && e < 0) fail("zero to a negative power");
        return uq_.scalar(c.pow(e));
      }
      b = uq_.pow(b, static_cast<int>(e));
    }
    return b;
  }
  UqElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      UqElement v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '[') {
      ++pos_;
      UqElement x = expr();
      if (!peek(',')) fail("expected ','");
      ++pos_;
      UqElement y = expr();
      if (!peek(']')) fail("expected ']'");
      ++pos_;
      RatQ coef(1);
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        UqElement sub;
        if (pos_ < s_.size() && s_[pos_] == '{') {
          ++pos_;
          sub = expr();
          if (!peek('}')) fail("expected '}'");
          ++pos_;
        } else {
          sub = atom();
        }
        if (!sub.is_scalar()) fail("commutator subscript must be a scalar");
        coef = sub.scalar_value();
      }
      return uq_.qcomm(x, y, coef);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return uq_.scalar(RatQ(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if ((c == 'E' || c == 'F' || c == 'K') && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        int i = std::stoi(s_.substr(start, pos_ - start));
        if (i < 1 || i > uq_.rank()) fail("generator index out of range");
        if (c == 'E') return uq_.E(i);
        if (c == 'F') return uq_.F(i);
        return uq_.K(i);
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        if (s_[pos_] == '_' ) break;
        ++pos_;
      }
      std::string id = s_.substr(start, pos_ - start);
      if (id == "q") return uq_.scalar(RatQ::q_pow(1));
      if (id == "nu") return uq_.scalar(RatQ::nu());
      auto it = vars_.find(id);
      if (it == vars_.end()) fail("unknown identifier '" + id + "'");
      return uq_.scalar(it->second);
    }
    fail("unexpected character");
  }

  const Uq &uq_;
  std::string s_;
  const std::map<std::string, RatQ> &vars_;
  std::size_t pos_ = 0;
};

}  // namespace

UqElement parse_uq(const Uq &uq, const std::string &s, const std::map<std::string, RatQ> &vars) {
  return UqParser(uq, s, vars).run();
}

}  // namespace qflag
