#include "qflag/ratq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qflag {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

Poly Poly::constant(const mpz_class &c) {
  Poly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

Poly Poly::monomial(const mpz_class &c, std::size_t deg) {
  Poly p;
  if (c != 0) {
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = c;
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto &x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

Poly Poly::operator+(const Poly &o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly &o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly &o) const {
  if (is_zero() || o.is_zero()) return {};
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &x : r.c_) x = -x;
  return r;
}

Poly Poly::scaled(const mpz_class &s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto &x : r.c_) x *= s;
  return r;
}

Poly Poly::divexact_scalar(const mpz_class &s) const {
  Poly r = *this;
  for (auto &x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    auto drop = static_cast<std::size_t>(-k);
    if (drop > low_order()) throw Error("Poly::shifted: negative power");
    r.c_.assign(c_.begin() + static_cast<long>(drop), c_.end());
  }
  return r;
}

Poly Poly::divexact(const Poly &d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  Poly quot;
  if (!d.divides_into(*this, quot)) throw Error("Poly::divexact: not divisible");
  return quot;
}

bool Poly::divides_into(const Poly &num, Poly &quot) const {
  if (num.is_zero()) {
    quot = Poly();
    return true;
  }
  if (num.degree() < degree()) return false;
  std::vector<mpz_class> rem = num.c_;
  std::vector<mpz_class> q(num.c_.size() - c_.size() + 1, 0);
  const mpz_class &ld = lead();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    mpz_class &top = rem[static_cast<std::size_t>(k) + c_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), ld.get_mpz_t())) return false;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), ld.get_mpz_t());
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * c_[j];
  }
  for (const auto &x : rem)
    if (x != 0) return false;
  quot = Poly(std::move(q));
  return true;
}

mpq_class Poly::eval(const mpq_class &x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
  return r;
}

namespace {

Poly primitive(const Poly &p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.lead() < 0) c = -c;
  return p.divexact_scalar(c);
}

Poly pseudo_rem(const Poly &a, const Poly &b) {
  std::vector<mpz_class> r = a.coeffs();
  const auto &bc = b.coeffs();
  const mpz_class &lb = b.lead();
  int db = b.degree();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    mpz_class top = r[static_cast<std::size_t>(dr)];
    if (top != 0) {
      for (auto &x : r) x *= lb;
      for (int j = 0; j <= db; ++j)
        r[static_cast<std::size_t>(dr - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    }
    r.pop_back();
    --dr;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
      r.pop_back();
      --dr;
    }
  }
  return Poly(std::move(r));
}

}  // namespace

Poly Poly::gcd(const Poly &a, const Poly &b) {
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  Poly x = primitive(a);
  Poly y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return Poly::constant(1);
    Poly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  return x;
}

// ---------------------------------------------------------------- RatQ

RatQ::RatQ(long v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

RatQ::RatQ(const mpz_class &v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

RatQ::RatQ(const mpq_class &v)
    : num_(Poly::constant(v.get_num())), den_(Poly::constant(v.get_den())) {}

RatQ::RatQ(long shift, Poly num, Poly den, bool canonical)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

RatQ RatQ::q_pow(long e) { return RatQ(e, Poly::constant(1), Poly::constant(1), true); }

RatQ RatQ::from_polys(const Poly &num, const Poly &den) {
  if (den.is_zero()) throw Error("RatQ: zero denominator");
  return RatQ(0, num, den, false);
}

RatQ RatQ::nu() { return RatQ(-1, Poly({-1, 0, 1}), Poly::constant(1), true); }

RatQ RatQ::qint2() { return RatQ(-1, Poly({1, 0, 1}), Poly::constant(1), true); }

bool RatQ::is_one() const {
  return shift_ == 0 && num_.degree() == 0 && den_.degree() == 0 && num_.lead() == 1 &&
         den_.lead() == 1;
}

void RatQ::canonicalize() {
  if (den_.is_zero()) throw Error("RatQ: zero denominator");
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Poly::constant(1);
    return;
  }
  auto ln = static_cast<long>(num_.low_order());
  auto ld = static_cast<long>(den_.low_order());
  if (ln) num_ = num_.shifted(-ln);
  if (ld) den_ = den_.shifted(-ld);
  shift_ += ln - ld;
  if (den_.degree() > 0 && num_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divexact_scalar(c);
    den_ = den_.divexact_scalar(c);
  }
}

Poly RatQ::numerator() const { return shift_ > 0 ? num_.shifted(shift_) : num_; }

Poly RatQ::denominator() const { return shift_ < 0 ? den_.shifted(-shift_) : den_; }

RatQ RatQ::operator+(const RatQ &o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long e = std::min(shift_, o.shift_);
  Poly a = num_.shifted(shift_ - e);
  Poly b = o.num_.shifted(o.shift_ - e);
  if (den_ == o.den_) {
    if (den_.degree() == 0 && den_.lead() == 1) {
      Poly s = a + b;
      if (s.is_zero()) return {};
      // Content of a denominator-free value may be arbitrary; only q-factors move.
      auto lo = static_cast<long>(s.low_order());
      return RatQ(e + lo, s.shifted(-lo), Poly::constant(1), true);
    }
    return RatQ(e, a + b, den_, false);
  }
  return RatQ(e, a * o.den_ + b * den_, den_ * o.den_, false);
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator-(const RatQ &o) const { return *this + (-o); }

RatQ RatQ::operator*(const RatQ &o) const {
  if (is_zero() || o.is_zero()) return {};
  bool unit_dens = den_.degree() == 0 && den_.lead() == 1 && o.den_.degree() == 0 &&
                   o.den_.lead() == 1;
  if (unit_dens) return RatQ(shift_ + o.shift_, num_ * o.num_, Poly::constant(1), true);
  return RatQ(shift_ + o.shift_, num_ * o.num_, den_ * o.den_, false);
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw Error("RatQ: division by zero");
  return RatQ(-shift_, den_, num_, false);
}

RatQ RatQ::operator/(const RatQ &o) const { return *this * o.inverse(); }

RatQ RatQ::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RatQ r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

namespace {

int cmp_poly(const Poly &a, const Poly &b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool RatQ::operator<(const RatQ &o) const {
  if (shift_ != o.shift_) return shift_ < o.shift_;
  int c = cmp_poly(num_, o.num_);
  if (c) return c < 0;
  return cmp_poly(den_, o.den_) < 0;
}

mpq_class RatQ::eval(const mpq_class &x) const {
  mpq_class d = den_.eval(x);
  if (x == 0 && shift_ < 0) throw Error("RatQ::eval: pole at q = 0");
  if (d == 0) throw Error("RatQ::eval: pole at q = " + x.get_str());
  mpq_class r = num_.eval(x) / d;
  mpq_class p = 1;
  for (long i = 0; i < std::labs(shift_); ++i) p *= x;
  if (shift_ >= 0) return r * p;
  return r / p;
}

// ---------------------------------------------------------------- rendering

std::string render_laurent(const Poly &p, long shift) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto &c = p.coeffs();
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class &a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    long e = i + shift;
    mpz_class m = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << m.get_str();
      continue;
    }
    if (m != 1) os << m.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string RatQ::str() const {
  if (is_zero()) return "0";
  const Poly p2({-1, 0, 1});
  Poly n = num_, d = den_, t;
  long s = shift_;
  long m = 0;
  while (p2.divides_into(n, t)) {
    n = t;
    ++m;
    ++s;
  }
  while (p2.divides_into(d, t)) {
    d = t;
    --m;
    --s;
  }
  bool unit_den = d.degree() == 0 && d.lead() == 1;
  std::string rest;
  bool single = false;
  if (unit_den) {
    rest = render_laurent(n, s);
    std::size_t nz = 0;
    for (const auto &x : n.coeffs()) nz += x != 0;
    single = nz == 1;
  } else {
    rest = "(" + render_laurent(n, s) + ")/(" + render_laurent(d, 0) + ")";
    single = true;
  }
  if (m == 0) return rest;
  std::string nup = m == 1 ? "nu" : "nu^" + std::to_string(m);
  if (rest == "1") return nup;
  if (rest == "-1") return "-" + nup;
  if (single) return rest + "*" + nup;
  return "(" + rest + ")*" + nup;
}

// ---------------------------------------------------------------- parsing

namespace {

class RatParser {
public:
  explicit RatParser(std::string_view s) : s_(s) {}

  RatQ run() {
    RatQ v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error("parse error at " + std::to_string(pos_) + ": " + msg + " in '" +
                std::string(s_) + "'");
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
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'n' || c == '(';
  }
  RatQ expr() {
    RatQ v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  RatQ term() {
    RatQ v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        RatQ d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= power();
      } else {
        return v;
      }
    }
  }
  RatQ unary() {
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
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    bool braced = false;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      braced = true;
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = !neg;
        ++pos_;
      }
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (braced) {
      if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return neg ? -v : v;
  }
  RatQ power() {
    RatQ b = atom();
    if (peek('^')) {
      ++pos_;
      long e = integer();
      if (b.is_zero() && e < 0) fail("zero to a negative power");
      b = b.pow(e);
    }
    return b;
  }
  RatQ atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatQ v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatQ(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (s_.substr(pos_, 2) == "nu") {
      pos_ += 2;
      return RatQ::nu();
    }
    if (c == 'q') {
      ++pos_;
      return RatQ::q_pow(1);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatQ RatQ::parse(std::string_view s) { return RatParser(s).run(); }

std::string render_term(const RatQ &c, const std::string &body, bool first) {
  std::string cs = c.str();
  // A sum at paren depth zero needs its own parentheses.
  bool compound = false;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
    if (cs[i] == '(') ++depth;
    else if (cs[i] == ')') --depth;
    else if (depth == 0 && cs[i] == ' ' && (cs[i + 1] == '+' || cs[i + 1] == '-')) compound = true;
  }
  bool neg = !compound && cs[0] == '-';
  std::string mag = compound ? "(" + cs + ")" : (neg ? cs.substr(1) : cs);
  std::string s;
  if (!first) s += neg ? " - " : " + ";
  else if (neg) s += "-";
  if (mag == "1") s += body;
  else if (body == "1") s += mag;
  else s += mag + "*" + body;
  return s;
}

}  // namespace qflag
