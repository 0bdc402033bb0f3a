#pragma once

#include "qflag/freealg.hpp"
#include "qflag/ratq.hpp"
#include "qflag/weyl.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

// F-word * K^k * E-word; letters are 0-based simple indices.
struct Monomial {
  Word F;
  std::vector<int> K;
  Word E;
  bool operator<(const Monomial &o) const;
  bool operator==(const Monomial &o) const { return F == o.F && K == o.K && E == o.E; }
  bool is_one() const;
  bool positive() const;  // no F letters, trivial K
};

class UqElement {
public:
  using Terms = std::map<Monomial, RatQ>;
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial &m, const RatQ &c);
  UqElement operator+(const UqElement &o) const;
  UqElement operator-(const UqElement &o) const;
  UqElement operator-() const { return scaled(RatQ(-1)); }
  UqElement scaled(const RatQ &c) const;
  bool operator==(const UqElement &o) const { return terms_ == o.terms_; }
  bool operator!=(const UqElement &o) const { return !(*this == o); }
  bool is_scalar() const;
  RatQ scalar_value() const;  // coefficient of the unit monomial
  bool positive() const;

private:
  Terms terms_;
};

class TensorSquare {
public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, RatQ>;
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial &a, const Monomial &b, const RatQ &c);
  TensorSquare operator+(const TensorSquare &o) const;
  TensorSquare operator-(const TensorSquare &o) const;
  TensorSquare scaled(const RatQ &c) const;
  bool operator==(const TensorSquare &o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorSquare &o) const { return !(*this == o); }

private:
  Terms terms_;
};

struct Generator {
  char kind = 'E';  // 'E', 'F' or 'K'
  int index = 1;    // 1-based
  int exp = 1;      // +1 or -1 for K
  std::string str() const;
};

// Arithmetic context for U_q(sl_{n+1}) with cached Serre normal forms.
class Uq {
public:
  explicit Uq(int n);
  ~Uq();
  Uq(const Uq &) = delete;
  Uq &operator=(const Uq &) = delete;

  int rank() const { return n_; }
  int cartan(int i, int j) const;  // 0-based indices

  UqElement one() const;
  UqElement scalar(const RatQ &c) const;
  UqElement E(int i) const;
  UqElement F(int i) const;
  UqElement K(int i, int exp = 1) const;
  UqElement gen(const Generator &g) const;
  UqElement E_word(const std::vector<int> &idx) const;  // 1-based, normalized

  UqElement mul(const UqElement &a, const UqElement &b) const;
  UqElement pow(const UqElement &a, int k) const;
  UqElement qcomm(const UqElement &x, const UqElement &y, const RatQ &c) const;
  // Right-nested E_ji, 1 <= i < j <= n+1.
  UqElement build_Eji(int i, int j) const;
  // K_{j-1} ... K_i
  UqElement K_range(int i, int j) const;

  TensorSquare coproduct(const UqElement &x) const;
  TensorSquare tensor(const UqElement &a, const UqElement &b) const;
  TensorSquare tensor_mul(const TensorSquare &a, const TensorSquare &b) const;
  RatQ counit(const UqElement &x) const;
  UqElement apply_counit_left(const TensorSquare &t) const;
  UqElement apply_counit_right(const TensorSquare &t) const;

  UqElement braid_T(int i, const UqElement &x) const;  // i is 1-based
  std::vector<int> weight(const UqElement &x) const;
  std::vector<UqElement> root_vectors(const WWord &w) const;
  UqElement adjoint(const Generator &y, const UqElement &x, bool left = false) const;

  std::string render(const Monomial &m) const;
  std::string render(const UqElement &x) const;
  std::string render(const TensorSquare &t) const;

  UqElement from_monomial(const Monomial &m, const RatQ &c = RatQ(1)) const;
  const TruncatedGB &serre_gb() const;
  // Coordinates of a positive-part element in E-word monomials.
  UqElement nf_E(const Word &w) const;

private:
  struct Caches;
  const FreeElement &nf_word(const Word &w) const;
  UqElement mul_mono(const Monomial &a, const Monomial &b) const;
  const UqElement &order_EF(const Word &e, const Word &f) const;
  const UqElement &braid_mono(int i, const Monomial &m) const;
  int pair_kw(const std::vector<int> &k, const Word &w) const;
  TensorSquare coproduct_mono(const Monomial &m) const;

  int n_;
  std::unique_ptr<Caches> c_;
};

// Expression grammar: E1, F2, K3, K3^-1, scalars in q / nu / integers,
// identifiers bound in `vars`, [X, Y]_{c} q-commutators, juxtaposition or '*'.
UqElement parse_uq(const Uq &uq, const std::string &s,
                   const std::map<std::string, RatQ> &vars = {});

}  // namespace qflag
