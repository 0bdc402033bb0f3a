#pragma once

#include "qflag/linalg.hpp"
#include "qflag/uqsl.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

// u_{a1 b1} ... u_{ak bk}; indices are 1-based.
using OqWord = std::vector<std::pair<int, int>>;

class OqElement {
public:
  using Terms = std::map<OqWord, RatQ>;
  OqElement() = default;
  static OqElement word(OqWord w, RatQ c = RatQ(1));
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const OqWord &w, const RatQ &c);
  OqElement operator+(const OqElement &o) const;
  OqElement operator-(const OqElement &o) const;
  OqElement operator*(const OqElement &o) const;  // word concatenation
  OqElement scaled(const RatQ &c) const;
  bool operator==(const OqElement &o) const { return terms_ == o.terms_; }
  // Common word length; throws on mixed lengths or the zero element.
  int length() const;
  std::string str() const;

private:
  Terms terms_;
};

// Sparse vector over the basis of V^{(x)k}; index = sum (a_t - 1) (n+1)^{k-t}.
using TensorVec = std::map<long, RatQ>;

// Tensor powers of the vector representation and the Hopf pairing they induce.
class VectorRep {
public:
  explicit VectorRep(const Uq &uq);
  ~VectorRep();
  VectorRep(const VectorRep &) = delete;
  VectorRep &operator=(const VectorRep &) = delete;

  int rank() const { return n_; }
  const Uq &uq() const { return uq_; }
  // rho_k(X) applied to the basis vector with index tuple b.
  TensorVec act(const UqElement &x, const std::vector<int> &b) const;

  RatQ pair(const UqElement &x, const OqWord &w) const;
  RatQ pair(const UqElement &x, const OqElement &e) const;
  OqElement left_act(const UqElement &x, const OqElement &e) const;
  bool oq_equal(const OqElement &a, const OqElement &b, int k) const;
  // Row-reduced basis of rho_k(U_q), flattened as (row * N + col).
  const std::vector<SparseVec> &image_span(int k) const;

  // Joint kernel of e -> X |> e over span(words), modulo O_q equality.
  std::vector<OqElement> action_kernel(const std::vector<OqWord> &words,
                                       const std::vector<UqElement> &ops) const;

private:
  struct Caches;
  TensorVec act_mono(const Monomial &m, const std::vector<int> &b) const;
  void apply_gen(char kind, int i, int exp, TensorVec &v, int k) const;

  const Uq &uq_;
  int n_;
  std::unique_ptr<Caches> c_;
};

// "u[1,2]u[2,1]" or "1" for the empty word.
OqWord parse_oq_word(const std::string &s, int n);
std::string oq_word_str(const OqWord &w);
// All words of length k.
std::vector<OqWord> all_oq_words(int n, int k);

}  // namespace qflag
