#pragma once

#include "qflag/freealg.hpp"
#include "qflag/oq.hpp"
#include "qflag/uqsl.hpp"
#include "qflag/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qflag {

struct TangentSpace {
  int n = 0;
  std::vector<UqElement> basis;
  std::vector<std::vector<int>> weights;  // simple-root coordinates
  std::vector<std::string> labels;        // cotangent letters, e.g. "e31"
  std::optional<WWord> word;              // set when derived from a reduced word
  std::vector<Root> roots;                // convex order, word-derived only
  std::vector<std::string> exprs;         // source expressions otherwise

  std::size_t dim() const { return basis.size(); }
  Alphabet alphabet() const;
  // Letter of the basis element for a root; throws if absent.
  int letter_of(const Root &r) const;
};

TangentSpace tangent_from_word(const Uq &uq, const WWord &w);
TangentSpace tangent_from_exprs(const Uq &uq, const std::vector<std::string> &exprs,
                                const std::map<std::string, RatQ> &vars = {});

enum class Verdict { two_sided, left_only, right_only, neither };
std::string verdict_str(Verdict v);
Verdict parse_verdict(const std::string &s);

struct CoidealWitness {
  std::string side;     // "right" or "left"
  std::size_t element;  // basis index
  std::string fixed;    // monomial in the untested leg
  std::string offending;  // tested-leg combination outside span(T + 1)
};

struct CoidealReport {
  Verdict verdict = Verdict::neither;
  bool right = false;
  bool left = false;
  std::vector<CoidealWitness> witnesses;
};

CoidealReport coideal_check(const Uq &uq, const TangentSpace &t);

struct RelationSpace {
  std::map<std::vector<int>, std::vector<FreeElement>> by_weight;
  std::vector<FreeElement> all() const;
  std::size_t size() const;
};

// Relations of the maximal prolongation in degree two.
RelationSpace quadratic_relations(const Uq &uq, const TangentSpace &t);
// dim of C_mu for each weight (products landing in span T).
std::map<std::vector<int>, std::size_t> product_kernel_dims(const Uq &uq, const TangentSpace &t);

// Degree-lex order whose letter precedence is the basis order of T.
MonomialOrder cotangent_order(const TangentSpace &t);
int default_kmax(const TangentSpace &t);

struct DimensionTable {
  std::vector<std::uint64_t> dims;  // degrees 0..kmax
  bool classical = false;
};

DimensionTable exterior_dims(const TangentSpace &t, const RelationSpace &r, int kmax,
                             CompletionLimits limits = {});

// Column g holds the coordinates of e_g . u_ab in the cotangent basis.
std::vector<std::vector<RatQ>> cotangent_action(const VectorRep &rep, const TangentSpace &t,
                                                int a, int b);
// Degree-one O_q elements dual to the tangent basis.
std::vector<OqElement> cotangent_representatives(const VectorRep &rep, const TangentSpace &t);

// Leading parts under the monoid filtration refined by the convex order.
RelationSpace gr_leading_relations(const TangentSpace &t, const RelationSpace &r);
// q-commutation relations e_b e_g + q^{(b,g)} e_g e_b and squares, word-derived T only.
std::vector<FreeElement> q_commutation_relations(const TangentSpace &t);
// Five relation families over all index patterns, nice word only.
std::vector<FreeElement> five_family_relations(const TangentSpace &t);

struct FrobeniusReport {
  int top_degree = 0;
  std::uint64_t top_dimension = 0;
  std::vector<bool> pairing_nondegenerate;  // index k: Lambda^k x Lambda^{top-k}
  std::vector<RatQ> nakayama;               // per generator, empty if skipped
  std::vector<int> nakayama_sign;           // +1, -1, or 0 when not a sign
};

FrobeniusReport frobenius_report(const TangentSpace &t, const RelationSpace &r,
                                 CompletionLimits limits = {});

std::vector<std::vector<int>> line_decomposition(const TangentSpace &t, const DimensionTable &d,
                                                 int k);

struct GrassmannReport {
  TangentSpace restricted;
  bool closed = false;
  std::string failure;  // generator and element that leave the span
};

GrassmannReport grassmann_restriction(const Uq &uq, const TangentSpace &t, int r);

// Elements of span(words) killed by every tangent basis element, modulo O_q equality.
std::vector<OqElement> dbar_kernel(const VectorRep &rep, const std::vector<OqWord> &words,
                                   const TangentSpace &t);

// Product-free linear algebra helpers over the monomial basis of U_q.
class MonomialIndex {
public:
  int index(const Monomial &m);
  SparseVec coords(const UqElement &x);

private:
  std::map<Monomial, int> idx_;
};

bool in_span(const std::vector<UqElement> &basis, const UqElement &x);

}  // namespace qflag
