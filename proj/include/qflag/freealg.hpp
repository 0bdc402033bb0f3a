#pragma once

#include "qflag/ratq.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace qflag {

using Word = std::vector<std::uint8_t>;

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : w) h = (h ^ c) * 1099511628211ull;
    return h ^ w.size();
  }
};

struct ResourceLimit : Error {
  using Error::Error;
};

class Alphabet {
public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> labels, std::vector<std::vector<int>> weights);
  std::size_t size() const { return labels_.size(); }
  const std::string &label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<int> &weight(std::size_t i) const { return weights_[i]; }
  std::vector<int> weight_of(const Word &w) const;
  std::size_t weight_dim() const { return weights_.empty() ? 0 : weights_[0].size(); }
  std::string render(const Word &w, const std::string &sep = "") const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> weights_;
};

// Degree-lexicographic order; rank[letter] is the precedence (larger = bigger).
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  static MonomialOrder natural(std::size_t m);
  static MonomialOrder reversed(std::size_t m);
  bool less(const Word &a, const Word &b) const;
  const std::vector<int> &rank() const { return rank_; }

private:
  std::vector<int> rank_;
};

class FreeElement {
public:
  using Terms = std::map<Word, RatQ>;
  FreeElement() = default;
  static FreeElement word(Word w, RatQ c = RatQ(1));

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word &w, const RatQ &c);
  FreeElement operator+(const FreeElement &o) const;
  FreeElement operator-(const FreeElement &o) const;
  FreeElement operator*(const FreeElement &o) const;
  FreeElement scaled(const RatQ &c) const;
  bool operator==(const FreeElement &o) const { return terms_ == o.terms_; }
  bool operator!=(const FreeElement &o) const { return !(*this == o); }
  int max_degree() const;
  // Leading word under the order; element must be nonzero.
  const Word &leading(const MonomialOrder &ord) const;
  std::string render(const Alphabet &a, const std::string &sep = "") const;

private:
  Terms terms_;
};

struct RewriteRule {
  Word lead;
  FreeElement tail;
};

class TruncatedGB {
public:
  TruncatedGB() = default;
  TruncatedGB(Alphabet alphabet, MonomialOrder order)
      : alphabet_(std::move(alphabet)), order_(std::move(order)) {}

  const Alphabet &alphabet() const { return alphabet_; }
  const MonomialOrder &order() const { return order_; }
  const std::vector<RewriteRule> &rules() const { return rules_; }
  int valid_degree() const { return valid_degree_; }

  // Position of the first rule leading word occurring as a factor of w.
  bool find_factor(const Word &w, std::size_t &rule, std::size_t &pos) const;
  bool is_normal(const Word &w) const {
    std::size_t r, p;
    return !find_factor(w, r, p);
  }
  // Normal form of a single word (memoized; no degree guard).
  const FreeElement &nf_word(const Word &w) const;
  FreeElement nf_unchecked(const FreeElement &e) const;

private:
  friend class Completer;
  void add_rule(RewriteRule r);
  void drop_cache_from(std::size_t len) const;

  Alphabet alphabet_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> lead_index_;
  std::vector<std::size_t> lead_lengths_;
  int valid_degree_ = 0;
  mutable std::unordered_map<Word, FreeElement, WordHash> cache_;
};

struct CompletionLimits {
  std::size_t max_rules = 200000;
  std::size_t max_group_words = 400000;
};

// Degree-by-degree homogeneous completion that can be resumed to higher degree.
class Completer {
public:
  Completer(Alphabet alphabet, MonomialOrder order, std::vector<FreeElement> relations,
            CompletionLimits limits = {});
  void extend_to(int dmax);
  const TruncatedGB &gb() const { return gb_; }

private:
  void run_degree(int d);
  std::vector<FreeElement> relations_;
  TruncatedGB gb_;
  CompletionLimits limits_;
};

bool is_homogeneous(const FreeElement &e, const Alphabet &a);

FreeElement nf_reduce(const FreeElement &e, const TruncatedGB &gb);
// Reduction applying rules at randomly chosen words and positions (no memo).
FreeElement nf_reduce_random(const FreeElement &e, const TruncatedGB &gb, std::mt19937_64 &rng);

TruncatedGB complete_truncated(const std::vector<FreeElement> &relations, const Alphabet &a,
                               const MonomialOrder &order, int dmax,
                               CompletionLimits limits = {});

// Number of normal words of each degree 0..kmax (gb must be valid to kmax).
std::vector<std::uint64_t> count_normal_words(const TruncatedGB &gb, int kmax);
std::vector<Word> normal_words(const TruncatedGB &gb, int k);

// Linear spans of free-algebra elements.
bool span_contains(const std::vector<FreeElement> &basis, const FreeElement &x);
bool span_equal(const std::vector<FreeElement> &a, const std::vector<FreeElement> &b);

std::vector<std::uint64_t> graded_dims(const std::vector<FreeElement> &relations,
                                       const Alphabet &a, const MonomialOrder &order, int kmax,
                                       CompletionLimits limits = {});

}  // namespace qflag
