#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

// Positive root alpha_ij = eps_i - eps_j, 1 <= i < j <= n+1.
struct Root {
  int i = 0;
  int j = 0;
  bool operator==(const Root &o) const { return i == o.i && j == o.j; }
  bool operator!=(const Root &o) const { return !(*this == o); }
  bool operator<(const Root &o) const { return i != o.i ? i < o.i : j < o.j; }
};

// Simple-reflection indices, each in 1..n.
using WWord = std::vector<int>;

int rank_cap();  // QFLAG_RANK_CAP, default 6
void check_rank(int n);

std::vector<Root> positive_roots(int n);
// Coordinates in the simple-root basis.
std::vector<int> root_weight(const Root &r, int n);
std::string root_label(const Root &r);  // "a13"
std::string cotangent_label(const Root &r);  // "e31"
int root_pairing(const Root &a, const Root &b);
std::pair<Root, Root> prime_pair(const Root &a, const Root &b);

struct WordProps {
  std::vector<int> permutation;  // one-line notation, values 1..n+1
  int length = 0;
  bool is_reduced = false;
  bool is_longest = false;
};

WordProps word_props(const WWord &w, int n);
WWord nice_word(int n);
WWord opposite_word(const WWord &w, int n);
std::vector<Root> beta_sequence(const WWord &w, int n);

std::string word_str(const WWord &w, int n);
// Digit string (n <= 9), comma-separated list, or the aliases nice / nice-op.
WWord parse_word(const std::string &s, int n);

// Every reduced word of the longest element, in lexicographic order.
std::vector<WWord> reduced_words_longest(int n);

struct ClassNode {
  WWord rep;  // lexicographically smallest member
  std::size_t members = 0;
};

struct ClassGraph {
  int n = 0;
  std::size_t reduced_words = 0;
  std::vector<ClassNode> nodes;  // sorted by representative
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // braid moves, a < b
  std::vector<std::size_t> opposite;  // class of the index-flipped words
  std::size_t class_of(const WWord &w) const;

private:
  friend ClassGraph commutation_classes(int n);
  std::vector<WWord> words_;
  std::vector<std::size_t> word_class_;
};

ClassGraph commutation_classes(int n);
// Classes reachable from a word class by single braid moves.
std::vector<std::size_t> braid_neighbours(const ClassGraph &g, std::size_t c);
std::string to_dot(const ClassGraph &g, bool involution = false);

}  // namespace qflag
