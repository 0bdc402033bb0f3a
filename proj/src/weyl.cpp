#include "qflag/weyl.hpp"
#include "qflag/ratq.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qflag {

int rank_cap() {
  if (const char *v = std::getenv("QFLAG_RANK_CAP")) {
    int c = std::atoi(v);
    if (c > 0) return c;
  }
  return 6;
}

void check_rank(int n) {
  if (n < 1) throw Error("rank must be positive");
  if (n > rank_cap())
    throw Error("rank " + std::to_string(n) + " exceeds cap " + std::to_string(rank_cap()) +
                " (set QFLAG_RANK_CAP to at least " + std::to_string(n) + ")");
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> r;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) r.push_back({i, j});
  return r;
}

std::vector<int> root_weight(const Root &r, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int k = r.i; k < r.j; ++k) w[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

std::string root_label(const Root &r) { return "a" + std::to_string(r.i) + std::to_string(r.j); }

std::string cotangent_label(const Root &r) {
  if (r.i > 9 || r.j > 9) return "e" + std::to_string(r.j) + "," + std::to_string(r.i);
  return "e" + std::to_string(r.j) + std::to_string(r.i);
}

int root_pairing(const Root &a, const Root &b) {
  auto d = [](int x, int y) { return x == y ? 1 : 0; };
  return d(a.i, b.i) - d(a.i, b.j) - d(a.j, b.i) + d(a.j, b.j);
}

std::pair<Root, Root> prime_pair(const Root &a, const Root &b) {
  if (root_pairing(a, b) != 0) throw Error("prime_pair: roots are not orthogonal");
  Root x = a, y = b;
  if (y.i < x.i) std::swap(x, y);
  // x = alpha_ab, y = alpha_cd with a < c < b < d
  if (!(x.i < y.i && y.i < x.j && x.j < y.j)) throw Error("prime_pair: pattern a<c<b<d not met");
  Root p{x.i, y.j}, s{y.i, x.j};
  return {std::min(p, s), std::max(p, s)};
}

WordProps word_props(const WWord &w, int n) {
  WordProps p;
  p.permutation.resize(static_cast<std::size_t>(n + 1));
  std::iota(p.permutation.begin(), p.permutation.end(), 1);
  for (int s : w) {
    if (s < 1 || s > n) throw Error("word index " + std::to_string(s) + " out of range 1.." + std::to_string(n));
    std::swap(p.permutation[static_cast<std::size_t>(s - 1)], p.permutation[static_cast<std::size_t>(s)]);
  }
  int inv = 0;
  for (std::size_t a = 0; a < p.permutation.size(); ++a)
    for (std::size_t b = a + 1; b < p.permutation.size(); ++b) inv += p.permutation[a] > p.permutation[b];
  p.length = inv;
  p.is_reduced = inv == static_cast<int>(w.size());
  p.is_longest = p.is_reduced && inv == n * (n + 1) / 2;
  return p;
}

WWord nice_word(int n) {
  WWord w;
  for (int lo = 1; lo <= n; ++lo)
    for (int i = n; i >= lo; --i) w.push_back(i);
  return w;
}

WWord opposite_word(const WWord &w, int n) {
  WWord r;
  for (int s : w) r.push_back(n + 1 - s);
  return r;
}

std::vector<Root> beta_sequence(const WWord &w, int n) {
  if (!word_props(w, n).is_longest) throw Error("beta_sequence: word is not a reduced expression of the longest element");
  std::vector<Root> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int a = w[k], b = w[k] + 1;
    for (std::size_t m = k; m-- > 0;) {
      int s = w[m];
      auto sw = [s](int x) { return x == s ? s + 1 : (x == s + 1 ? s : x); };
      a = sw(a);
      b = sw(b);
    }
    if (a > b) throw Error("beta_sequence: negative root encountered");
    out.push_back({a, b});
  }
  return out;
}

std::string word_str(const WWord &w, int n) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (n > 9 && i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

WWord parse_word(const std::string &s, int n) {
  if (s == "nice") return nice_word(n);
  if (s == "nice-op") return opposite_word(nice_word(n), n);
  WWord w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error("malformed word '" + s + "'");
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw Error("malformed word '" + s + "'");
      w.push_back(c - '0');
    }
  }
  for (int x : w)
    if (x < 1 || x > n) throw Error("word index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
  return w;
}

namespace {

void enumerate(std::vector<int> &pos, WWord &cur, int n, std::vector<WWord> &out) {
  // pos[v] = position of value v in the one-line notation of the remaining element.
  bool any = false;
  for (int i = 1; i <= n; ++i) {
    if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) {
      any = true;
      std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]);
      cur.push_back(i);
      enumerate(pos, cur, n, out);
      cur.pop_back();
      std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]);
    }
  }
  if (!any) out.push_back(cur);
}

std::size_t find_root(std::vector<std::size_t> &p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

std::vector<WWord> reduced_words_longest(int n) {
  check_rank(n);
  std::vector<int> pos(static_cast<std::size_t>(n + 2), 0);
  // Longest element: value v sits at position n+2-v.
  for (int v = 1; v <= n + 1; ++v) pos[static_cast<std::size_t>(v)] = n + 2 - v;
  std::vector<WWord> out;
  WWord cur;
  enumerate(pos, cur, n, out);
  return out;
}

std::size_t ClassGraph::class_of(const WWord &w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) throw Error("class_of: not a reduced word of the longest element");
  return word_class_[static_cast<std::size_t>(it - words_.begin())];
}

ClassGraph commutation_classes(int n) {
  ClassGraph g;
  g.n = n;
  g.words_ = reduced_words_longest(n);
  const auto &words = g.words_;
  g.reduced_words = words.size();
  auto index = [&](const WWord &w) {
    return static_cast<std::size_t>(std::lower_bound(words.begin(), words.end(), w) - words.begin());
  };
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const WWord &w = words[k];
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (std::abs(w[t] - w[t + 1]) <= 1) continue;
      WWord x = w;
      std::swap(x[t], x[t + 1]);
      std::size_t a = find_root(parent, k), b = find_root(parent, index(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest member since words are sorted and we link to the minimum.
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::size_t r = find_root(parent, k);
    if (!root_to_class.count(r)) {
      root_to_class[r] = g.nodes.size();
      g.nodes.push_back({words[r], 0});
    }
  }
  g.word_class_.resize(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::size_t c = root_to_class[find_root(parent, k)];
    g.word_class_[k] = c;
    ++g.nodes[c].members;
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const WWord &w = words[k];
    for (std::size_t t = 0; t + 2 < w.size(); ++t) {
      if (w[t] != w[t + 2] || std::abs(w[t] - w[t + 1]) != 1) continue;
      WWord x = w;
      std::swap(x[t], x[t + 1]);
      x[t + 2] = x[t];
      std::size_t a = g.word_class_[k], b = g.word_class_[index(x)];
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  for (const auto &node : g.nodes) g.opposite.push_back(g.class_of(opposite_word(node.rep, n)));
  return g;
}

std::vector<std::size_t> braid_neighbours(const ClassGraph &g, std::size_t c) {
  std::vector<std::size_t> out;
  for (const auto &[a, b] : g.edges) {
    if (a == c) out.push_back(b);
    if (b == c) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const ClassGraph &g, bool involution) {
  std::ostringstream os;
  os << "graph classes_rank" << g.n << " {\n";
  os << "  node [shape=box];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    os << "  c" << k << " [label=\"" << word_str(g.nodes[k].rep, g.n) << "\"];\n";
  for (const auto &[a, b] : g.edges) os << "  c" << a << " -- c" << b << ";\n";
  if (involution) {
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      std::size_t o = g.opposite[k];
      if (o < k) continue;
      os << "  c" << k << " -- c" << o << " [style=dashed, color=blue, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qflag
