#include "qflag/linalg.hpp"

#include <set>

namespace qflag {

SparseVec sparse_from_map(const std::map<int, RatQ> &m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto &[k, x] : m)
    if (!x.is_zero()) v.emplace_back(k, x);
  return v;
}

SparseVec axpy(const SparseVec &a, const RatQ &f, const SparseVec &b) {
  if (f.is_zero()) return a;
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      RatQ s = a[i].second + f * b[j].second;
      if (!s.is_zero()) r.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec scale(const SparseVec &a, const RatQ &f) {
  if (f.is_zero()) return {};
  SparseVec r = a;
  for (auto &e : r) e.second *= f;
  return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = rows_.find(v[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    RatQ f = -v[i].second;
    v = axpy(v, f, it->second);
  }
  return v;
}

bool Echelon::insert(const SparseVec &v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  RatQ f = r.front().second.inverse();
  r = scale(r, f);
  int p = r.front().first;
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::rref() const {
  std::map<int, SparseVec> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec r = it->second;
    std::size_t i = 1;
    while (i < r.size()) {
      auto jt = done.find(r[i].first);
      if (jt == done.end()) {
        ++i;
        continue;
      }
      r = axpy(r, -r[i].second, jt->second);
    }
    done.emplace(it->first, std::move(r));
  }
  std::vector<SparseVec> out;
  out.reserve(done.size());
  for (auto &[p, r] : done) out.push_back(std::move(r));
  return out;
}

std::vector<SparseVec> kernel(const std::vector<SparseVec> &vs) {
  std::map<int, std::pair<SparseVec, SparseVec>> piv;
  std::vector<SparseVec> ker;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    SparseVec v = vs[j];
    SparseVec comb{{static_cast<int>(j), RatQ(1)}};
    std::size_t i = 0;
    while (i < v.size()) {
      auto it = piv.find(v[i].first);
      if (it == piv.end()) {
        ++i;
        continue;
      }
      RatQ f = -v[i].second;
      v = axpy(v, f, it->second.first);
      comb = axpy(comb, f, it->second.second);
    }
    if (v.empty()) {
      ker.push_back(std::move(comb));
    } else {
      RatQ f = v.front().second.inverse();
      int p = v.front().first;
      piv.emplace(p, std::make_pair(scale(v, f), scale(comb, f)));
    }
  }
  return ker;
}

std::vector<SparseVec> annihilator(const std::vector<SparseVec> &cs, int dim) {
  Echelon e;
  for (const auto &c : cs) e.insert(c);
  auto rows = e.rref();
  std::set<int> pivots;
  for (const auto &r : rows) pivots.insert(r.front().first);
  std::vector<SparseVec> out;
  for (int f = 0; f < dim; ++f) {
    if (pivots.count(f)) continue;
    std::map<int, RatQ> x;
    x[f] = RatQ(1);
    for (const auto &r : rows) {
      for (const auto &[c, val] : r)
        if (c == f) x[r.front().first] = -val;
    }
    out.push_back(sparse_from_map(x));
  }
  return out;
}

}  // namespace qflag
