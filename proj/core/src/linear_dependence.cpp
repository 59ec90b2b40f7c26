#include "polyaut/linear_dependence.hpp"

namespace polyaut {

namespace {

void divide_by_content(std::map<std::size_t, Integer>& data, std::vector<Integer>& combination) {
  Integer g = 0;
  for (const auto& [col, x] : data) g = gcd(g, x);
  for (const auto& x : combination) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& [col, x] : data) x /= g;
  for (auto& x : combination) x /= g;
}

}  // namespace

std::optional<std::vector<Rational>> LinearDependenceFinder::add(const SparseVector& v) {
  const std::size_t k = seen_++;

  Integer scale = 1;
  for (const auto& [col, x] : v) scale = lcm(scale, Integer(x.get_den()));

  Row w;
  for (const auto& [col, x] : v) {
    if (sgn(x) == 0) continue;
    Rational scaled = x * scale;
    w.data.emplace(col, scaled.get_num());
  }
  w.combination.assign(k + 1, 0);
  w.combination[k] = scale;

  for (const auto& r : rows_) {
    auto hit = w.data.find(r.pivot);
    if (hit == w.data.end()) continue;
    const Integer factor = hit->second;
    const Integer& p = r.data.at(r.pivot);
    for (auto& [col, x] : w.data) x *= p;
    for (const auto& [col, x] : r.data) {
      auto [it, inserted] = w.data.try_emplace(col, 0);
      it->second -= factor * x;
      if (it->second == 0) w.data.erase(it);
    }
    for (auto& x : w.combination) x *= p;
    for (std::size_t i = 0; i < r.combination.size(); ++i) w.combination[i] -= factor * r.combination[i];
    divide_by_content(w.data, w.combination);
  }

  if (w.data.empty()) {
    std::vector<Rational> relation(k + 1);
    const Integer& lead = w.combination[k];
    for (std::size_t i = 0; i <= k; ++i) {
      relation[i] = Rational(w.combination[i], lead);
      relation[i].canonicalize();
    }
    return relation;
  }
  w.pivot = w.data.begin()->first;
  rows_.push_back(std::move(w));
  return std::nullopt;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  LinearDependenceFinder finder;
  std::size_t r = 0;
  for (const auto& v : vectors) {
    // A dependent vector is not stored, so later vectors are still reduced
    // against an independent set.
    if (!finder.add(v)) ++r;
  }
  return r;
}

}  // namespace polyaut
