#include "logfw/monoid/affine_monoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "logfw/error.hpp"

namespace logfw::monoid {

namespace {

// Calls fn on every size-r subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IntMat cone_facets(const IntMat& gens, std::size_t k) {
  if (k == 0) return {};
  std::set<IntVec> found;
  for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
    IntMat rows;
    for (auto i : subset) rows.push_back(gens[i]);
    if (!rows.empty() && rational_rank(rows, k) != k - 1) return;
    const IntMat ker = integer_kernel(rows, k);
    if (ker.size() != 1) return;
    IntVec n = primitive(ker[0]);
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      const auto v = dot(n, g);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return;
    if (neg) n = scale(n, -1);
    found.insert(n);
  });
  return {found.begin(), found.end()};
}

AffineMonoid::AffineMonoid(int ambient_rank, std::vector<IntVec> generators, Budgets budgets)
    : d_(ambient_rank), budgets_(budgets) {
  if (ambient_rank < 0) throw ValidationError("ambient rank must be nonnegative");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient_rank)
      throw ValidationError("generator " + to_string(g) + " does not have length " + std::to_string(ambient_rank));
    if (!is_zero(g)) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  const auto d = static_cast<std::size_t>(d_);
  gp_basis_ = lattice_basis(gens_, d);
  for (const auto& g : gens_) gen_coords_.push_back(*lattice_coordinates(gp_basis_, g, d));
  const auto k = static_cast<std::size_t>(gp_rank());
  facets_ = cone_facets(gen_coords_, k);
  facet_sum_.assign(k, 0);
  for (const auto& f : facets_) facet_sum_ = add(facet_sum_, f);
  IntMat unit_coords;
  for (const auto& c : gen_coords_) {
    bool unit = true;
    for (const auto& f : facets_) unit = unit && dot(f, c) == 0;
    is_unit_gen_.push_back(unit);
    if (unit) unit_coords.push_back(c);
  }
  unit_lattice_ = lattice_basis(unit_coords, k);
}

std::optional<IntVec> AffineMonoid::try_gp_coords(const IntVec& v) const {
  if (static_cast<int>(v.size()) != d_) return std::nullopt;
  return lattice_coordinates(gp_basis_, v, static_cast<std::size_t>(d_));
}

IntVec AffineMonoid::gp_coords(const IntVec& v) const {
  auto c = try_gp_coords(v);
  if (!c) throw ValidationError(to_string(v) + " is not in the group completion");
  return *c;
}

IntVec AffineMonoid::from_gp_coords(const IntVec& c) const {
  IntVec out(static_cast<std::size_t>(d_), 0);
  for (std::size_t i = 0; i < c.size(); ++i) out = add(out, scale(gp_basis_[i], c[i]));
  return out;
}

bool AffineMonoid::is_unit(const IntVec& v) const {
  const auto c = try_gp_coords(v);
  if (!c) return false;
  if (unit_lattice_.empty()) return is_zero(*c);
  return lattice_coordinates(unit_lattice_, *c, c->size()).has_value();
}

bool AffineMonoid::contains(const IntVec& v) const { return witness(v).has_value(); }

std::optional<std::vector<std::int64_t>> AffineMonoid::unit_witness(const IntVec& coords) const {
  const std::size_t m = gens_.size();
  std::vector<std::int64_t> out(m, 0);
  if (is_zero(coords)) return out;
  std::vector<std::size_t> unit_idx;
  IntMat rows;
  for (std::size_t i = 0; i < m; ++i)
    if (is_unit_gen_[i]) {
      unit_idx.push_back(i);
      rows.push_back(gen_coords_[i]);
    }
  if (rows.empty()) return std::nullopt;
  const auto c = lattice_coordinates(rows, coords, coords.size());
  if (!c) return std::nullopt;
  for (std::size_t j = 0; j < unit_idx.size(); ++j) {
    const std::int64_t cj = (*c)[j];
    if (cj >= 0) {
      out[unit_idx[j]] += cj;
      continue;
    }
    // -g_j as a nonnegative combination of unit generators: breadth-first
    // search over sums of unit generators.
    const IntVec target = scale(gen_coords_[unit_idx[j]], -1);
    std::map<IntVec, std::pair<IntVec, std::size_t>> parent;
    std::deque<IntVec> frontier{IntVec(coords.size(), 0)};
    parent[frontier.front()] = {{}, m};
    bool found = false;
    while (!frontier.empty() && !found) {
      const IntVec cur = frontier.front();
      frontier.pop_front();
      for (std::size_t t = 0; t < unit_idx.size() && !found; ++t) {
        IntVec next = add(cur, gen_coords_[unit_idx[t]]);
        if (parent.count(next)) continue;
        parent[next] = {cur, unit_idx[t]};
        if (parent.size() > budgets_.membership_nodes) throw SearchBudgetExceeded("unit inverse search exhausted its budget");
        if (next == target) found = true;
        frontier.push_back(std::move(next));
      }
    }
    if (!found) throw InternalError("unit generator without inverse in Q");
    std::vector<std::int64_t> rep(m, 0);
    for (IntVec cur = target; !is_zero(cur);) {
      const auto& [prev, gen] = parent.at(cur);
      ++rep[gen];
      cur = prev;
    }
    for (std::size_t i = 0; i < m; ++i) out[i] += -cj * rep[i];
  }
  return out;
}

std::optional<std::vector<std::int64_t>> AffineMonoid::witness(const IntVec& v) const {
  const auto coords = try_gp_coords(v);
  if (!coords) return std::nullopt;
  auto in_cone = [&](const IntVec& x) {
    for (const auto& f : facets_)
      if (dot(f, x) < 0) return false;
    return true;
  };
  if (!in_cone(*coords)) return std::nullopt;

  const std::size_t m = gens_.size();
  std::vector<std::int64_t> path(m, 0);
  std::set<IntVec> failed;
  std::size_t nodes = 0;
  std::optional<std::vector<std::int64_t>> result;

  // Each non-unit generator strictly decreases the facet sum, which bounds the depth.
  std::function<bool(const IntVec&)> search = [&](const IntVec& r) -> bool {
    if (dot(facet_sum_, r) == 0) {
      auto u = unit_witness(r);
      if (!u) return false;
      for (std::size_t i = 0; i < m; ++i) (*u)[i] += path[i];
      result = std::move(u);
      return true;
    }
    if (failed.count(r)) return false;
    if (++nodes > budgets_.membership_nodes) throw SearchBudgetExceeded("membership search exhausted its node budget");
    for (std::size_t i = 0; i < m; ++i) {
      if (is_unit_gen_[i]) continue;
      IntVec next = sub(r, gen_coords_[i]);
      if (!in_cone(next)) continue;
      ++path[i];
      if (search(next)) return true;
      --path[i];
    }
    failed.insert(r);
    return false;
  };
  if (search(*coords)) return result;
  return std::nullopt;
}

}  // namespace logfw::monoid
