#include "logfw/monoid/operations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "logfw/error.hpp"

namespace logfw::monoid {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMat minor_matrix(const IntMat& m, std::size_t row, std::size_t col) {
  IntMat out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    IntVec r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

std::int64_t determinant(const IntMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    const __int128 term = static_cast<__int128>(m[0][j]) * determinant(minor_matrix(m, 0, j));
    total += (j % 2 == 0) ? term : -term;
  }
  if (total > INT64_MAX || total < INT64_MIN) throw IntegerOverflow("determinant overflow");
  return static_cast<std::int64_t>(total);
}

// adj(m)[j][i] = (-1)^{i+j} det(minor(i, j)), so m * adj = det * I.
IntMat adjugate(const IntMat& m) {
  const std::size_t n = m.size();
  IntMat adj(n, IntVec(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t c = determinant(minor_matrix(m, i, j));
      adj[j][i] = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool in_cone(const IntMat& facets, const IntVec& x) {
  for (const auto& f : facets)
    if (dot(f, x) < 0) return false;
  return true;
}

// Hilbert basis of a pointed full-dimensional cone in Z^k. Candidates are the
// primitive extreme rays and the lattice points of the half-open parallelepipeds
// of all simplicial subcones spanned by extreme rays; irreducible candidates
// form the Hilbert basis.
IntMat pointed_hilbert_basis(const IntMat& gens, std::size_t k, const Budgets& budgets) {
  const IntMat facets = cone_facets(gens, k);
  std::set<IntVec> rays;
  for (const auto& g : gens) {
    IntMat tight;
    for (const auto& f : facets)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rational_rank(tight, k) + 1 == k) rays.insert(primitive(g));
  }
  const IntMat ray_list(rays.begin(), rays.end());
  std::set<IntVec> candidates(rays.begin(), rays.end());
  std::size_t work = 0;
  for_each_subset(ray_list.size(), k, [&](const std::vector<std::size_t>& subset) {
    IntMat r;
    for (auto i : subset) r.push_back(ray_list[i]);
    const std::int64_t det = determinant(r);
    if (det == 0) return;
    const IntMat adj = adjugate(r);  // x = lambda r  <=>  lambda * det = x adj
    const SmithForm sf = smith_form(r, k);
    const IntMat right_inv = unimodular_inverse(sf.right);
    // coset representatives y right^{-1} with 0 <= y_i < d_i
    std::vector<std::int64_t> y(k, 0);
    for (;;) {
      if (++work > budgets.hilbert_candidates) throw SearchBudgetExceeded("Hilbert basis candidate budget exhausted");
      IntVec x(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        if (y[i] != 0) x = add(x, scale(right_inv[i], y[i]));
      IntVec point = x;
      for (std::size_t i = 0; i < k; ++i) {
        std::int64_t num = 0;
        for (std::size_t j = 0; j < k; ++j) num += x[j] * adj[j][i];
        point = sub(point, scale(r[i], floor_div(num, det)));
      }
      if (!is_zero(point)) candidates.insert(point);
      std::size_t pos = 0;
      while (pos < k && ++y[pos] == sf.diagonal[pos]) y[pos++] = 0;
      if (pos == k) break;
    }
  });
  IntMat basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      const IntVec rest = sub(x, y);
      if (!is_zero(rest) && in_cone(facets, rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

std::vector<std::uint64_t> face_masks(const AffineMonoid& q) {
  const auto& coords = q.generator_coords();
  if (coords.size() > 64) throw Unsupported("more than 64 monoid generators");
  const std::uint64_t all = coords.size() == 64 ? ~0ULL : ((1ULL << coords.size()) - 1);
  std::vector<std::uint64_t> zero_sets;
  for (const auto& f : q.facets()) {
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (dot(f, coords[i]) == 0) z |= 1ULL << i;
    zero_sets.push_back(z);
  }
  std::set<std::uint64_t> faces{all};
  std::deque<std::uint64_t> todo{all};
  while (!todo.empty()) {
    const auto f = todo.front();
    todo.pop_front();
    for (auto z : zero_sets) {
      const auto g = f & z;
      if (faces.insert(g).second) todo.push_back(g);
    }
  }
  return {faces.begin(), faces.end()};
}

}  // namespace

GpLattice gp_lattice(const AffineMonoid& q) { return {q.gp_basis(), q.gp_rank()}; }

Sharpening sharpen(const AffineMonoid& q) {
  const auto k = static_cast<std::size_t>(q.gp_rank());
  LatticeSplit split = split_sublattice(q.unit_lattice(), k);
  MonoidHom pi;
  pi.matrix = split.proj;
  std::vector<IntVec> images;
  for (const auto& c : q.generator_coords()) {
    pi.generator_images.push_back(mat_vec(split.proj, c));
    images.push_back(pi.generator_images.back());
  }
  AffineMonoid sharp(static_cast<int>(split.proj.size()), std::move(images), q.budgets());
  return {std::move(sharp), std::move(pi), std::move(split)};
}

MonoidHom section(const AffineMonoid& q, const Sharpening& sh) {
  const AffineMonoid& qbar = sh.sharp;
  MonoidHom s;
  const auto d = static_cast<std::size_t>(q.ambient_rank());
  s.matrix.assign(d, IntVec(static_cast<std::size_t>(qbar.gp_rank()), 0));
  for (std::size_t i = 0; i < qbar.gp_basis().size(); ++i) {
    const IntVec& b = qbar.gp_basis()[i];
    IntVec lifted(static_cast<std::size_t>(q.gp_rank()), 0);
    for (std::size_t j = 0; j < b.size(); ++j) lifted = add(lifted, scale(sh.split.lifts[j], b[j]));
    const IntVec col = q.from_gp_coords(lifted);
    for (std::size_t r = 0; r < d; ++r) s.matrix[r][i] = col[r];
  }
  for (const auto& g : qbar.generators()) {
    IntVec image = s.apply(qbar, g);
    if (!q.contains(image))
      throw SectionVerificationFailed("section image " + to_string(image) + " of " + to_string(g) + " is not in Q");
    if (sh.projection.apply(q, image) != g)
      throw SectionVerificationFailed("pi(s(" + to_string(g) + ")) differs from " + to_string(g));
    s.generator_images.push_back(std::move(image));
  }
  return s;
}

std::vector<IntVec> hilbert_basis(const AffineMonoid& q) {
  const auto k = static_cast<std::size_t>(q.gp_rank());
  if (k == 0) return {};
  if (q.generators().size() > 12 || k > 5) throw Unsupported("Hilbert basis limited to rank <= 5 and <= 12 generators");
  const IntMat lineality = integer_kernel(q.facets(), k);
  IntMat coords_basis;
  if (lineality.empty()) {
    coords_basis = pointed_hilbert_basis(q.generator_coords(), k, q.budgets());
  } else {
    const LatticeSplit split = split_sublattice(lineality, k);
    IntMat quotient_gens;
    for (const auto& c : q.generator_coords()) {
      IntVec img = mat_vec(split.proj, c);
      if (!is_zero(img)) quotient_gens.push_back(std::move(img));
    }
    if (!split.proj.empty())
      for (const auto& h : pointed_hilbert_basis(quotient_gens, split.proj.size(), q.budgets())) {
        IntVec x(k, 0);
        for (std::size_t j = 0; j < h.size(); ++j) x = add(x, scale(split.lifts[j], h[j]));
        coords_basis.push_back(std::move(x));
      }
    for (const auto& l : lineality) {
      coords_basis.push_back(l);
      coords_basis.push_back(scale(l, -1));
    }
  }
  std::vector<IntVec> out;
  for (const auto& c : coords_basis) out.push_back(q.from_gp_coords(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AffineMonoid saturate(const AffineMonoid& q) { return AffineMonoid(q.ambient_rank(), hilbert_basis(q), q.budgets()); }

bool is_saturated(const AffineMonoid& q) {
  for (const auto& h : hilbert_basis(q))
    if (!q.contains(h)) return false;
  return true;
}

std::vector<MonoidPrime> spec(const AffineMonoid& q) {
  const auto& coords = q.generator_coords();
  const auto k = static_cast<std::size_t>(q.gp_rank());
  std::vector<MonoidPrime> out;
  for (auto mask : face_masks(q)) {
    MonoidPrime p;
    p.face_mask = mask;
    p.functional.assign(k, 0);
    IntMat face_gens;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (mask >> i & 1ULL) face_gens.push_back(coords[i]);
    for (const auto& f : q.facets()) {
      bool contains_face = true;
      for (const auto& g : face_gens) contains_face = contains_face && dot(f, g) == 0;
      if (contains_face) p.functional = add(p.functional, f);
    }
    p.face_rank = static_cast<int>(rational_rank(face_gens, k));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const MonoidPrime& a, const MonoidPrime& b) {
    if (a.face_rank != b.face_rank) return a.face_rank > b.face_rank;
    return a.face_mask > b.face_mask;
  });
  return out;
}

int dim_chain(const AffineMonoid& q) {
  std::vector<std::uint64_t> faces = face_masks(q);
  std::sort(faces.begin(), faces.end(),
            [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<int> longest(faces.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool strictly_inside = faces[j] != faces[i] && (faces[j] & ~faces[i]) == 0;
      if (strictly_inside) longest[i] = std::max(longest[i], longest[j] + 1);
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

int dim_rank(const AffineMonoid& q) { return q.gp_rank() - q.unit_rank(); }

bool spec_matches_sharpening(const AffineMonoid& q, const Sharpening& sh) {
  const auto faces = face_masks(q);
  const auto bar_faces = face_masks(sh.sharp);
  const auto& bar_gens = sh.sharp.generators();
  std::map<IntVec, std::size_t> bar_index;
  for (std::size_t i = 0; i < bar_gens.size(); ++i) bar_index[bar_gens[i]] = i;
  std::vector<std::uint64_t> images;
  for (auto mask : faces) {
    std::uint64_t img = 0;
    for (std::size_t i = 0; i < q.generators().size(); ++i) {
      if (!(mask >> i & 1ULL)) continue;
      const IntVec& v = sh.projection.generator_images[i];
      if (is_zero(v)) continue;
      img |= 1ULL << bar_index.at(v);
    }
    images.push_back(img);
  }
  const std::set<std::uint64_t> image_set(images.begin(), images.end());
  const std::set<std::uint64_t> target(bar_faces.begin(), bar_faces.end());
  if (image_set != target || image_set.size() != faces.size()) return false;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = 0; b < faces.size(); ++b) {
      const bool below = (faces[a] & ~faces[b]) == 0;
      const bool below_bar = (images[a] & ~images[b]) == 0;
      if (below != below_bar) return false;
    }
  return true;
}

}  // namespace logfw::monoid
