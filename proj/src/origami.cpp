#include "sqtile/origami.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "detail.hpp"

namespace sqtile {

bool is_permutation(std::span<const std::uint32_t> p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Origami::Origami(Perm sigma, Perm tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.size() != tau_.size() || sigma_.empty())
    throw std::invalid_argument("sigma and tau must act on the same nonempty set");
  if (!is_permutation(sigma_) || !is_permutation(tau_))
    throw std::invalid_argument("sigma and tau must be bijections");
}

Origami Origami::relabeled(const Perm& gamma) const {
  if (gamma.size() != n() || !is_permutation(gamma))
    throw std::invalid_argument("relabeling must be a bijection of the squares");
  Perm s(n()), t(n());
  for (std::uint32_t x = 0; x < n(); ++x) {
    s[gamma[x]] = gamma[sigma_[x]];
    t[gamma[x]] = gamma[tau_[x]];
  }
  return Origami(std::move(s), std::move(t));
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

Perm commutator(const Origami& o) {
  const Perm si = inverse(o.sigma()), ti = inverse(o.tau());
  Perm c(o.n());
  for (std::uint32_t x = 0; x < o.n(); ++x) c[x] = o.sigma()[o.tau()[si[ti[x]]]];
  return c;
}

CycleType cycle_type(const Perm& p) {
  CycleType ct;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1) ct.push_back(len);
  }
  std::sort(ct.begin(), ct.end());
  return ct;
}

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::H11: return "H(1,1)";
    case Stratum::H2: return "H(2)";
    case Stratum::Torus: return "torus";
    case Stratum::Other: return "other";
  }
  return "?";
}

Stratum stratum(const Origami& o) {
  const CycleType ct = cycle_type(commutator(o));
  if (ct.empty()) return Stratum::Torus;
  if (ct == CycleType{2, 2}) return Stratum::H11;
  if (ct == CycleType{3}) return Stratum::H2;
  return Stratum::Other;
}

bool is_connected(const Origami& o) {
  std::vector<char> seen(o.n(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (std::uint32_t y : {o.sigma()[x], o.tau()[x]})
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == o.n();
}

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  std::uint32_t classes;
  explicit Dsu(std::uint32_t n) : parent(n), classes(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    --classes;
    return true;
  }
};

}  // namespace

bool is_primitive_group(const Origami& o) {
  if (!is_connected(o)) throw std::invalid_argument("primitivity is only asked of connected surfaces");
  const std::uint32_t n = o.n();
  // The finest invariant equivalence joining 0 and k: its class through 0 is
  // the least block containing both points.
  for (std::uint32_t k = 1; k < n; ++k) {
    Dsu dsu(n);
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending{{0, k}};
    dsu.unite(0, k);
    while (!pending.empty() && dsu.classes > 1) {
      auto [a, b] = pending.front();
      pending.pop_front();
      for (const Perm* g : {&o.sigma(), &o.tau()}) {
        const std::uint32_t ga = (*g)[a], gb = (*g)[b];
        if (dsu.unite(ga, gb)) pending.emplace_back(ga, gb);
      }
    }
    if (dsu.classes > 1) return false;
  }
  return true;
}

CylinderDecomposition cylinder_decomposition(const Origami& o) {
  if (!is_connected(o)) throw std::invalid_argument("cylinder decomposition needs a connected surface");
  const std::uint32_t n = o.n();
  const Perm& s = o.sigma();
  const Perm& t = o.tau();
  const Perm com = commutator(o);
  std::vector<char> singular(n);
  for (std::uint32_t x = 0; x < n; ++x) singular[x] = com[x] != x;

  // Rows are sigma-cycles, each listed from its smallest square.
  std::vector<std::int64_t> row_of(n, -1);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (row_of[x] >= 0) continue;
    std::vector<std::uint32_t> r;
    for (std::uint32_t y = x; row_of[y] < 0; y = s[y]) {
      row_of[y] = std::int64_t(rows.size());
      r.push_back(y);
    }
    rows.push_back(std::move(r));
  }
  const std::size_t R = rows.size();
  // A row continues into the row above when its top edge carries no cone point.
  std::vector<std::int64_t> up(R, -1), down(R, -1);
  for (std::size_t r = 0; r < R; ++r) {
    bool clear = true;
    for (auto x : rows[r]) clear = clear && !singular[t[x]];
    if (clear) {
      up[r] = row_of[t[rows[r][0]]];
      down[up[r]] = std::int64_t(r);
    }
  }

  CylinderDecomposition dec;
  std::vector<char> used(R, 0);
  auto walk = [&](std::size_t start) {
    Cylinder c;
    std::int64_t r = std::int64_t(start);
    std::uint32_t lead = rows[start][0];
    while (r >= 0 && !used[r]) {
      used[r] = 1;
      // Align each row under the previous one through tau.
      std::vector<std::uint32_t> row;
      for (std::uint32_t y = lead, i = 0; i < rows[r].size(); ++i, y = s[y]) row.push_back(y);
      c.rows.push_back(std::move(row));
      lead = t[lead];
      r = up[r];
    }
    c.width = std::uint32_t(c.rows.front().size());
    c.height = std::uint32_t(c.rows.size());
    for (auto x : c.rows.back()) c.top_sc += singular[t[x]] ? 1 : 0;
    for (auto y : c.rows.front()) c.bottom_sc += singular[y] ? 1 : 0;
    dec.cylinders.push_back(std::move(c));
  };
  for (std::size_t r = 0; r < R; ++r)
    if (down[r] < 0) walk(r);
  // Rows closing up on themselves (no cone point at all) form one cylinder.
  for (std::size_t r = 0; r < R; ++r)
    if (!used[r]) walk(r);
  return dec;
}

Diagram classify_diagram(const Origami& o) {
  if (stratum(o) != Stratum::H11) throw std::logic_error("diagram classification needs an H(1,1) surface");
  const auto dec = cylinder_decomposition(o);
  switch (dec.cylinders.size()) {
    case 1: return Diagram::A;
    case 3: return Diagram::D;
    case 2:
      for (const auto& c : dec.cylinders)
        if (c.top_sc == 1 || c.bottom_sc == 1) return Diagram::B;
      return Diagram::C;
    default:
      throw std::logic_error("H(1,1) surface with an impossible cylinder count");
  }
}

namespace {

// One horizontal cylinder of the gluing scheme. Its bottom and top boundary
// circles are lists of saddle-connection ids read left to right; each id
// appears once on some top and once on some bottom.
struct CylSpec {
  i64 width, height, shear;
  std::vector<int> bottom, top;
};

// Squares are numbered cylinder by cylinder, row by row, left to right.
// Inside a cylinder tau climbs one row. From the top row, the square at
// column x leaves through boundary coordinate u = x + shear (mod width),
// which lies on some saddle connection of the top list; it lands on the
// bottom row of the cylinder holding that connection on its bottom list,
// at the same offset along the connection.
Origami build_cylinders(const std::vector<CylSpec>& cyls, const std::vector<i64>& len) {
  std::vector<i64> base;
  i64 n = 0;
  for (const auto& c : cyls) {
    base.push_back(n);
    n += c.width * c.height;
  }
  std::vector<std::pair<std::size_t, i64>> bottom_at(len.size(), {0, -1});
  for (std::size_t ci = 0; ci < cyls.size(); ++ci) {
    i64 off = 0;
    for (int id : cyls[ci].bottom) {
      bottom_at[id] = {ci, off};
      off += len[id];
    }
    if (off != cyls[ci].width) throw std::logic_error("bottom boundary does not match width");
  }
  Perm s(n), t(n);
  for (std::size_t ci = 0; ci < cyls.size(); ++ci) {
    const auto& c = cyls[ci];
    for (i64 r = 0; r < c.height; ++r)
      for (i64 x = 0; x < c.width; ++x) {
        const i64 i = base[ci] + r * c.width + x;
        s[i] = std::uint32_t(base[ci] + r * c.width + (x + 1) % c.width);
        if (r + 1 < c.height) {
          t[i] = std::uint32_t(i + c.width);
          continue;
        }
        const i64 u = ((x + c.shear) % c.width + c.width) % c.width;
        i64 off = 0;
        int id = -1;
        for (int sid : c.top) {
          if (u < off + len[sid]) {
            id = sid;
            break;
          }
          off += len[sid];
        }
        const auto [cj, boff] = bottom_at[id];
        const i64 w2 = cyls[cj].width;
        t[i] = std::uint32_t(base[cj] + (boff + u - off) % w2);
      }
  }
  return Origami(std::move(s), std::move(t));
}

}  // namespace

// One cylinder of height p; bottom reads j,k,l,m and top reads j,m,l,k.
Origami build_from_params(const ParamsA& a) {
  if (!is_valid(a)) throw std::invalid_argument("invalid one-cylinder parameters");
  const i64 w = a.j + a.k + a.l + a.m;
  return build_cylinders({{w, a.p, a.alpha, {0, 1, 2, 3}, {0, 3, 2, 1}}}, {a.j, a.k, a.l, a.m});
}

// Ids 0..3 have lengths k, l, m, m. The long cylinder reads (0,1,3) below
// and (1,0,2) above; the short one is closed by 2 below and 3 above.
Origami build_from_params(const ParamsB& b) {
  if (!is_valid(b)) throw std::invalid_argument("invalid B parameters");
  return build_cylinders({{b.k + b.l + b.m, b.p, b.alpha, {0, 1, 3}, {1, 0, 2}},
                          {b.m, b.q, b.beta, {2}, {3}}},
                         {b.k, b.l, b.m, b.m});
}

// Ids 0..3 have lengths k, l, l, m. Connection 0 joins the first cylinder to
// itself, 3 the second to itself, and 1, 2 cross between them.
Origami build_from_params(const ParamsC& c) {
  if (!is_valid(c)) throw std::invalid_argument("invalid C parameters");
  return build_cylinders({{c.k + c.l, c.p, c.alpha, {0, 1}, {0, 2}},
                          {c.l + c.m, c.q, c.beta, {2, 3}, {1, 3}}},
                         {c.k, c.l, c.l, c.m});
}

// Ids 0..3 have lengths k, l, k, l. The middle cylinder (height q) carries
// 0,1 on top and 2,3 below; the width-k cylinder runs from 0 up to 2 and the
// width-l cylinder from 1 up to 3.
Origami build_from_params(const ParamsD& d) {
  if (!is_valid(d)) throw std::invalid_argument("invalid D parameters");
  return build_cylinders({{d.k + d.l, d.q, d.beta, {2, 3}, {0, 1}},
                          {d.k, d.p, d.alpha, {0}, {2}},
                          {d.l, d.r, d.gamma, {1}, {3}}},
                         {d.k, d.l, d.k, d.l});
}

CanonicalForm canonical_form(const Origami& o) {
  const unsigned n = o.n();
  CanonicalForm best(2 * n), cand(2 * n);
  std::vector<std::uint32_t> label(n), order(n);
  if (!detail::canonical_into(o.sigma().data(), o.tau().data(), n, best.data(), label.data(),
                              order.data(), cand.data()))
    throw std::invalid_argument("canonical form needs a connected surface");
  return best;
}

std::size_t dedup(std::span<const Origami> surfaces) {
  std::set<CanonicalForm> seen;
  for (const auto& o : surfaces) seen.insert(canonical_form(o));
  return seen.size();
}

namespace {

// Incremental Hermite normal form of a sublattice of Z^2.
struct Hnf {
  i128 a = 0, b = 0, c = 0;
  bool has_second = false;

  void add(i128 x, i128 y) {
    if (y == 0) {
      a = gcd128(a, x);
    } else if (!has_second) {
      b = y > 0 ? x : -x;
      c = abs128(y);
      has_second = true;
    } else {
      // g = u*c + v*y; replace (b, c) by u(b, c) + v(x, y) and send the
      // horizontal remainder to a.
      i128 r0 = c, r1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
      while (r1 != 0) {
        const i128 qt = r0 / r1;
        std::swap(r0, r1);
        r1 -= qt * r0;
        std::swap(u0, u1);
        u1 -= qt * u0;
        std::swap(v0, v1);
        v1 -= qt * v0;
      }
      if (r0 < 0) {
        r0 = -r0;
        u0 = -u0;
        v0 = -v0;
      }
      const i128 g = r0;
      const i128 horiz = (y / g) * b - (c / g) * x;
      b = u0 * b + v0 * x;
      c = g;
      a = gcd128(a, horiz);
    }
    if (a != 0 && has_second) b = ((b % a) + a) % a;
  }
};

}  // namespace

Lattice2 absolute_period_lattice(const Origami& o) {
  if (!is_connected(o)) throw std::invalid_argument("period lattice needs a connected surface");
  const std::uint32_t n = o.n();
  // Square centres placed along a spanning tree; every edge then closes a
  // loop whose holonomy is its displacement mismatch.
  std::vector<std::array<i64, 2>> pos(n);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    const std::uint32_t ys[2] = {o.sigma()[x], o.tau()[x]};
    for (int e = 0; e < 2; ++e)
      if (!seen[ys[e]]) {
        seen[ys[e]] = 1;
        pos[ys[e]] = {pos[x][0] + (e == 0), pos[x][1] + (e == 1)};
        stack.push_back(ys[e]);
      }
  }
  Hnf h;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t ys[2] = {o.sigma()[x], o.tau()[x]};
    for (int e = 0; e < 2; ++e) {
      const i64 dx = pos[x][0] + (e == 0) - pos[ys[e]][0];
      const i64 dy = pos[x][1] + (e == 1) - pos[ys[e]][1];
      if (dx != 0 || dy != 0) h.add(dx, dy);
    }
  }
  Lattice2 L;
  if (h.a == 0 || !h.has_second) return L;
  L.a = to_i64(h.a);
  L.b = to_i64(h.b);
  L.c = to_i64(h.c);
  L.degenerate = false;
  return L;
}

}  // namespace sqtile
