#include "sqtile/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "sqtile/kernels.hpp"
#include "sqtile/origami.hpp"
#include "sqtile/params.hpp"

namespace sqtile {

namespace {

std::string s128(i128 v) { return to_string(v); }

std::string join_ns(const std::vector<i64>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) out += (i ? "," : "") + std::to_string(ns[i]);
  return out.empty() ? "none" : out;
}

struct Range {
  i64 lo, hi;
};

Range resolve(const VerifyOptions& opt, i64 lo, i64 hi, i64 floor, i64 cap) {
  Range r{opt.n_min.value_or(lo), opt.n_max.value_or(hi)};
  if (r.lo < floor || r.hi > cap || r.lo > r.hi)
    throw std::invalid_argument(fmt::format("range must satisfy {} <= n-min <= n-max <= {}", floor, cap));
  return r;
}

Counts formula_counts(const FormulaTables& t, i64 n, const VerifyOptions& opt) {
  Counts c = t.counts(u64(n), opt.coefficient);
  if (opt.inject_fault) c.b += 1;
  return c;
}

i128 pick(const Counts& c, Diagram d) {
  switch (d) {
    case Diagram::A: return c.a;
    case Diagram::B: return c.b;
    case Diagram::C: return c.c;
    case Diagram::D: return c.d;
  }
  return -1;
}

// ---------------------------------------------------------------- arith

SuiteResult suite_arith(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "arith-identities";
  const Range rg = resolve(opt, 1, 2000, 1, i64(kAdditiveCap));
  const std::size_t N = std::size_t(rg.hi);
  const SpfSieve sv(static_cast<std::uint32_t>(N));
  const ArithTable one = tabulate(Fn::One, 0, sv), eps = tabulate(Fn::Eps, 0, sv);
  const ArithTable mu = tabulate(Fn::Mobius, 0, sv), phi = tabulate(Fn::Phi, 0, sv);
  ArithTable id[5], sigma[5], jk[3];
  for (unsigned k = 1; k <= 4; ++k) {
    id[k] = tabulate(Fn::IdK, k, sv);
    sigma[k] = tabulate(Fn::SigmaK, k, sv);
  }
  for (unsigned k = 1; k <= 2; ++k) jk[k] = tabulate(Fn::JordanK, k, sv);
  const auto lo = std::size_t(rg.lo);

  const ArithTable mu_one = dirichlet_convolve(mu, one);
  for (std::size_t m = lo; m <= N; ++m)
    res.check(mu_one[m] == eps[m], [&] { return fmt::format("(mu*1)({}) != eps", m); });
  for (unsigned k = 1; k <= 4; ++k) {
    const ArithTable t = dirichlet_convolve(mu, sigma[k]);
    for (std::size_t m = lo; m <= N; ++m)
      res.check(t[m] == id[k][m], [&] { return fmt::format("(mu*sigma_{})({}) != m^{}", k, m, k); });
  }
  for (unsigned k = 1; k <= 2; ++k) {
    const ArithTable t = dirichlet_convolve(mu, id[k]);
    for (std::size_t m = lo; m <= N; ++m) {
      res.check(t[m] == jk[k][m], [&] { return fmt::format("(mu*Id_{})({}) != J_{}", k, m, k); });
      res.check(jordan(k, m) == jk[k][m], [&] { return fmt::format("J_{}({}) trial division", k, m); });
    }
  }
  const ArithTable phi_idmu = dirichlet_convolve(phi, pointwise_mul(id[1], mu));
  for (std::size_t m = lo; m <= N; ++m) {
    res.check(phi_idmu[m] == mu[m], [&] { return fmt::format("(phi * Id_1.mu)({}) != mu", m); });
    res.check(mobius(m) == mu[m], [&] { return fmt::format("mu({}) trial division", m); });
  }

  // sum_{d|m} mu(d) f(d) = prod_{p|m} (1 - f(p)) for f = sigma_1, and for
  // f = 1/Id_1 after multiplying through by m.
  for (std::size_t m = lo; m <= std::min<std::size_t>(N, 1000); ++m) {
    i128 lhs_s = 0, lhs_r = 0;
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) {
        lhs_s += mu[d] * sigma[1][d];
        lhs_r += mu[d] * i128(m / d);
      }
    i128 rhs_s = 1, rhs_r = i128(m);
    for (auto [p, e] : sv.factorize(std::uint32_t(m))) {
      rhs_s *= 1 - sigma[1][p];
      rhs_r = rhs_r / p * (p - 1);
    }
    res.check(lhs_s == rhs_s, [&] { return fmt::format("Mobius product for sigma_1 at {}", m); });
    res.check(lhs_r == rhs_r, [&] { return fmt::format("Mobius product for 1/Id_1 at {}", m); });
  }

  const ArithTable s11 = additive_convolve(sigma[1], sigma[1]);
  for (std::size_t m = lo; m <= N; ++m) {
    const i128 rhs = 5 * sigma[3][m] + sigma[1][m] - 6 * i128(m) * sigma[1][m];
    res.check(12 * s11[m] == rhs, [&] { return fmt::format("12 (sigma_1 Delta sigma_1)({}) identity", m); });
  }
  for (std::size_t m = std::max<std::size_t>(lo, 2); m <= N; ++m) {
    const i128 sq = i128(m) * m;
    res.check(608 * sq < 1000 * jk[2][m] && jk[2][m] <= sq,
              [&] { return fmt::format("J_2 bounds at {}", m); });
  }
  const ArithTable j2_via_mu = dirichlet_convolve(mu, id[2]);
  for (std::size_t m = std::max<std::size_t>(lo, 4); m <= N; ++m)
    res.check(count_E_from(m, j2_via_mu[m]) == count_E(m), [&] { return fmt::format("E({}) two ways", m); });

  // Random tables: Dirichlet convolution is commutative and associative, and
  // every additive kernel agrees with the checked reference.
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> val(-50, 50);
  const std::size_t R = std::min<std::size_t>(N, 600);
  for (int trial = 0; trial < 5; ++trial) {
    ArithTable f(R), g(R), h(R);
    for (std::size_t m = 1; m <= R; ++m) {
      f[m] = val(rng);
      g[m] = val(rng);
      h[m] = val(rng);
    }
    res.check(dirichlet_convolve(f, g) == dirichlet_convolve(g, f), [&] { return std::string("f*g != g*f"); });
    res.check(dirichlet_convolve(dirichlet_convolve(f, g), h) == dirichlet_convolve(f, dirichlet_convolve(g, h)),
              [&] { return std::string("(f*g)*h != f*(g*h)"); });
  }
  ArithTable ref(N), fast(N);
  kernels::additive_reference(sigma[1].data(), sigma[2].data(), ref.data(), N);
  kernels::additive(sigma[1].data(), sigma[2].data(), fast.data(), N);
  res.check(ref == fast, [&] { return std::string("dispatched additive kernel differs from reference"); });
  res.notes.push_back(fmt::format("n = {}..{}; additive kernel isa = {}", rg.lo, rg.hi,
                                  kernels::isa_name(kernels::detected_isa())));
  return res;
}

// ---------------------------------------------------------------- intermediate sums

constexpr Intermediate kAllIntermediates[] = {Intermediate::X, Intermediate::Y, Intermediate::U,
                                              Intermediate::V, Intermediate::W};

SuiteResult suite_intermediate(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "intermediate-sums";
  const Range rg = resolve(opt, 4, 300, 1, 2000);
  const FormulaTables t(std::size_t(std::max<i64>(rg.hi, 3)));
  const ConvCoefficient other = opt.coefficient == ConvCoefficient::MuSigma2
                                    ? ConvCoefficient::Sigma2Inverse
                                    : ConvCoefficient::MuSigma2;
  std::vector<i64> other_bad;
  for (Intermediate w : kAllIntermediates) {
    std::vector<i64> small_bad;
    for (i64 n = 1; n <= std::min<i64>(3, rg.hi); ++n) {
      const Rational c = intermediate_closed(w, u64(n), t, opt.coefficient);
      if (!(c.den == 1 && c.num == intermediate_direct(w, n))) small_bad.push_back(n);
    }
    if (!small_bad.empty())
      res.notes.push_back(fmt::format("{}: closed form differs from the sum below n = 4 at n = {}",
                                      intermediate_name(w), join_ns(small_bad)));
    for (i64 n = rg.lo; n <= rg.hi; ++n) {
      const i128 direct = intermediate_direct(w, n);
      const Rational c = intermediate_closed(w, u64(n), t, opt.coefficient);
      res.check(c.den == 1 && c.num == direct, [&] {
        return fmt::format("{}({}): direct {} vs closed {}/{}", intermediate_name(w), n, s128(direct),
                           s128(c.num), s128(c.den));
      });
      if (w == Intermediate::X) {
        const Rational o = intermediate_closed(w, u64(n), t, other);
        if (!(o.den == 1 && o.num == direct)) other_bad.push_back(n);
      }
    }
  }
  res.notes.push_back(fmt::format("X with the {} coefficient would differ at n = {}",
                                  coefficient_name(other), join_ns(other_bad)));
  return res;
}

// ---------------------------------------------------------------- shear lemma

SuiteResult suite_shear(const VerifyOptions&) {
  SuiteResult res;
  res.suite = "shear-lemma";
  for (i64 p = 1; p <= 5; ++p)
    for (i64 q = 1; q <= 5; ++q) {
      if (gcd64(p, q) != 1) continue;
      for (i64 k = 1; k <= 12; ++k)
        for (i64 l = 1; l <= 12; ++l) {
          const i128 f = shear_count_formula(p, q, k, l);
          for (i64 b1 = -3; b1 <= 3; ++b1)
            for (i64 b2 = -3; b2 <= 3; ++b2) {
              const i128 b = shear_count_brute(p, q, k, l, b1, b2);
              res.check(b == f, [&] {
                return fmt::format("p={} q={} k={} l={} offsets ({},{}): brute {} formula {}", p, q, k, l, b1,
                                   b2, s128(b), s128(f));
              });
            }
        }
    }
  // The two-cylinder B count uses gcd(k+l, m) for gcd(k+l+m, m), and the
  // (k+l+m) x m shear box with the extra offset (p+q)l.
  for (i64 s = 2; s <= 40; ++s)
    for (i64 m = 1; m <= 40; ++m)
      res.check(gcd64(s + m, m) == gcd64(s, m), [&] { return fmt::format("gcd identity s={} m={}", s, m); });
  for (i64 p = 1; p <= 3; ++p)
    for (i64 q = 1; q <= 3; ++q) {
      if (gcd64(p, q) != 1) continue;
      for (i64 s = 2; s <= 8; ++s)
        for (i64 m = 1; m <= 6; ++m)
          for (i64 l = 1; l < s; ++l) {
            i128 box = 0;
            for (i64 a = 0; a < s + m; ++a)
              for (i64 b = 0; b < m; ++b)
                if (gcd64(s, m, p * b - q * a + (p + q) * l) == 1) ++box;
            const i128 expect = shear_count_formula(1, 1, s + m, m);
            res.check(box == expect, [&] { return fmt::format("B shear box p={} q={} s={} m={} l={}", p, q, s, m, l); });
          }
    }
  return res;
}

// ---------------------------------------------------------------- quadruple lemma

SuiteResult suite_quadruple(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "quadruple-lemma";
  const Range rg = resolve(opt, 4, 60, 4, 120);
  for (i64 n = rg.lo; n <= rg.hi; ++n)
    for (i64 d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const i128 f = quadruple_count(n, d), b = quadruple_count_brute(n, d);
      res.check(f == b, [&] { return fmt::format("n={} d={}: formula {} brute {}", n, d, s128(f), s128(b)); });
    }
  return res;
}

// ---------------------------------------------------------------- parameter oracle

SuiteResult suite_param_oracle(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "param-oracle";
  const Range rg = resolve(opt, 4, kAnalyticCap, 4, kAnalyticCap);
  const FormulaTables t(std::size_t(std::max<i64>(rg.hi, 200)));
  std::map<char, std::vector<i64>> bad;
  for (i64 n = rg.lo; n <= rg.hi; ++n) {
    const Counts f = formula_counts(t, n, opt);
    for (Diagram d : kDiagrams) {
      const i128 want = pick(f, d);
      const i128 an = count_by_enumeration(d, n, ShearMode::Analytic);
      res.check(an == want, [&] {
        return fmt::format("{}({}) analytic {} formula {}", diagram_name(d), n, s128(an), s128(want));
      });
      if (an != want) bad[diagram_name(d)[0]].push_back(n);
      if (n <= kExplicitCap) {
        const i128 ex = count_by_enumeration(d, n, ShearMode::Explicit);
        res.check(ex == want, [&] {
          return fmt::format("{}({}) explicit {} formula {}", diagram_name(d), n, s128(ex), s128(want));
        });
        res.check(ex == an, [&] { return fmt::format("{}({}) explicit vs analytic", diagram_name(d), n); });
      }
    }
  }
  for (auto& [d, ns] : bad) res.notes.push_back(fmt::format("{} mismatches at n = {}", d, join_ns(ns)));

  for (i64 n = std::max<i64>(rg.lo, 4); n <= std::min<i64>(rg.hi, 200); ++n) {
    const i128 om = count_omega(n), a = t.counts(u64(n), opt.coefficient).a;
    res.check(om == a, [&] { return fmt::format("|Omega({})| = {} vs A = {}", n, s128(om), s128(a)); });
    if (n <= 40)
      res.check(count_omega_direct(n) == om, [&] { return fmt::format("Omega({}) direct vs prefix", n); });
  }
  // The bijection between primitive height-one tuples and Omega.
  for (i64 n = std::max<i64>(rg.lo, 4); n <= std::min<i64>(rg.hi, 30); ++n) {
    i128 tuples = 0;
    for_each_params_A(n, [&](const ParamsA& a) {
      if (!is_primitive_params(a)) return;
      ++tuples;
      const OmegaA w = omega_from_params(a);
      res.check(in_omega(n, w), [&] { return fmt::format("f(tuple) outside Omega at n={}", n); });
      res.check(params_from_omega(n, w) == a, [&] { return fmt::format("g(f(t)) != t at n={}", n); });
    });
    i128 points = 0;
    for (i64 x = 1; x <= n; ++x)
      for (i64 y = x + 1; y <= n; ++y)
        for (i64 z = y + 1; z <= n; ++z)
          for (i64 tt = z + 1; tt <= n; ++tt) {
            const OmegaA w{x, y, z, tt};
            if (!in_omega(n, w)) continue;
            ++points;
            const ParamsA a = params_from_omega(n, w);
            res.check(is_valid(a) && is_primitive_params(a) && omega_from_params(a) == w,
                      [&] { return fmt::format("f(g(w)) != w at n={} ({},{},{},{})", n, x, y, z, tt); });
          }
    res.check(tuples == points, [&] { return fmt::format("|Sigma_A^P| != |Omega| at n={}", n); });
  }
  res.notes.push_back(fmt::format("coefficient = {}; explicit n <= {}, analytic n = {}..{}",
                                  coefficient_name(opt.coefficient), kExplicitCap, rg.lo, rg.hi));
  return res;
}

// ---------------------------------------------------------------- builders

template <class F>
void for_each_tuple(Diagram d, i64 n, F&& f) {
  switch (d) {
    case Diagram::A: for_each_params_A(n, f); break;
    case Diagram::B: for_each_params_B(n, f); break;
    case Diagram::C: for_each_params_C(n, f); break;
    case Diagram::D: for_each_params_D(n, f); break;
  }
}

using Shape = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Shape expected_shape(const ParamsA& a) { return {{std::uint32_t(a.j + a.k + a.l + a.m), std::uint32_t(a.p)}}; }
Shape expected_shape(const ParamsB& b) {
  return {{std::uint32_t(b.k + b.l + b.m), std::uint32_t(b.p)}, {std::uint32_t(b.m), std::uint32_t(b.q)}};
}
Shape expected_shape(const ParamsC& c) {
  return {{std::uint32_t(c.k + c.l), std::uint32_t(c.p)}, {std::uint32_t(c.l + c.m), std::uint32_t(c.q)}};
}
Shape expected_shape(const ParamsD& d) {
  return {{std::uint32_t(d.k + d.l), std::uint32_t(d.q)},
          {std::uint32_t(d.k), std::uint32_t(d.p)},
          {std::uint32_t(d.l), std::uint32_t(d.r)}};
}

Shape shape_of(const CylinderDecomposition& dec) {
  Shape s;
  for (const auto& c : dec.cylinders) s.emplace_back(c.width, c.height);
  std::sort(s.begin(), s.end());
  return s;
}

SuiteResult suite_builder(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "builder-contract";
  const Range rg = resolve(opt, 4, 12, 4, 24);
  const FormulaTables t(std::size_t(std::max<i64>(rg.hi + 2, 20)));
  u64 built = 0;
  for (i64 n = rg.lo; n <= rg.hi; ++n)
    for (Diagram d : kDiagrams)
      for_each_tuple(d, n, [&](const auto& p) {
        const Origami o = build_from_params(p);
        ++built;
        const auto dec = cylinder_decomposition(o);
        Shape want = expected_shape(p);
        std::sort(want.begin(), want.end());
        u64 area = 0;
        for (const auto& c : dec.cylinders) area += u64(c.width) * c.height;
        res.check(o.n() == u64(n) && area == u64(n), [&] { return fmt::format("{} area at n={}", diagram_name(d), n); });
        res.check(stratum(o) == Stratum::H11, [&] { return fmt::format("{} build not in H(1,1) at n={}", diagram_name(d), n); });
        res.check(shape_of(dec) == want, [&] { return fmt::format("{} cylinder shape at n={}", diagram_name(d), n); });
        res.check(classify_diagram(o) == d, [&] { return fmt::format("{} round trip at n={}", diagram_name(d), n); });
      });
  // Primitive tuples give pairwise distinct surfaces, as many as the formula.
  const i64 dedup_hi = 14;
  for (i64 n = rg.lo; n <= dedup_hi; ++n) {
    const Counts f = t.counts(u64(n), opt.coefficient);
    for (Diagram d : kDiagrams) {
      std::set<CanonicalForm> forms;
      i128 tuples = 0;
      for_each_tuple(d, n, [&](const auto& p) {
        if (!is_primitive_params(p)) return;
        ++tuples;
        forms.insert(canonical_form(build_from_params(p)));
      });
      const i128 want = pick(f, d);
      res.check(i128(forms.size()) == tuples && tuples == want, [&] {
        return fmt::format("{}({}): {} tuples, {} classes, formula {}", diagram_name(d), n, s128(tuples),
                           forms.size(), s128(want));
      });
    }
  }
  for (i64 n = rg.lo; n <= 20; ++n) {
    std::set<CanonicalForm> forms;
    for (i64 x = 1; x <= n; ++x)
      for (i64 y = x + 1; y <= n; ++y)
        for (i64 z = y + 1; z <= n; ++z)
          for (i64 w = z + 1; w <= n; ++w)
            if (in_omega(n, {x, y, z, w}))
              forms.insert(canonical_form(build_from_params(params_from_omega(n, {x, y, z, w}))));
    const i128 a = t.counts(u64(n), opt.coefficient).a;
    res.check(i128(forms.size()) == a, [&] { return fmt::format("Omega classes at n={}: {} vs A = {}", n, forms.size(), s128(a)); });
  }
  res.notes.push_back(fmt::format("{} surfaces built for n = {}..{}; dedup to n = {}, Omega dedup to n = 20", built,
                                  rg.lo, rg.hi, dedup_hi));
  return res;
}

// ---------------------------------------------------------------- period lattice

SuiteResult suite_absper(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "absper";
  const Range rg = resolve(opt, 4, 12, 4, 24);
  std::mt19937_64 rng(7);
  u64 counter = 0, primitive = 0;
  for (i64 n = rg.lo; n <= rg.hi; ++n)
    for (Diagram d : kDiagrams)
      for_each_tuple(d, n, [&](const auto& p) {
        const Origami o = build_from_params(p);
        const bool crit = is_primitive_params(p);
        const bool group = is_primitive_group(o);
        const Lattice2 L = absolute_period_lattice(o);
        const bool unit = !L.degenerate && L.index() == 1;
        primitive += crit;
        res.check(crit == group && group == unit, [&] {
          return fmt::format("{} n={}: gcd {} group {} lattice index {}", diagram_name(d), n, crit, group, L.index());
        });
        if (++counter % 7 != 0) return;
        Perm gamma(o.n());
        std::iota(gamma.begin(), gamma.end(), 0u);
        std::shuffle(gamma.begin(), gamma.end(), rng);
        const Origami r = o.relabeled(gamma);
        res.check(canonical_form(r) == canonical_form(o) && absolute_period_lattice(r) == L &&
                      is_primitive_group(r) == group && stratum(r) == stratum(o) &&
                      shape_of(cylinder_decomposition(r)) == shape_of(cylinder_decomposition(o)),
                  [&] { return fmt::format("relabeling changed an invariant ({} n={})", diagram_name(d), n); });
      });
  for (std::uint32_t n = 3; n <= 12; ++n) {
    Perm cyc(n), id(n), swap(n), sq(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      cyc[i] = (i + 1) % n;
      id[i] = i;
      swap[i] = i;
      sq[i] = (i + 2) % n;
    }
    std::swap(swap[0], swap[1]);
    const Lattice2 torus = absolute_period_lattice(Origami(cyc, id));
    res.check(!torus.degenerate && torus.a == i64(n) && torus.b == 0 && torus.c == 1,
              [&] { return fmt::format("torus lattice at n={}", n); });
    res.check(is_primitive_group(Origami(cyc, swap)), [&] { return fmt::format("S_{} reported imprimitive", n); });
    if (n % 2 == 0)
      res.check(!is_primitive_group(Origami(cyc, sq)), [&] { return fmt::format("block system missed at n={}", n); });
  }
  res.notes.push_back(fmt::format("{} tuples for n = {}..{}, {} primitive", counter, rg.lo, rg.hi, primitive));
  return res;
}

// ---------------------------------------------------------------- brute force

SuiteResult suite_bruteforce(const VerifyOptions& opt) {
  SuiteResult res;
  res.suite = "bruteforce";
  const Range rg = resolve(opt, 4, 6, kBruteMinN, kBruteMaxN);
  if (rg.hi == 8 && !opt.allow_n8) throw std::invalid_argument("the n = 8 sweep needs --allow-n8");
  const FormulaTables t(16);
  for (i64 n = rg.lo; n <= rg.hi; ++n) {
    const BruteForceCensus bf = brute_force_census(int(n), opt.workers);
    const Counts f = formula_counts(t, n, opt);
    const H2Counts h = count_H2(u64(n));
    for (Diagram d : kDiagrams) {
      const i128 got = bf.h11[int(d)], want = pick(f, d);
      res.check(got == want, [&] {
        return fmt::format("n={} {}: sweep {} formula {}", n, diagram_name(d), s128(got), s128(want));
      });
    }
    res.check(i128(bf.f) == h.f && i128(bf.g) == h.g, [&] {
      return fmt::format("n={} H(2): sweep ({},{}) formula ({},{})", n, bf.f, bf.g, s128(h.f), s128(h.g));
    });
    res.notes.push_back(fmt::format("n={}: A={} B={} C={} D={} F={} G={} ({:.2f}s)", n, bf.h11[0], bf.h11[1],
                                    bf.h11[2], bf.h11[3], bf.f, bf.g, bf.elapsed_seconds));
  }
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith-identities", "intermediate-sums", "shear-lemma",
                                              "quadruple-lemma",  "param-oracle",      "builder-contract",
                                              "absper",           "bruteforce"};
  return names;
}

std::optional<SuiteResult> run_suite(std::string_view name, const VerifyOptions& opt) {
  if (name == "arith-identities") return suite_arith(opt);
  if (name == "intermediate-sums") return suite_intermediate(opt);
  if (name == "shear-lemma") return suite_shear(opt);
  if (name == "quadruple-lemma") return suite_quadruple(opt);
  if (name == "param-oracle") return suite_param_oracle(opt);
  if (name == "builder-contract") return suite_builder(opt);
  if (name == "absper") return suite_absper(opt);
  if (name == "bruteforce") return suite_bruteforce(opt);
  return std::nullopt;
}

}  // namespace sqtile
