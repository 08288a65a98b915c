#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "detail.hpp"
#include "sqtile/origami.hpp"

namespace sqtile {

namespace {

using Small = std::array<std::uint8_t, kBruteMaxN>;

// Canonical form packed four bits per entry; 2n <= 16 entries fit in 64 bits.
u64 pack(const std::uint8_t* v, unsigned len) {
  u64 key = 0;
  for (unsigned i = 0; i < len; ++i) key = (key << 4) | v[i];
  return key;
}

Origami unpack(u64 key, unsigned n) {
  Perm s(n), t(n);
  for (unsigned i = 2 * n; i-- > 0;) {
    const std::uint32_t v = key & 0xF;
    key >>= 4;
    if (i >= n)
      t[i - n] = v;
    else
      s[i] = v;
  }
  return Origami(std::move(s), std::move(t));
}

bool connected_small(const std::uint8_t* s, const std::uint8_t* t, unsigned n) {
  unsigned seen = 1, frontier = 1;
  const unsigned all = (1u << n) - 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned x = 0; x < n; ++x)
      if (frontier & (1u << x)) next |= (1u << s[x]) | (1u << t[x]);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

struct WorkerOut {
  std::unordered_set<u64> h11, h2;
  u64 pairs = 0;
};

}  // namespace

BruteForceCensus brute_force_census(int n, unsigned workers, const std::function<void(double)>& progress) {
  if (n < kBruteMinN || n > kBruteMaxN) throw std::out_of_range("brute force needs 4 <= n <= 8");
  if (workers == 0) workers = 1;
  const auto start = std::chrono::steady_clock::now();
  const unsigned un = unsigned(n);

  std::vector<Small> perms, invs;
  Small p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t(0));
  do {
    perms.push_back(p);
    Small inv{};
    for (unsigned i = 0; i < un; ++i) inv[p[i]] = std::uint8_t(i);
    invs.push_back(inv);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  const std::size_t P = perms.size();

  std::vector<WorkerOut> outs(workers);
  std::atomic<std::size_t> done{0};
  std::mutex report_mu;
  std::size_t last_pct = 0;

  auto work = [&](unsigned w) {
    WorkerOut& out = outs[w];
    std::uint8_t best[2 * kBruteMaxN], cand[2 * kBruteMaxN], label[kBruteMaxN], order[kBruteMaxN];
    for (std::size_t i = w; i < P; i += workers) {
      const std::uint8_t* s = perms[i].data();
      const std::uint8_t* si = invs[i].data();
      for (std::size_t j = 0; j < P; ++j) {
        const std::uint8_t* t = perms[j].data();
        const std::uint8_t* ti = invs[j].data();
        // Cheapest filter first: the commutator must move exactly three or
        // four points, as one 3-cycle or two transpositions.
        std::uint8_t com[kBruteMaxN];
        unsigned moved = 0;
        for (unsigned x = 0; x < un && moved <= 4; ++x) {
          com[x] = s[t[si[ti[x]]]];
          moved += com[x] != x;
        }
        if (moved != 3 && moved != 4) continue;
        if (moved == 4) {
          bool involution = true;
          for (unsigned x = 0; x < un; ++x) involution = involution && com[com[x]] == x;
          if (!involution) continue;
        }
        if (!connected_small(s, t, un)) continue;
        detail::canonical_into<std::uint8_t>(s, t, un, best, label, order, cand);
        (moved == 4 ? out.h11 : out.h2).insert(pack(best, 2 * un));
      }
      out.pairs += P;
      const std::size_t d = ++done;
      if (progress) {
        const std::size_t pct = d * 100 / P;
        std::lock_guard<std::mutex> lk(report_mu);
        if (pct > last_pct) {
          last_pct = pct;
          progress(double(d) / double(P));
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  std::unordered_set<u64> h11, h2;
  BruteForceCensus res;
  res.n = n;
  for (auto& o : outs) {
    h11.insert(o.h11.begin(), o.h11.end());
    h2.insert(o.h2.begin(), o.h2.end());
    res.pairs_scanned += o.pairs;
  }
  res.h11_classes = h11.size();
  res.h2_classes = h2.size();
  // Primitivity and the diagram are class invariants, so they are decided
  // once per class rather than once per labelled pair.
  for (u64 key : h11) {
    const Origami o = unpack(key, un);
    if (!is_primitive_group(o)) continue;
    ++res.h11[static_cast<int>(classify_diagram(o))];
  }
  for (u64 key : h2) {
    const Origami o = unpack(key, un);
    if (!is_primitive_group(o)) continue;
    const auto cyl = cylinder_decomposition(o).cylinders.size();
    if (cyl == 1)
      ++res.f;
    else if (cyl == 2)
      ++res.g;
    else
      throw std::logic_error("H(2) surface with an impossible cylinder count");
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace sqtile
