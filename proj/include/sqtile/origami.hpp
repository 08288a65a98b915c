#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sqtile/params.hpp"

namespace sqtile {

using Perm = std::vector<std::uint32_t>;

// Squares are 0..n-1. sigma(i) is the square to the right of i and tau(i)
// the square on top of i. Permutations are maps composed as functions, so
// (f g)(x) = f(g(x)).
class Origami {
 public:
  Origami(Perm sigma, Perm tau);

  std::uint32_t n() const { return static_cast<std::uint32_t>(sigma_.size()); }
  const Perm& sigma() const { return sigma_; }
  const Perm& tau() const { return tau_; }

  // Conjugate by gamma: square x is renamed gamma(x).
  Origami relabeled(const Perm& gamma) const;

 private:
  Perm sigma_, tau_;
};

bool is_permutation(std::span<const std::uint32_t> p);
Perm inverse(const Perm& p);

// c = sigma tau sigma^-1 tau^-1 as a function. Its support is exactly the
// set of squares whose lower-left corner is a cone point.
Perm commutator(const Origami& o);

// Sorted cycle lengths greater than one.
using CycleType = std::vector<std::uint32_t>;
CycleType cycle_type(const Perm& p);

enum class Stratum { H11, H2, Torus, Other };
const char* stratum_name(Stratum s);
Stratum stratum(const Origami& o);

bool is_connected(const Origami& o);

// Monodromy group has no block other than singletons and the whole set.
// Throws std::invalid_argument on a disconnected surface.
bool is_primitive_group(const Origami& o);

struct Cylinder {
  std::vector<std::vector<std::uint32_t>> rows;  // bottom to top
  std::uint32_t width = 0, height = 0;
  std::uint32_t top_sc = 0, bottom_sc = 0;  // saddle connections on each boundary
};

struct CylinderDecomposition {
  std::vector<Cylinder> cylinders;
};

CylinderDecomposition cylinder_decomposition(const Origami& o);

// Throws std::logic_error when the surface is not in the two-cone-point
// stratum or its cylinder count is not 1, 2 or 3.
Diagram classify_diagram(const Origami& o);

Origami build_from_params(const ParamsA& a);
Origami build_from_params(const ParamsB& b);
Origami build_from_params(const ParamsC& c);
Origami build_from_params(const ParamsD& d);

// Lexicographically least encoding of (sigma, tau) over breadth-first
// relabelings from every base square.
using CanonicalForm = std::vector<std::uint32_t>;
CanonicalForm canonical_form(const Origami& o);
std::size_t dedup(std::span<const Origami> surfaces);

// Column basis (a, 0), (b, c) with 0 <= b < a, or degenerate for rank < 2.
struct Lattice2 {
  i64 a = 0, b = 0, c = 0;
  bool degenerate = true;
  i64 index() const { return a * c; }
  bool operator==(const Lattice2&) const = default;
};

Lattice2 absolute_period_lattice(const Origami& o);

struct BruteForceCensus {
  int n = 0;
  std::array<u64, 4> h11{};  // primitive classes per diagram A..D
  u64 f = 0, g = 0;          // primitive single-cone-point classes, 1 and 2 cylinders
  u64 h11_classes = 0, h2_classes = 0;  // all connected classes before the primitivity test
  u64 pairs_scanned = 0;
  double elapsed_seconds = 0;
};

inline constexpr int kBruteMinN = 4;
inline constexpr int kBruteMaxN = 8;

// Sweeps every (sigma, tau) in S_n x S_n. Outer permutations are dealt to
// `workers` threads round-robin; each keeps its own class set and the sets
// are merged at the end. `progress` receives the completed fraction.
BruteForceCensus brute_force_census(int n, unsigned workers,
                                    const std::function<void(double)>& progress = {});

}  // namespace sqtile
