#pragma once

#include <cstdint>
#include <limits>

namespace sqtile::detail {

// Breadth-first relabeling from every base square (right neighbour first,
// then top); `best` receives the least encoding (sigma row, then tau row).
// Scratch arrays hold n entries each, `cand` and `best` 2n. Returns false if
// some square is unreachable.
template <class T>
bool canonical_into(const T* s, const T* t, unsigned n, T* best, T* label, T* order, T* cand) {
  constexpr T kNone = std::numeric_limits<T>::max();
  bool have = false;
  for (unsigned b = 0; b < n; ++b) {
    for (unsigned i = 0; i < n; ++i) label[i] = kNone;
    label[b] = 0;
    order[0] = T(b);
    unsigned head = 0, cnt = 1;
    while (head < cnt) {
      const T x = order[head++];
      const T ys[2] = {s[x], t[x]};
      for (T y : ys)
        if (label[y] == kNone) {
          label[y] = T(cnt);
          order[cnt++] = y;
        }
    }
    if (cnt != n) return false;
    for (unsigned i = 0; i < n; ++i) {
      cand[i] = label[s[order[i]]];
      cand[n + i] = label[t[order[i]]];
    }
    bool less = !have;
    if (have) {
      for (unsigned i = 0; i < 2 * n; ++i)
        if (cand[i] != best[i]) {
          less = cand[i] < best[i];
          break;
        }
    }
    if (less) {
      for (unsigned i = 0; i < 2 * n; ++i) best[i] = cand[i];
      have = true;
    }
  }
  return true;
}

}  // namespace sqtile::detail
