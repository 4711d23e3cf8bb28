#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <span>
#include <utility>
#include <vector>

namespace hyperstrength::detail {

// Flat incidence structure shared by the integer and real-weighted callers.
struct IncidenceView {
  std::size_t n = 0;
  std::span<const std::size_t> edge_offsets;
  std::span<const std::uint32_t> pins;
  std::span<const std::size_t> vertex_offsets;
  std::span<const std::uint32_t> incidence;
};

// Maximum adjacency order: the next vertex maximises the total weight of its
// edges that already contain an ordered vertex. Ties go to the smallest id;
// when nothing is adjacent the smallest unordered id starts a new component.
// Indexed 4-ary max-heap over the vertices, each edge is touched once:
// O(p log n).
template <class Scalar>
std::vector<std::uint32_t> ma_sequence(const IncidenceView& g, std::span<const Scalar> weights) {
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<Scalar> key(g.n, Scalar{0});
  std::vector<std::uint32_t> slot(g.n, kNone);
  std::vector<std::uint32_t> heap;
  std::vector<char> ordered(g.n, 0);
  std::vector<char> touched(weights.size(), 0);

  auto before = [&](std::uint32_t a, std::uint32_t b) {
    return key[a] > key[b] || (key[a] == key[b] && a < b);
  };
  auto place = [&](std::size_t i, std::uint32_t v) {
    heap[i] = v;
    slot[v] = static_cast<std::uint32_t>(i);
  };
  auto sift_up = [&](std::size_t i) {
    const std::uint32_t v = heap[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 4;
      if (!before(v, heap[parent])) break;
      place(i, heap[parent]);
      i = parent;
    }
    place(i, v);
  };
  auto sift_down = [&](std::size_t i) {
    const std::uint32_t v = heap[i];
    while (true) {
      const std::size_t first = 4 * i + 1;
      if (first >= heap.size()) break;
      std::size_t best = first;
      const std::size_t last = std::min(first + 4, heap.size());
      for (std::size_t c = first + 1; c < last; ++c) {
        if (before(heap[c], heap[best])) best = c;
      }
      if (!before(heap[best], v)) break;
      place(i, heap[best]);
      i = best;
    }
    place(i, v);
  };

  std::vector<std::uint32_t> order;
  order.reserve(g.n);
  std::uint32_t next_fresh = 0;
  while (order.size() < g.n) {
    std::uint32_t v;
    if (!heap.empty()) {
      v = heap.front();
      slot[v] = kNone;
      const std::uint32_t tail = heap.back();
      heap.pop_back();
      if (!heap.empty()) {
        heap[0] = tail;
        sift_down(0);
      }
    } else {
      while (ordered[next_fresh]) ++next_fresh;
      v = next_fresh;
    }
    ordered[v] = 1;
    order.push_back(v);
    for (std::size_t i = g.vertex_offsets[v]; i < g.vertex_offsets[v + 1]; ++i) {
      const std::uint32_t e = g.incidence[i];
      if (touched[e]) continue;
      touched[e] = 1;
      for (std::size_t j = g.edge_offsets[e]; j < g.edge_offsets[e + 1]; ++j) {
        const std::uint32_t u = g.pins[j];
        if (ordered[u]) continue;
        key[u] += weights[e];
        if (slot[u] == kNone) {
          heap.push_back(u);
          sift_up(heap.size() - 1);
        } else {
          sift_up(slot[u]);
        }
      }
    }
  }
  return order;
}

}  // namespace hyperstrength::detail
