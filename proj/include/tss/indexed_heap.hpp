#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tss/types.hpp"

namespace tss {

/// Heap slot: a vertex with a copy of its priority key.
template <class Key>
struct HeapEntry {
  Key key;
  Vertex vertex;
};

/// Binary heap over vertex ids 0..capacity-1 with position tracking.
///
/// Keys are stored inline next to the vertex so sifting never leaves the
/// heap array. `Before(a, b)` takes two HeapEntry<Key> and returns true when
/// `a` must come out before `b`. Change a queued vertex's key with update().
template <class Key, class Before>
class IndexedHeap {
 public:
  using Entry = HeapEntry<Key>;
  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  explicit IndexedHeap(std::size_t capacity, Before before = Before{})
      : pos_(capacity, npos), before_(std::move(before)) {
    heap_.reserve(capacity);
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(Vertex v) const { return pos_[v] != npos; }

  /// Hint that v's position is about to be read.
  void prefetch(Vertex v) const { __builtin_prefetch(&pos_[v]); }

  Vertex top() const {
    assert(!heap_.empty());
    return heap_.front().vertex;
  }

  const Key& key(Vertex v) const {
    assert(contains(v));
    return heap_[pos_[v]].key;
  }

  void push(Vertex v, Key key) {
    assert(!contains(v));
    heap_.push_back({std::move(key), v});
    pos_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
    sift_up(heap_.size() - 1);
  }

  Vertex pop() {
    Vertex v = top();
    erase(v);
    return v;
  }

  void erase(Vertex v) {
    const std::size_t i = pos_[v];
    assert(i != npos);
    const std::size_t last = heap_.size() - 1;
    if (i != last) {
      place(i, std::move(heap_[last]));
      heap_.pop_back();
      restore(i);
    } else {
      heap_.pop_back();
    }
    pos_[v] = npos;
  }

  /// Replaces v's key and restores heap order in either direction.
  void update(Vertex v, Key key) {
    assert(contains(v));
    const std::size_t i = pos_[v];
    heap_[i].key = std::move(key);
    restore(i);
  }

 private:
  void place(std::size_t i, Entry e) {
    pos_[e.vertex] = static_cast<std::uint32_t>(i);
    heap_[i] = std::move(e);
  }

  void restore(std::size_t i) {
    if (i > 0 && before_(heap_[i], heap_[(i - 1) / 2])) {
      sift_up(i);
    } else {
      sift_down(i);
    }
  }

  void sift_up(std::size_t i) {
    Entry e = std::move(heap_[i]);
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before_(e, heap_[parent])) break;
      place(i, std::move(heap_[parent]));
      i = parent;
    }
    place(i, std::move(e));
  }

  void sift_down(std::size_t i) {
    Entry e = std::move(heap_[i]);
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && before_(heap_[child + 1], heap_[child])) ++child;
      if (!before_(heap_[child], e)) break;
      place(i, std::move(heap_[child]));
      i = child;
    }
    place(i, std::move(e));
  }

  std::vector<Entry> heap_;
  std::vector<std::uint32_t> pos_;
  Before before_;
};

}  // namespace tss
