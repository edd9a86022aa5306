#pragma once

#include <vector>

#include "pcsf/instance.hpp"
#include "pcsf/rat.hpp"
#include "pcsf/vertex_set.hpp"

namespace pcsf {

/// Path-compressed union-find over vertices 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) const {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns the surviving root; callers must not pass equal roots.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

  bool connected(int a, int b) const { return find(a) == find(b); }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
};

/// One set of the laminar moat family. `duration` is the total time the
/// set spent coloring its cutting edges; `active` tracks ActS membership.
struct Moat {
  int id;
  VertexSet members;
  Rat duration;
  bool active;
};

/// Append-only family of every moat ever created, plus the union-find
/// mirror of the current forest components. Moats are created as active
/// singletons or by merging two current components; the member sets
/// therefore form a laminar family, and at most 2n-1 moats ever exist.
class MoatFamily {
 public:
  /// Empty placeholder; usable only after assignment from singletons().
  MoatFamily() : MoatFamily(0) {}

  /// One active singleton moat per vertex, duration 0.
  static MoatFamily singletons(int n);

  int vertex_count() const { return n_; }
  const std::vector<Moat>& moats() const { return moats_; }
  Moat& moat(int id) { return moats_[id]; }
  const Moat& moat(int id) const { return moats_[id]; }

  /// Id of the moat equal to the component containing `vertex`.
  int component_moat(int vertex) const {
    return root_moat_[uf_.find(vertex)];
  }

  bool same_component(int u, int v) const { return uf_.connected(u, v); }

  /// Merges the components of u and v (must differ) into a fresh active
  /// moat with duration 0; returns its id.
  int merge(int u, int v);

  void deactivate(int id) { moats_[id].active = false; }

  std::vector<int> active_ids() const;
  int active_count() const;

  /// Sum of durations over all moats.
  Rat total_duration() const;

 private:
  MoatFamily(int n) : n_(n), uf_(n), root_moat_(n, -1) {}

  int n_;
  std::vector<Moat> moats_;
  UnionFind uf_;
  std::vector<int> root_moat_;  // union-find root vertex -> moat id
};

}  // namespace pcsf
