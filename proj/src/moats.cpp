#include "pcsf/moats.hpp"

#include <cassert>

namespace pcsf {

MoatFamily MoatFamily::singletons(int n) {
  MoatFamily fam(n);
  fam.moats_.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    fam.moats_.push_back({v, VertexSet::singleton(n, v), Rat(0), true});
    fam.root_moat_[v] = v;
  }
  return fam;
}

int MoatFamily::merge(int u, int v) {
  int ru = uf_.find(u);
  int rv = uf_.find(v);
  assert(ru != rv);
  Moat& mu = moats_[root_moat_[ru]];
  Moat& mv = moats_[root_moat_[rv]];
  VertexSet merged = mu.members;
  merged.unite_with(mv.members);
  mu.active = false;  // replaced in ActS by the union
  mv.active = false;
  int id = static_cast<int>(moats_.size());
  moats_.push_back({id, std::move(merged), Rat(0), true});
  assert(static_cast<int>(moats_.size()) <= 2 * n_ - 1);
  int root = uf_.unite(ru, rv);
  root_moat_[root] = id;
  return id;
}

std::vector<int> MoatFamily::active_ids() const {
  std::vector<int> out;
  for (const auto& m : moats_)
    if (m.active) out.push_back(m.id);
  return out;
}

int MoatFamily::active_count() const {
  int c = 0;
  for (const auto& m : moats_) c += m.active ? 1 : 0;
  return c;
}

Rat MoatFamily::total_duration() const {
  Rat sum = 0;
  for (const auto& m : moats_) sum += m.duration;
  return sum;
}

}  // namespace pcsf
