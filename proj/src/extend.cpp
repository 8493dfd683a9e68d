#include "augsimp/extend.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "augsimp/errors.hpp"

namespace augsimp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // The smaller root survives, so every root is the least member of its class.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

AugSSet extend(const AugSSet& x, const CoSSObject& z) {
  if (!z.regular()) throw NonRegular(z.name() + " is not regular");
  if (x.empty()) return AugSSet();
  const int dim_x = *x.dim();

  // Copies of Z.at(n), one per simplex of X, in (level, index) order.
  std::vector<int> copy_level;
  std::vector<int> copy_start(dim_x + 3, 0);
  for (int n = -1; n <= dim_x; ++n) {
    copy_start[n + 1] = static_cast<int>(copy_level.size());
    copy_level.insert(copy_level.end(), x.size(n), n);
  }
  copy_start[dim_x + 2] = static_cast<int>(copy_level.size());
  const int copies = static_cast<int>(copy_level.size());

  int out_top = -1;
  for (int n = -1; n <= dim_x; ++n)
    if (x.size(n) > 0) out_top = std::max(out_top, z.at(n).top());

  std::vector<std::vector<int>> offset(out_top + 2, std::vector<int>(copies + 1, 0));
  std::vector<UnionFind> classes;
  for (int m = -1; m <= out_top; ++m) {
    auto& off = offset[m + 1];
    for (int c = 0; c < copies; ++c) off[c + 1] = off[c] + z.at(copy_level[c]).size(m);
    classes.emplace_back(off[copies]);
  }

  for (int n = 0; n <= dim_x; ++n)
    for (int s = 0; s < x.size(n); ++s) {
      const int c = copy_start[n + 1] + s;
      for (int i = 0; i <= n; ++i) {
        const int c_face = copy_start[n] + x.face(n, i, s);
        const SSetMap& f = z.coface(n, i);
        const AugSSet& lower = z.at(n - 1);
        for (int m = -1; m <= lower.top(); ++m)
          for (int t = 0; t < lower.size(m); ++t)
            classes[m + 1].unite(offset[m + 1][c] + f(m, t), offset[m + 1][c_face] + t);
      }
    }

  std::vector<std::vector<int>> dense(out_top + 2);
  std::vector<LevelData> levels(out_top + 2);
  for (int m = -1; m <= out_top; ++m) {
    const int total = offset[m + 1][copies];
    auto& d = dense[m + 1];
    d.assign(total, -1);
    int next = 0;
    for (int e = 0; e < total; ++e)
      if (classes[m + 1].find(e) == e) d[e] = next++;
    levels[m + 1].size = next;
  }

  for (int m = 0; m <= out_top; ++m) {
    auto& faces = levels[m + 1].faces;
    faces.assign(m + 1, std::vector<int>(levels[m + 1].size, -1));
    for (int c = 0; c < copies; ++c) {
      const AugSSet& zc = z.at(copy_level[c]);
      for (int t = 0; t < zc.size(m); ++t) {
        const int cls = dense[m + 1][classes[m + 1].find(offset[m + 1][c] + t)];
        for (int k = 0; k <= m; ++k) {
          const int target = dense[m][classes[m].find(offset[m][c] + zc.face(m, k, t))];
          int& slot = faces[k][cls];
          if (slot == -1) {
            slot = target;
          } else if (slot != target) {
            throw std::logic_error("extend: induced face d_" + std::to_string(k) + " is not well defined at level " +
                                   std::to_string(m));
          }
        }
      }
    }
  }
  return AugSSet(std::move(levels));
}

AugSSet cylinder(const AugSSet& x) { return extend(x, *cosimp_cil()); }
AugSSet cylinder0(const AugSSet& x) { return extend(x, *cosimp_cil0()); }
AugSSet cylinder2(const AugSSet& x) { return extend(x, *cosimp_cil2()); }
AugSSet subdivision(const AugSSet& x) { return extend(x, *cosimp_sd()); }

namespace {

using Key = std::vector<VertexSet>;

VertexSet drop_vertex(VertexSet s, int idx) {
  auto verts = vertices_of(s);
  return s & ~(VertexSet{1} << verts.at(idx));
}

AugSSet complex_from_keys(std::vector<Key> keys, const std::function<int(const Key&)>& level_of,
                          const std::function<Key(const Key&, int)>& face) {
  std::sort(keys.begin(), keys.end());
  int top = -1;
  for (const Key& k : keys) top = std::max(top, level_of(k));
  std::vector<std::vector<Key>> by_level(top + 2);
  for (Key& k : keys) by_level[level_of(k) + 1].push_back(std::move(k));
  std::vector<std::map<Key, int>> index(by_level.size());
  for (std::size_t l = 0; l < by_level.size(); ++l)
    for (std::size_t s = 0; s < by_level[l].size(); ++s) index[l][by_level[l][s]] = static_cast<int>(s);
  std::vector<LevelData> levels(by_level.size());
  for (std::size_t l = 0; l < by_level.size(); ++l) {
    const int m = static_cast<int>(l) - 1;
    levels[l].size = static_cast<int>(by_level[l].size());
    if (m < 0) continue;
    levels[l].faces.assign(m + 1, std::vector<int>(by_level[l].size()));
    for (std::size_t s = 0; s < by_level[l].size(); ++s)
      for (int i = 0; i <= m; ++i) {
        auto it = index[l - 1].find(face(by_level[l][s], i));
        if (it == index[l - 1].end()) throw std::logic_error("direct construction is not closed under faces");
        levels[l].faces[i][s] = it->second;
      }
  }
  return AugSSet(std::move(levels));
}

// Vertex sets of all simplices, after checking that the embedding is a
// face-compatible inclusion into Γ₊[ambient].
std::unordered_set<VertexSet> embedded_sets(const AugSSet& x, int& ambient) {
  const auto& e = x.embedding();
  if (!e) throw NotASubcomplex("complex carries no embedding into a standard simplex");
  ambient = e->ambient;
  std::unordered_set<VertexSet> sets;
  for (int n = -1; n <= x.top(); ++n) {
    if (static_cast<int>(e->vertex_sets.size()) <= n + 1 ||
        static_cast<int>(e->vertex_sets[n + 1].size()) != x.size(n))
      throw NotASubcomplex("embedding does not cover level " + std::to_string(n));
    for (int s = 0; s < x.size(n); ++s) {
      VertexSet v = e->vertex_sets[n + 1][s];
      if (std::popcount(v) != n + 1 || (ambient < 31 && (v >> (ambient + 1)) != 0))
        throw NotASubcomplex("simplex " + std::to_string(s) + " at level " + std::to_string(n) + " has a bad vertex set");
      for (int i = 0; i <= n && n >= 0; ++i)
        if (e->vertex_sets[n][x.face(n, i, s)] != drop_vertex(v, i))
          throw NotASubcomplex("faces disagree with the embedding at level " + std::to_string(n));
      if (!sets.insert(v).second) throw NotASubcomplex("two simplices share a vertex set");
    }
  }
  return sets;
}

}  // namespace

AugSSet direct_cil_subcomplex(const AugSSet& x, CilKind kind) {
  int ambient = -1;
  const auto sets = embedded_sets(x, ambient);
  if (sets.empty()) return AugSSet();
  const VertexSet full = (VertexSet{1} << (ambient + 1)) - 1;
  std::vector<Key> keys;
  for (VertexSet sigma = 0; sigma <= full; ++sigma)
    for (VertexSet tau = 0; tau <= full; ++tau)
      if (admissible(kind, sigma, tau) && sets.count(sigma | tau)) keys.push_back({sigma, tau});
  return complex_from_keys(
      std::move(keys), [](const Key& k) { return std::popcount(k[0]) + std::popcount(k[1]) - 1; },
      [](const Key& k, int i) -> Key {
        const int p = std::popcount(k[0]) - 1;
        if (i <= p) return {drop_vertex(k[0], i), k[1]};
        return {k[0], drop_vertex(k[1], i - p - 1)};
      });
}

AugSSet direct_sd_subcomplex(const AugSSet& x) {
  int ambient = -1;
  const auto sets = embedded_sets(x, ambient);
  if (sets.empty()) return AugSSet();
  std::vector<VertexSet> members;
  for (VertexSet v : sets)
    if (v != 0) members.push_back(v);
  std::sort(members.begin(), members.end());
  std::vector<Key> keys{Key{}};
  Key chain;
  std::function<void()> grow = [&] {
    keys.push_back(chain);
    const VertexSet last = chain.back();
    for (VertexSet v : members)
      if (v != last && (v & last) == last) {
        chain.push_back(v);
        grow();
        chain.pop_back();
      }
  };
  for (VertexSet v : members) {
    chain = {v};
    grow();
  }
  return complex_from_keys(
      std::move(keys), [](const Key& k) { return static_cast<int>(k.size()) - 1; },
      [](const Key& k, int i) {
        Key out = k;
        out.erase(out.begin() + i);
        return out;
      });
}

AugSequence interior_count(const CoSSObject& z, Nat1 n) {
  if (!z.regular()) throw NonRegular(z.name() + " is not regular");
  const AugSSet& level = z.at(n);
  std::vector<std::vector<char>> hit(level.top() + 2);
  for (int m = -1; m <= level.top(); ++m) hit[m + 1].assign(level.size(m), 0);
  for (int i = 0; i <= n; ++i) {
    const SSetMap& f = z.coface(n, i);
    for (std::size_t k = 0; k < f.components.size(); ++k)
      for (int t : f.components[k]) hit[k][t] = 1;
  }
  std::vector<Scalar> counts;
  for (const auto& h : hit) counts.emplace_back(static_cast<long>(std::count(h.begin(), h.end(), 0)));
  return AugSequence(std::move(counts));
}

ConeSdReport cone_sd_check(Nat1 n) {
  ConeSdReport r;
  AugSSet left = cone_left(subdivision(boundary(n)));
  AugSSet right = subdivision(gamma(n));
  r.left = cardinal(left);
  r.right = cardinal(right);
  r.left_valid = validate(left);
  r.right_valid = validate(right);
  const int top = std::max(left.top(), right.top());
  bool all = true;
  for (int m = -1; m <= top; ++m) {
    const bool same = left.size(m) == right.size(m);
    r.level_match.push_back(same);
    all = all && same;
  }
  r.pass = all && r.left_valid.ok && r.right_valid.ok;
  return r;
}

}  // namespace augsimp
