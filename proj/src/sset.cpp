#include "augsimp/sset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "augsimp/errors.hpp"

namespace augsimp {

AugSSet::AugSSet() : sizes_{0} {}

AugSSet::AugSSet(std::vector<LevelData> levels) {
  while (levels.size() > 1 && levels.back().size == 0) levels.pop_back();
  if (levels.empty()) levels.push_back({});
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const int n = static_cast<int>(k) - 1;
    const LevelData& l = levels[k];
    if (l.size < 0) throw InvalidComplex("negative size at level " + std::to_string(n));
    sizes_.push_back(l.size);
    if (n == -1) {
      if (!l.faces.empty()) throw InvalidComplex("level -1 has no face maps");
      continue;
    }
    if (static_cast<int>(l.faces.size()) != n + 1)
      throw InvalidComplex("level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " face maps");
    for (const auto& f : l.faces)
      if (static_cast<int>(f.size()) != l.size)
        throw InvalidComplex("face map length mismatch at level " + std::to_string(n));
    faces_.push_back(l.faces);
  }
}

int AugSSet::size(int n) const {
  if (n < -1 || n > top()) return 0;
  return sizes_[n + 1];
}

std::optional<int> AugSSet::dim() const {
  for (int n = top(); n >= -1; --n)
    if (sizes_[n + 1] > 0) return n;
  return std::nullopt;
}

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> v;
  for (int k = 0; s != 0; ++k, s >>= 1)
    if (s & 1u) v.push_back(k);
  return v;
}

std::string AugSSet::label(int n, int s) const {
  if (!embedding_) return "#" + std::to_string(s);
  std::string out = "{";
  for (int v : vertices_of(embedding_->vertex_sets[n + 1][s])) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

AugSSet AugSSet::with_embedding(GammaEmbedding e) const {
  AugSSet out = *this;
  out.embedding_ = std::move(e);
  return out;
}

std::vector<LevelData> AugSSet::levels() const {
  std::vector<LevelData> out;
  for (int n = -1; n <= top(); ++n) {
    LevelData l;
    l.size = size(n);
    if (n >= 0) l.faces = faces_[n];
    out.push_back(std::move(l));
  }
  return out;
}

ValidationReport validate(const AugSSet& x) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  for (int n = 0; n <= x.top(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.size(n); ++s) {
        int t = x.face(n, i, s);
        if (t < 0 || t >= x.size(n - 1))
          return fail("face d_" + std::to_string(i) + " of simplex " + std::to_string(s) + " at level " +
                      std::to_string(n) + " points outside level " + std::to_string(n - 1));
      }
  for (int n = 1; n <= x.top(); ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int s = 0; s < x.size(n); ++s) {
          int lhs = x.face(n - 1, i, x.face(n, j, s));
          int rhs = x.face(n - 1, j - 1, x.face(n, i, s));
          if (lhs != rhs)
            return fail("identity d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" +
                        std::to_string(j - 1) + " d_" + std::to_string(i) + " fails on simplex " +
                        std::to_string(s) + " at level " + std::to_string(n));
        }
  return {};
}

ValidationReport validate_map(const SSetMap& f) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  const AugSSet& src = *f.source;
  const AugSSet& dst = *f.target;
  if (static_cast<int>(f.components.size()) < src.top() + 2) return fail("missing components");
  for (int n = -1; n <= src.top(); ++n) {
    const auto& c = f.components[n + 1];
    if (static_cast<int>(c.size()) != src.size(n)) return fail("component size mismatch at level " + std::to_string(n));
    for (int s = 0; s < src.size(n); ++s)
      if (c[s] < 0 || c[s] >= dst.size(n)) return fail("image out of range at level " + std::to_string(n));
  }
  for (int n = 0; n <= src.top(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < src.size(n); ++s)
        if (f(n - 1, src.face(n, i, s)) != dst.face(n, i, f(n, s)))
          return fail("map does not commute with d_" + std::to_string(i) + " at level " + std::to_string(n));
  return {};
}

bool is_injective(const SSetMap& f) {
  for (const auto& c : f.components) {
    std::unordered_set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) return false;
  }
  return true;
}

AugSSet complex_from_vertex_sets(int ambient, std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  int top = -1;
  for (VertexSet s : sets) top = std::max(top, std::popcount(s) - 1);
  std::vector<std::vector<VertexSet>> by_level(top + 2);
  for (VertexSet s : sets) by_level[std::popcount(s)].push_back(s);
  for (auto& level : by_level)
    std::sort(level.begin(), level.end(),
              [](VertexSet a, VertexSet b) { return vertices_of(a) < vertices_of(b); });
  std::vector<std::unordered_map<VertexSet, int>> index(by_level.size());
  for (std::size_t k = 0; k < by_level.size(); ++k)
    for (std::size_t s = 0; s < by_level[k].size(); ++s) index[k][by_level[k][s]] = static_cast<int>(s);

  std::vector<LevelData> levels(by_level.size());
  for (std::size_t k = 0; k < by_level.size(); ++k) {
    const int n = static_cast<int>(k) - 1;
    levels[k].size = static_cast<int>(by_level[k].size());
    if (n < 0) continue;
    levels[k].faces.assign(n + 1, std::vector<int>(by_level[k].size()));
    for (std::size_t s = 0; s < by_level[k].size(); ++s) {
      auto verts = vertices_of(by_level[k][s]);
      for (int i = 0; i <= n; ++i) {
        VertexSet f = by_level[k][s] & ~(VertexSet{1} << verts[i]);
        auto it = index[k - 1].find(f);
        if (it == index[k - 1].end()) throw InvalidComplex("vertex sets are not closed under faces");
        levels[k].faces[i][s] = it->second;
      }
    }
  }
  GammaEmbedding e;
  e.ambient = ambient;
  e.vertex_sets = by_level;
  if (e.vertex_sets.empty()) e.vertex_sets.emplace_back();
  return AugSSet(std::move(levels)).with_embedding(std::move(e));
}

namespace {

void check_ambient(int n) {
  if (n > 30) throw std::domain_error("Γ₊[n] is limited to n <= 30");
}

}  // namespace

AugSSet gamma(Nat1 n) {
  check_ambient(n);
  std::vector<VertexSet> sets;
  const VertexSet full = (VertexSet{1} << (n + 1)) - 1;
  for (VertexSet s = 0;; ++s) {
    sets.push_back(s);
    if (s == full) break;
  }
  return complex_from_vertex_sets(n, std::move(sets));
}

AugSSet boundary(Nat1 n) {
  check_ambient(n);
  std::vector<VertexSet> sets;
  const VertexSet full = (VertexSet{1} << (n + 1)) - 1;
  for (VertexSet s = 0; s < full; ++s) sets.push_back(s);
  return complex_from_vertex_sets(n, std::move(sets));
}

AugSSet subcomplex_of_gamma(Nat1 n, const std::vector<std::vector<int>>& generators) {
  check_ambient(n);
  std::unordered_set<VertexSet> closed{0};
  for (const auto& g : generators) {
    VertexSet mask = 0;
    for (int v : g) {
      if (v < 0 || v > n)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " is not in {0.." + std::to_string(n) + "}");
      mask |= VertexSet{1} << v;
    }
    for (VertexSet sub = mask;; sub = (sub - 1) & mask) {
      closed.insert(sub);
      if (sub == 0) break;
    }
  }
  return complex_from_vertex_sets(n, std::vector<VertexSet>(closed.begin(), closed.end()));
}

AugSSet hexagon() {
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < 6; ++v) edges.push_back({v, (v + 1) % 6});
  return subcomplex_of_gamma(5, edges);
}

AugSSet join(const AugSSet& x, const AugSSet& y) {
  const int top = x.top() + y.top() + 1;
  // offsets[m + 1][p + 1]: first index of block X_p × Y_{m-1-p} inside level m.
  std::vector<std::vector<long>> offsets(top + 2);
  std::vector<LevelData> levels(top + 2);
  for (int m = -1; m <= top; ++m) {
    auto& off = offsets[m + 1];
    off.assign(m + 3, 0);
    long total = 0;
    for (int p = -1; p <= m; ++p) {
      off[p + 1] = total;
      total += static_cast<long>(x.size(p)) * y.size(m - 1 - p);
    }
    off[m + 2] = total;
    levels[m + 1].size = static_cast<int>(total);
  }
  for (int m = 0; m <= top; ++m) {
    auto& faces = levels[m + 1].faces;
    faces.assign(m + 1, std::vector<int>(levels[m + 1].size));
    for (int p = -1; p <= m; ++p) {
      const int q = m - 1 - p;
      const int nx = x.size(p), ny = y.size(q);
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) {
          const long s = offsets[m + 1][p + 1] + static_cast<long>(a) * ny + b;
          for (int i = 0; i <= m; ++i) {
            long t;
            if (i <= p) {
              t = offsets[m][p] + static_cast<long>(x.face(p, i, a)) * ny + b;
            } else {
              t = offsets[m][p + 1] + static_cast<long>(a) * y.size(q - 1) + y.face(q, i - p - 1, b);
            }
            faces[i][s] = static_cast<int>(t);
          }
        }
    }
  }
  return AugSSet(std::move(levels));
}

AugSSet cone_left(const AugSSet& x) { return join(gamma(0), x); }
AugSSet cone_right(const AugSSet& x) { return join(x, gamma(0)); }

AugSequence cardinal(const AugSSet& x) {
  std::vector<Scalar> v;
  for (int n = -1; n <= x.top(); ++n) v.emplace_back(x.size(n));
  return AugSequence(std::move(v));
}

}  // namespace augsimp
