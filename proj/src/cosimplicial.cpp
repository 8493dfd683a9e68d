#include "augsimp/cosimplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "augsimp/errors.hpp"

namespace augsimp {

const AugSSet& CoSSObject::at(Nat1 n) const { return *level_ptr(n); }

std::shared_ptr<const AugSSet> CoSSObject::level_ptr(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;
  }
  auto built = std::make_shared<const AugSSet>(build_level(n));
  std::lock_guard lock(mutex_);
  return levels_.emplace(n, std::move(built)).first->second;
}

const SSetMap& CoSSObject::coface(int n, int i) const {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range("coface index out of range");
  {
    std::lock_guard lock(mutex_);
    auto it = cofaces_.find({n, i});
    if (it != cofaces_.end()) return *it->second;
  }
  auto built = std::make_unique<SSetMap>(build_coface(n, i));
  std::lock_guard lock(mutex_);
  return *cofaces_.emplace(std::make_pair(n, i), std::move(built)).first->second;
}

VertexSet push_forward(VertexSet s, int i) {
  const VertexSet low = s & ((VertexSet{1} << i) - 1);
  const VertexSet high = (s >> i) << (i + 1);
  return low | high;
}

bool admissible(CilKind kind, VertexSet sigma, VertexSet tau) {
  if (kind == CilKind::two || sigma == 0 || tau == 0) return true;
  const int max_sigma = 31 - std::countl_zero(sigma);
  const int min_tau = std::countr_zero(tau);
  if (kind == CilKind::standard) return std::popcount(sigma & tau) <= 1 && max_sigma <= min_tau;
  return (sigma & tau) == 0 && max_sigma < min_tau;
}

namespace {

using Key = std::vector<VertexSet>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = k.size();
    for (VertexSet v : k) h = h * 0x9e3779b97f4a7c15ULL + v;
    return h;
  }
};

VertexSet drop_vertex(VertexSet s, int idx) {
  int seen = 0;
  for (int v = 0; v < 32; ++v)
    if (s & (VertexSet{1} << v)) {
      if (seen++ == idx) return s & ~(VertexSet{1} << v);
    }
  throw std::logic_error("drop_vertex: index past the last vertex");
}

struct KeyTable {
  std::vector<std::vector<Key>> by_level;                          // [m + 1]
  std::vector<std::unordered_map<Key, int, KeyHash>> index;  // [m + 1]
};

// Co-semi-simplicial objects whose simplices are described by keys built from
// vertex sets; cofaces push every vertex set forward.
class KeyedCoSS : public CoSSObject {
 public:
  using CoSSObject::CoSSObject;

 protected:
  virtual std::vector<Key> enumerate(int n) const = 0;
  virtual int level_of(const Key& k) const = 0;
  virtual Key face(const Key& k, int i) const = 0;
  virtual bool before(const Key& a, const Key& b) const { return a < b; }

  AugSSet build_level(int n) const override {
    const KeyTable& t = table(n);
    std::vector<LevelData> levels(t.by_level.size());
    for (std::size_t k = 0; k < t.by_level.size(); ++k) {
      const int m = static_cast<int>(k) - 1;
      levels[k].size = static_cast<int>(t.by_level[k].size());
      if (m < 0) continue;
      levels[k].faces.assign(m + 1, std::vector<int>(t.by_level[k].size()));
      for (std::size_t s = 0; s < t.by_level[k].size(); ++s)
        for (int i = 0; i <= m; ++i) levels[k].faces[i][s] = t.index[k - 1].at(face(t.by_level[k][s], i));
    }
    return AugSSet(std::move(levels));
  }

  SSetMap build_coface(int n, int i) const override {
    const KeyTable& src = table(n - 1);
    const KeyTable& dst = table(n);
    SSetMap f;
    f.source = level_ptr(n - 1);
    f.target = level_ptr(n);
    f.components.resize(f.source->top() + 2);
    for (std::size_t k = 0; k < f.components.size(); ++k) {
      auto& c = f.components[k];
      for (const Key& key : src.by_level[k]) {
        Key pushed = key;
        for (auto& v : pushed) v = push_forward(v, i);
        c.push_back(dst.index[k].at(pushed));
      }
    }
    return f;
  }

 private:
  const KeyTable& table(int n) const {
    {
      std::lock_guard lock(table_mutex_);
      auto it = tables_.find(n);
      if (it != tables_.end()) return *it->second;
    }
    auto t = std::make_unique<KeyTable>();
    for (Key& k : enumerate(n)) {
      const int m = level_of(k);
      if (static_cast<int>(t->by_level.size()) < m + 2) t->by_level.resize(m + 2);
      t->by_level[m + 1].push_back(std::move(k));
    }
    if (t->by_level.empty()) t->by_level.resize(1);
    t->index.resize(t->by_level.size());
    for (std::size_t k = 0; k < t->by_level.size(); ++k) {
      auto& level = t->by_level[k];
      std::sort(level.begin(), level.end(), [this](const Key& a, const Key& b) { return before(a, b); });
      for (std::size_t s = 0; s < level.size(); ++s) t->index[k].emplace(level[s], static_cast<int>(s));
    }
    std::lock_guard lock(table_mutex_);
    return *tables_.emplace(n, std::move(t)).first->second;
  }

  mutable std::mutex table_mutex_;
  mutable std::map<int, std::unique_ptr<KeyTable>> tables_;
};

VertexSet full_set(int n) { return (VertexSet{1} << (n + 1)) - 1; }

class Yoneda final : public KeyedCoSS {
 public:
  Yoneda() : KeyedCoSS("yoneda", true) {}

 protected:
  std::vector<Key> enumerate(int n) const override {
    std::vector<Key> out;
    for (VertexSet s = 0; s <= full_set(n); ++s) out.push_back({s});
    return out;
  }
  int level_of(const Key& k) const override { return std::popcount(k[0]) - 1; }
  Key face(const Key& k, int i) const override { return {drop_vertex(k[0], i)}; }
  bool before(const Key& a, const Key& b) const override { return vertices_of(a[0]) < vertices_of(b[0]); }
};

class Cylinder final : public KeyedCoSS {
 public:
  Cylinder(std::string name, CilKind kind) : KeyedCoSS(std::move(name), true), kind_(kind) {}

 protected:
  std::vector<Key> enumerate(int n) const override {
    std::vector<Key> out;
    const VertexSet full = full_set(n);
    for (VertexSet sigma = 0; sigma <= full; ++sigma)
      for (VertexSet tau = 0; tau <= full; ++tau)
        if (admissible(kind_, sigma, tau)) out.push_back({sigma, tau});
    return out;
  }
  int level_of(const Key& k) const override { return std::popcount(k[0]) + std::popcount(k[1]) - 1; }
  Key face(const Key& k, int i) const override {
    const int p = std::popcount(k[0]) - 1;
    if (i <= p) return {drop_vertex(k[0], i), k[1]};
    return {k[0], drop_vertex(k[1], i - p - 1)};
  }

 private:
  CilKind kind_;
};

class Subdivision final : public KeyedCoSS {
 public:
  Subdivision() : KeyedCoSS("sd", true) {}

 protected:
  std::vector<Key> enumerate(int n) const override {
    std::vector<Key> out{Key{}};
    const VertexSet full = full_set(n);
    Key chain;
    std::function<void()> extend = [&] {
      out.push_back(chain);
      const VertexSet last = chain.back();
      for (VertexSet sup = (last + 1) | last; sup <= full; sup = (sup + 1) | last) {
        chain.push_back(sup);
        extend();
        chain.pop_back();
      }
    };
    for (VertexSet s = 1; s <= full; ++s) {
      chain = {s};
      extend();
    }
    return out;
  }
  int level_of(const Key& k) const override { return static_cast<int>(k.size()) - 1; }
  Key face(const Key& k, int i) const override {
    Key out = k;
    out.erase(out.begin() + i);
    return out;
  }
};

}  // namespace

CoSSPtr cosimp_yoneda() {
  static const CoSSPtr z = std::make_shared<Yoneda>();
  return z;
}

CoSSPtr cosimp_cil() {
  static const CoSSPtr z = std::make_shared<Cylinder>("cil", CilKind::standard);
  return z;
}

CoSSPtr cosimp_cil0() {
  static const CoSSPtr z = std::make_shared<Cylinder>("cil0", CilKind::zero);
  return z;
}

CoSSPtr cosimp_cil2() {
  static const CoSSPtr z = std::make_shared<Cylinder>("cil2", CilKind::two);
  return z;
}

CoSSPtr cosimp_sd() {
  static const CoSSPtr z = std::make_shared<Subdivision>();
  return z;
}

CoSSPtr cosimp_by_name(std::string_view name) {
  if (name == "yoneda") return cosimp_yoneda();
  if (name == "cil") return cosimp_cil();
  if (name == "cil0") return cosimp_cil0();
  if (name == "cil2") return cosimp_cil2();
  if (name == "sd") return cosimp_sd();
  return nullptr;
}

AugMatrix cardinal_matrix(const CoSSPtr& z) {
  MatrixFlags f;
  f.row_finite = true;
  return AugMatrix(
      "|" + z->name() + "|", [z](int n, int m) { return Scalar(z->at(n).size(m)); },
      {[z](int n) {
         int hi = -1;
         for (int k = -1; k <= n; ++k) hi = std::max(hi, z->at(k).top());
         return Extent{-1, hi};
       },
       [](int) { return Extent{-1, kUnbounded}; }},
      f);
}

ValidationReport verify_cosimplicial(const CoSSObject& z, int n) {
  auto fail = [&](std::string msg) { return ValidationReport{false, z.name() + ": " + msg}; };
  for (int k = -1; k <= n; ++k)
    if (auto r = validate(z.at(k)); !r) return fail("level " + std::to_string(k) + ": " + r.message);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i) {
      const SSetMap& f = z.coface(k, i);
      if (auto r = validate_map(f); !r) return fail("coface(" + std::to_string(k) + "," + std::to_string(i) + "): " + r.message);
      if (z.regular() && !is_injective(f))
        return fail("coface(" + std::to_string(k) + "," + std::to_string(i) + ") is not injective");
    }
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i) {
        const SSetMap& a1 = z.coface(k - 1, i);
        const SSetMap& a2 = z.coface(k, j);
        const SSetMap& b1 = z.coface(k - 1, j - 1);
        const SSetMap& b2 = z.coface(k, i);
        const AugSSet& src = z.at(k - 2);
        for (int m = -1; m <= src.top(); ++m)
          for (int s = 0; s < src.size(m); ++s)
            if (a2(m, a1(m, s)) != b2(m, b1(m, s)))
              return fail("cosimplicial identity fails for i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                          " at n=" + std::to_string(k));
      }
  return {};
}

}  // namespace augsimp
