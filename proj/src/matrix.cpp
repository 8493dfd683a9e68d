#include "augsimp/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <unordered_map>

#include "augsimp/errors.hpp"
#include "augsimp/named_matrices.hpp"

namespace augsimp {

struct AugMatrix::Impl {
  using SelfFn = std::function<Scalar(const Impl&, int, int)>;

  std::string name;
  SelfFn fn;
  Support support;
  MatrixFlags flags;
  mutable std::shared_mutex mutex;
  mutable std::unordered_map<std::uint64_t, Scalar> cache;

  static std::uint64_t key(int i, int j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i + 1)) << 32) |
           static_cast<std::uint32_t>(j + 1);
  }

  Scalar get(int i, int j) const {
    if (i < -1 || j < -1) return 0;
    if (!support.row(i).contains(j) || !support.col(j).contains(i)) return 0;
    const auto k = key(i, j);
    {
      std::shared_lock lock(mutex);
      auto it = cache.find(k);
      if (it != cache.end()) return it->second;
    }
    Scalar v = fn(*this, i, j);
    std::unique_lock lock(mutex);
    cache.emplace(k, v);
    return v;
  }
};

namespace {

std::shared_ptr<AugMatrix::Impl> make_impl(std::string name, AugMatrix::Impl::SelfFn fn, Support support,
                                           MatrixFlags flags) {
  auto impl = std::make_shared<AugMatrix::Impl>();
  impl->name = std::move(name);
  impl->fn = std::move(fn);
  impl->support = std::move(support);
  impl->flags = flags;
  return impl;
}

}  // namespace

AugMatrix::AugMatrix(std::string name, EntryFn entry, Support support, MatrixFlags flags)
    : impl_(make_impl(
          std::move(name), [entry = std::move(entry)](const Impl&, int i, int j) { return entry(i, j); },
          std::move(support), flags)) {}

Scalar AugMatrix::operator()(int i, int j) const { return impl_->get(i, j); }

Scalar AugMatrix::raw(int i, int j) const { return impl_->fn(*impl_, i, j); }

Extent AugMatrix::row_support(int i) const { return impl_->support.row(i); }
Extent AugMatrix::col_support(int j) const { return impl_->support.col(j); }
const MatrixFlags& AugMatrix::flags() const { return impl_->flags; }
const std::string& AugMatrix::name() const { return impl_->name; }

AugSequence AugMatrix::row(int i) const {
  Extent r = row_support(i);
  AugMatrix self = *this;
  if (r.bounded()) return AugSequence::generated([self, i](int j) { return self(i, j); }, r.hi);
  return AugSequence::generated([self, i](int j) { return self(i, j); });
}

AugMatrix AugMatrix::renamed(std::string name) const {
  auto impl = impl_;
  return AugMatrix(
      std::move(name), [impl](int i, int j) { return impl->get(i, j); }, impl_->support, impl_->flags);
}

AugMatrix identity_matrix() {
  MatrixFlags f;
  f.lower_triangular = f.upper_triangular = true;
  f.band = 0;
  f.row_finite = f.column_finite = true;
  return AugMatrix(
      "identity", [](int i, int j) { return Scalar(i == j ? 1 : 0); },
      {[](int i) { return Extent{i, i}; }, [](int j) { return Extent{j, j}; }}, f);
}

AugMatrix unit_matrix(Nat1 k, Nat1 l) {
  MatrixFlags f;
  f.lower_triangular = l <= k;
  f.upper_triangular = l >= k;
  f.band = l - k;
  f.row_finite = f.column_finite = true;
  int r = k, c = l;
  return AugMatrix(
      "unit", [r, c](int i, int j) { return Scalar(i == r && j == c ? 1 : 0); },
      {[c](int) { return Extent{c, c}; }, [r](int) { return Extent{r, r}; }}, f);
}

AugMatrix shifting_matrix(const AugSequence& b) {
  MatrixFlags f;
  f.upper_triangular = true;
  f.column_finite = true;
  Support s;
  if (b.is_finite()) {
    auto d = b.dim();
    if (!d) {
      // The zero sequence; keep a trivially monotone envelope.
      s = {[](int i) { return Extent{i, i}; }, [](int j) { return Extent{j, j}; }};
      f.band = 0;
    } else {
      int top = *d;
      s = {[top](int i) { return Extent{i, i + 1 + top}; },
           [top](int j) { return Extent{std::max(-1, j - 1 - top), j}; }};
      f.band = top + 1;
    }
    f.row_finite = true;
    f.lower_triangular = f.band == 0;
  } else {
    s = {[](int i) { return Extent{i, kUnbounded}; }, [](int j) { return Extent{-1, j}; }};
  }
  return AugMatrix(
      "R", [b](int i, int j) { return b[j - i - 1]; }, std::move(s), f);
}

AugMatrix matmul(const AugMatrix& a, const AugMatrix& b) {
  if (!a.flags().row_finite && !b.flags().column_finite)
    throw DivergentSum("product " + a.name() + "·" + b.name() + " has infinite inner sums");
  MatrixFlags f;
  f.lower_triangular = a.flags().lower_triangular && b.flags().lower_triangular;
  f.upper_triangular = a.flags().upper_triangular && b.flags().upper_triangular;
  if (a.flags().band && b.flags().band) f.band = *a.flags().band + *b.flags().band;
  f.row_finite = a.flags().row_finite && b.flags().row_finite;
  f.column_finite = a.flags().column_finite && b.flags().column_finite;
  Support s{[a, b](int i) {
              Extent ra = a.row_support(i);
              int lo = std::max(-1, b.row_support(ra.lo).lo);
              int hi = ra.bounded() ? b.row_support(ra.hi).hi : kUnbounded;
              return Extent{lo, std::max(lo, hi)};
            },
            [a, b](int j) {
              Extent cb = b.col_support(j);
              int lo = std::max(-1, a.col_support(cb.lo).lo);
              int hi = cb.bounded() ? a.col_support(cb.hi).hi : kUnbounded;
              return Extent{lo, std::max(lo, hi)};
            }};
  return AugMatrix(
      a.name() + "·" + b.name(),
      [a, b](int i, int j) {
        Extent ra = a.row_support(i), cb = b.col_support(j);
        int lo = std::max(ra.lo, cb.lo);
        int hi = std::min(ra.hi, cb.hi);
        if (hi == kUnbounded) throw DivergentSum("unbounded inner sum in " + a.name() + "·" + b.name());
        Scalar sum = 0;
        for (int k = lo; k <= hi; ++k) {
          Scalar x = a(i, k);
          if (x != 0) sum += x * b(k, j);
        }
        return sum;
      },
      std::move(s), f);
}

AugMatrix invert_triangular(const AugMatrix& a) {
  const bool lower = a.flags().lower_triangular;
  const bool upper = a.flags().upper_triangular;
  if (!lower && !upper) throw Error("invert_triangular: " + a.name() + " is not triangular");
  for (int i = -1; i <= 8; ++i)
    if (a(i, i) == 0) throw SingularDiagonal("zero diagonal entry at " + std::to_string(i) + " of " + a.name());

  auto pivot = [a](int i) {
    Scalar d = a(i, i);
    if (d == 0) throw SingularDiagonal("zero diagonal entry at " + std::to_string(i) + " of " + a.name());
    return d;
  };
  MatrixFlags f;
  Support s;
  AugMatrix::Impl::SelfFn fn;
  if (lower && upper) {
    f.lower_triangular = f.upper_triangular = true;
    f.band = 0;
    f.row_finite = f.column_finite = true;
    s = {[](int i) { return Extent{i, i}; }, [](int j) { return Extent{j, j}; }};
    fn = [pivot](const AugMatrix::Impl&, int i, int j) { return i == j ? Scalar(1 / pivot(i)) : Scalar(0); };
  } else if (lower) {
    f.lower_triangular = true;
    f.band = 0;
    f.row_finite = true;
    s = {[](int i) { return Extent{-1, i}; }, [](int j) { return Extent{j, kUnbounded}; }};
    fn = [a, pivot](const AugMatrix::Impl& self, int i, int j) -> Scalar {
      if (j > i) return 0;
      if (i == j) return 1 / pivot(i);
      Scalar sum = 0;
      for (int k = std::max(j, a.row_support(i).lo); k < i; ++k) {
        Scalar x = a(i, k);
        if (x != 0) sum += x * self.get(k, j);
      }
      return -sum / pivot(i);
    };
  } else {
    f.upper_triangular = true;
    f.column_finite = true;
    s = {[](int i) { return Extent{i, kUnbounded}; }, [](int j) { return Extent{-1, j}; }};
    fn = [a, pivot](const AugMatrix::Impl& self, int i, int j) -> Scalar {
      if (j < i) return 0;
      if (i == j) return 1 / pivot(i);
      Scalar sum = 0;
      int hi = std::min(j, a.row_support(i).hi);
      for (int k = i + 1; k <= hi; ++k) {
        Scalar x = a(i, k);
        if (x != 0) sum += x * self.get(k, j);
      }
      return -sum / pivot(i);
    };
  }
  AugMatrix out = identity_matrix();
  out.impl_ = make_impl(a.name() + "⁻¹", std::move(fn), std::move(s), f);
  return out;
}

AugMatrix iterate_operator(const AugMatrix& a, int k) {
  if (k == 0) return identity_matrix();
  AugMatrix base = k > 0 ? a : invert_triangular(a);
  AugMatrix out = base;
  for (int step = 1; step < std::abs(k); ++step) out = matmul(out, base);
  return out.renamed(a.name() + "^" + std::to_string(k));
}

AugSequence dot(const AugSequence& a, const AugMatrix& b) {
  if (a.is_finite()) {
    auto d = a.dim();
    if (!d) return AugSequence();
    int top = *d;
    auto entry = [a, b, top](int j) {
      Extent c = b.col_support(j);
      Scalar sum = 0;
      for (int k = std::max(-1, c.lo); k <= std::min(top, c.hi); ++k) {
        const Scalar x = a[k];
        if (x != 0) sum += x * b(k, j);
      }
      return sum;
    };
    int hi = -1;
    for (int k = -1; k <= top; ++k) {
      Extent r = b.row_support(k);
      if (!r.bounded()) return AugSequence::generated(entry);
      hi = std::max(hi, r.hi);
    }
    return AugSequence::generated(entry, hi);
  }
  if (!b.flags().column_finite)
    throw DivergentSum("infinite sequence times " + b.name() + ", which is not column finite");
  return AugSequence::generated([a, b](int j) {
    Extent c = b.col_support(j);
    Scalar sum = 0;
    for (int k = c.lo; k <= c.hi; ++k) sum += a[k] * b(k, j);
    return sum;
  });
}

AugSequence triangle_action(const AugSequence& a, const AugMatrix& b) {
  if (a.is_finite()) return dot(dot(a, bin_inv()), b);
  AugMatrix m = matmul(bin_inv(), b);
  if (!m.flags().column_finite)
    throw DivergentSum("bin⁻¹·" + b.name() + " is not known to be column finite");
  return dot(a, m);
}

AugSequence sd_seq(const AugSequence& a) {
  if (!a.is_finite()) throw InfiniteInput("sd of a sequence with unknown tail");
  return dot(a, breve_cad_plus());
}

std::optional<std::string> audit_structure(const AugMatrix& m, int window, int samples, std::uint64_t seed) {
  auto cell = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  const MatrixFlags& f = m.flags();
  for (int i = -1; i <= window; ++i) {
    Extent r = m.row_support(i), c = m.col_support(i);
    if (r.lo < -1 || r.lo > r.hi) return m.name() + ": malformed row envelope at " + std::to_string(i);
    if (c.lo < -1 || c.lo > c.hi) return m.name() + ": malformed column envelope at " + std::to_string(i);
    if (f.row_finite && !r.bounded()) return m.name() + ": row " + std::to_string(i) + " unbounded";
    if (f.column_finite && !c.bounded()) return m.name() + ": column " + std::to_string(i) + " unbounded";
    if (i < window) {
      Extent r2 = m.row_support(i + 1), c2 = m.col_support(i + 1);
      if (r2.lo < r.lo || r2.hi < r.hi) return m.name() + ": row envelope decreases at " + std::to_string(i);
      if (c2.lo < c.lo || c2.hi < c.hi) return m.name() + ": column envelope decreases at " + std::to_string(i);
    }
  }
  auto check = [&](int i, int j) -> std::optional<std::string> {
    Scalar v = m.raw(i, j);
    if (v == 0) return std::nullopt;
    if (!m.row_support(i).contains(j) || !m.col_support(j).contains(i))
      return m.name() + ": nonzero outside envelope at " + cell(i, j);
    if (f.lower_triangular && j > i) return m.name() + ": not lower triangular at " + cell(i, j);
    if (f.upper_triangular && j < i) return m.name() + ": not upper triangular at " + cell(i, j);
    if (f.band && j - i > *f.band) return m.name() + ": band exceeded at " + cell(i, j);
    return std::nullopt;
  };
  if (samples == 0) {
    for (int i = -1; i <= window; ++i)
      for (int j = -1; j <= window; ++j)
        if (auto bad = check(i, j)) return bad;
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-1, window);
  for (int s = 0; s < samples; ++s)
    if (auto bad = check(pick(rng), pick(rng))) return bad;
  return std::nullopt;
}

}  // namespace augsimp
