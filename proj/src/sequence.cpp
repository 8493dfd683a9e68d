#include "augsimp/sequence.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "augsimp/combinat.hpp"
#include "augsimp/errors.hpp"

namespace augsimp {

struct AugSequence::Lazy {
  Generator gen;
  mutable std::shared_mutex mutex;
  mutable std::unordered_map<int, Scalar> cache;

  Scalar get(int i) const {
    {
      std::shared_lock lock(mutex);
      auto it = cache.find(i);
      if (it != cache.end()) return it->second;
    }
    Scalar v = gen(i);
    std::unique_lock lock(mutex);
    cache.emplace(i, v);
    return v;
  }
};

namespace {

void trim(std::vector<Scalar>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

AugSequence::AugSequence() = default;

AugSequence::AugSequence(std::initializer_list<long> values) {
  finite_.reserve(values.size());
  for (long v : values) finite_.emplace_back(v);
  trim(finite_);
}

AugSequence::AugSequence(std::vector<Scalar> values) : finite_(std::move(values)) { trim(finite_); }

AugSequence AugSequence::unit(Nat1 k) {
  std::vector<Scalar> v(k + 2);
  v[k + 1] = 1;
  return AugSequence(std::move(v));
}

AugSequence AugSequence::generated(Generator gen, std::optional<int> last_nonzero) {
  if (last_nonzero) {
    std::vector<Scalar> v;
    for (int i = -1; i <= *last_nonzero; ++i) v.push_back(gen(i));
    return AugSequence(std::move(v));
  }
  AugSequence out;
  out.lazy_ = std::make_shared<Lazy>();
  out.lazy_->gen = std::move(gen);
  return out;
}

Scalar AugSequence::operator[](int i) const {
  if (i < -1) return 0;
  if (lazy_) return lazy_->get(i);
  std::size_t k = static_cast<std::size_t>(i + 1);
  return k < finite_.size() ? finite_[k] : Scalar(0);
}

std::optional<int> AugSequence::dim() const {
  if (lazy_) throw UnknownTail("dimension of a sequence with unknown tail");
  if (finite_.empty()) return std::nullopt;
  return static_cast<int>(finite_.size()) - 2;
}

const std::vector<Scalar>& AugSequence::entries() const {
  if (lazy_) throw UnknownTail("entries of a sequence with unknown tail");
  return finite_;
}

std::vector<Scalar> AugSequence::window(int lo, int hi) const {
  std::vector<Scalar> out;
  for (int i = lo; i <= hi; ++i) out.push_back((*this)[i]);
  return out;
}

std::string AugSequence::str(int lazy_preview) const {
  std::string s = "(";
  if (lazy_) {
    for (int i = -1; i < lazy_preview - 1; ++i) s += to_string((*this)[i]) + ",";
    return s + "...?)";
  }
  for (const auto& v : finite_) s += to_string(v) + ",";
  return s + "0,...)";
}

bool operator==(const AugSequence& a, const AugSequence& b) {
  if (!a.is_finite() || !b.is_finite())
    throw UnknownTail("cannot decide equality of sequences with unknown tails");
  return a.entries() == b.entries();
}

namespace {

AugSequence combine(const AugSequence& a, const AugSequence& b, int sign) {
  if (a.is_finite() && b.is_finite()) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    std::vector<Scalar> v(std::max(x.size(), y.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
      Scalar l = k < x.size() ? x[k] : Scalar(0);
      Scalar r = k < y.size() ? y[k] : Scalar(0);
      v[k] = sign > 0 ? Scalar(l + r) : Scalar(l - r);
    }
    return AugSequence(std::move(v));
  }
  return AugSequence::generated([a, b, sign](int i) -> Scalar {
    return sign > 0 ? Scalar(a[i] + b[i]) : Scalar(a[i] - b[i]);
  });
}

}  // namespace

AugSequence operator+(const AugSequence& a, const AugSequence& b) { return combine(a, b, 1); }
AugSequence operator-(const AugSequence& a, const AugSequence& b) { return combine(a, b, -1); }

AugSequence operator*(const Scalar& s, const AugSequence& a) {
  if (a.is_finite()) {
    std::vector<Scalar> v = a.entries();
    for (auto& x : v) x *= s;
    return AugSequence(std::move(v));
  }
  return AugSequence::generated([s, a](int i) -> Scalar { return s * a[i]; });
}

AugSequence seq_join(const AugSequence& a, const AugSequence& b) {
  if (!a.is_finite() && !b.is_finite()) throw BothInfinite("join of two sequences with unknown tails");
  if (a.is_finite() && b.is_finite()) {
    auto da = a.dim(), db = b.dim();
    if (!da || !db) return AugSequence();
    std::vector<Scalar> v(*da + *db + 3);
    for (int p = -1; p <= *da; ++p)
      for (int q = -1; q <= *db; ++q) v[p + q + 2] += a[p] * b[q];
    return AugSequence(std::move(v));
  }
  const AugSequence& fin = a.is_finite() ? a : b;
  const AugSequence& inf = a.is_finite() ? b : a;
  auto d = fin.dim();
  if (!d) return AugSequence();
  int top = *d;
  return AugSequence::generated([fin, inf, top](int m) -> Scalar {
    Scalar s = 0;
    for (int q = -1; q <= std::min(top, m); ++q) s += fin[q] * inf[m - 1 - q];
    return s;
  });
}

AugSequence seq_cone(const AugSequence& c) { return c + shift(c, -1); }

AugSequence shift(const AugSequence& b, int k) {
  if (b.is_finite()) {
    auto d = b.dim();
    if (!d || *d - k < -1) return AugSequence();
    std::vector<Scalar> v;
    for (int i = -1; i <= *d - k; ++i) v.push_back(b[i + k]);
    return AugSequence(std::move(v));
  }
  return AugSequence::generated([b, k](int i) -> Scalar { return b[i + k]; });
}

AugSequence gamma_seq(Nat1 n) {
  std::vector<Scalar> v;
  for (int i = -1; i <= n; ++i) v.emplace_back(binomial(n + 1, i + 1));
  return AugSequence(std::move(v));
}

AugSequence cone_unit() { return AugSequence{1, 1}; }

}  // namespace augsimp
