#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "augsimp/matrix.hpp"
#include "augsimp/sset.hpp"

namespace augsimp {

// A co-semi-simplicial object given by its levels at(n) and the coface maps
// coface(n, i): at(n-1) -> at(n), built lazily and cached.
class CoSSObject {
 public:
  virtual ~CoSSObject() = default;

  const AugSSet& at(Nat1 n) const;
  // n >= 0, 0 <= i <= n.
  const SSetMap& coface(int n, int i) const;

  bool regular() const { return regular_; }
  const std::string& name() const { return name_; }

 protected:
  CoSSObject(std::string name, bool regular) : name_(std::move(name)), regular_(regular) {}

  virtual AugSSet build_level(int n) const = 0;
  virtual SSetMap build_coface(int n, int i) const = 0;

  std::shared_ptr<const AugSSet> level_ptr(int n) const;

 private:
  std::string name_;
  bool regular_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const AugSSet>> levels_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<SSetMap>> cofaces_;
};

using CoSSPtr = std::shared_ptr<const CoSSObject>;

CoSSPtr cosimp_yoneda();
CoSSPtr cosimp_cil();
CoSSPtr cosimp_cil0();
CoSSPtr cosimp_cil2();
CoSSPtr cosimp_sd();

// "yoneda", "cil", "cil0", "cil2", "sd"; nullptr when unknown.
CoSSPtr cosimp_by_name(std::string_view name);

// Matrix with entry (n, m) = |Z.at(n)_m|.
AugMatrix cardinal_matrix(const CoSSPtr& z);

enum class CilKind { standard, zero, two };

// σ ≼ τ, σ ≺ τ, or no condition.
bool admissible(CilKind kind, VertexSet sigma, VertexSet tau);

// Pushes a vertex set forward along the inclusion [n-1] -> [n] that skips i.
VertexSet push_forward(VertexSet s, int i);

// Checks the cosimplicial identities, map validity and, for regular objects,
// injectivity for all cofaces up to level n.
ValidationReport verify_cosimplicial(const CoSSObject& z, int n);

}  // namespace augsimp
