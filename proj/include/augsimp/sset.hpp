#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augsimp/numeric.hpp"
#include "augsimp/sequence.hpp"

namespace augsimp {

using VertexSet = std::uint32_t;  // bit v set <=> vertex v present

// One level of an augmented semi-simplicial set. faces[i][s] is d_i(s); level
// -1 carries no faces.
struct LevelData {
  int size = 0;
  std::vector<std::vector<int>> faces;
};

struct SimplexRef {
  int level;
  int index;
};

// Vertex sets of every simplex when the complex sits inside Γ₊[ambient].
struct GammaEmbedding {
  int ambient = -1;
  std::vector<std::vector<VertexSet>> vertex_sets;  // [n + 1][s]
};

// Finite augmented semi-simplicial set with dense per-level ordinals.
class AugSSet {
 public:
  // The empty complex: every level, including -1, is empty.
  AugSSet();

  // levels[0] is level -1. Throws InvalidComplex when the face tables have the
  // wrong shape; ranges and identities are left to validate().
  explicit AugSSet(std::vector<LevelData> levels);

  int size(int n) const;
  // Highest stored level (levels above it are empty).
  int top() const { return static_cast<int>(sizes_.size()) - 2; }
  // nullopt is dimension -infinity.
  std::optional<int> dim() const;
  bool empty() const { return !dim().has_value(); }

  int face(int n, int i, int s) const { return faces_[n][i][s]; }
  std::span<const int> face_map(int n, int i) const { return faces_[n][i]; }

  std::string label(int n, int s) const;

  const std::optional<GammaEmbedding>& embedding() const { return embedding_; }
  AugSSet with_embedding(GammaEmbedding e) const;

  std::vector<LevelData> levels() const;

 private:
  std::vector<int> sizes_;                            // [n + 1]
  std::vector<std::vector<std::vector<int>>> faces_;  // [n][i][s], n >= 0
  std::optional<GammaEmbedding> embedding_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

ValidationReport validate(const AugSSet& x);

// components[n + 1][s] is the image of simplex s of level n.
struct SSetMap {
  std::shared_ptr<const AugSSet> source;
  std::shared_ptr<const AugSSet> target;
  std::vector<std::vector<int>> components;

  int operator()(int n, int s) const { return components[n + 1][s]; }
};

ValidationReport validate_map(const SSetMap& f);
bool is_injective(const SSetMap& f);

AugSSet gamma(Nat1 n);
AugSSet boundary(Nat1 n);

// Smallest face-closed part of Γ₊[n] containing the generators; throws
// VertexOutOfRange.
AugSSet subcomplex_of_gamma(Nat1 n, const std::vector<std::vector<int>>& generators);

// The six-vertex cycle.
AugSSet hexagon();

AugSSet join(const AugSSet& x, const AugSSet& y);
AugSSet cone_left(const AugSSet& x);
AugSSet cone_right(const AugSSet& x);

AugSequence cardinal(const AugSSet& x);

// Builds a complex from face-closed vertex sets inside Γ₊[ambient], ordered by
// level and then lexicographically by vertex list.
AugSSet complex_from_vertex_sets(int ambient, std::vector<VertexSet> sets);

std::vector<int> vertices_of(VertexSet s);

}  // namespace augsimp
