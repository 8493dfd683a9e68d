#pragma once

#include <vector>

#include "augsimp/cosimplicial.hpp"
#include "augsimp/sset.hpp"

namespace augsimp {

// X ▷̃ Z: the colimit over the simplices of X of the levels Z.at(dim x), glued
// along cofaces with union-find. Throws NonRegular.
AugSSet extend(const AugSSet& x, const CoSSObject& z);

AugSSet cylinder(const AugSSet& x);
AugSSet cylinder0(const AugSSet& x);
AugSSet cylinder2(const AugSSet& x);
AugSSet subdivision(const AugSSet& x);

// Pairs (σ, τ) of the chosen kind over Γ₊[ambient] whose union is the vertex
// set of some simplex of X. Throws NotASubcomplex when X carries no embedding.
AugSSet direct_cil_subcomplex(const AugSSet& x, CilKind kind);

// Chains of nonempty vertex sets of simplices of X.
AugSSet direct_sd_subcomplex(const AugSSet& x);

// Simplices of Z.at(n) outside every coface image, counted per level.
AugSequence interior_count(const CoSSObject& z, Nat1 n);

struct ConeSdReport {
  bool pass = false;
  AugSequence left;   // |Con_l(Sd(∂Γ₊[n]))|
  AugSequence right;  // |Sd(Γ₊[n])|
  std::vector<bool> level_match;  // from level -1
  ValidationReport left_valid;
  ValidationReport right_valid;
};

ConeSdReport cone_sd_check(Nat1 n);

}  // namespace augsimp
