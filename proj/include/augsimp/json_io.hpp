#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "augsimp/kernels.hpp"
#include "augsimp/sequence.hpp"
#include "augsimp/sset.hpp"

namespace augsimp {

// {"kind":"augsset","dim":2,"levels":[{"n":-1,"size":1},{"n":0,"size":3,"faces":[[0,0,0]]},...]}
std::string augsset_to_json(const AugSSet& x);
AugSSet augsset_from_json(std::string_view text);

// {"kind":"seq","start":-1,"entries":["1","6","6"],"tail":"zero"}
std::string sequence_to_json(const AugSequence& a);
AugSequence sequence_from_json(std::string_view text);

// {"kind":"matwin","name":"cad+","rows":[-1,6],"cols":[-1,7],"data":[[...]]}
std::string window_to_json(const kernels::MatrixWindow& w);

// Right-aligned table with -1-first row and column headers.
std::string window_to_text(const kernels::MatrixWindow& w);

struct SubcomplexSpec {
  int n;
  std::vector<std::vector<int>> generators;
};

// {"kind":"subcomplex","n":5,"generators":[[0,1],[1,2]]}
SubcomplexSpec subcomplex_spec_from_json(std::string_view text);

}  // namespace augsimp
