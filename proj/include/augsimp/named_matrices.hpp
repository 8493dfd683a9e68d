#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augsimp/matrix.hpp"

namespace augsimp {

// Each accessor returns a shared handle, so the entry cache is process wide.
const AugMatrix& bin();
const AugMatrix& bin_inv();
const AugMatrix& breve_cil();
const AugMatrix& cil();
const AugMatrix& cil_partial();
const AugMatrix& breve_cil0();
const AugMatrix& cil0();
const AugMatrix& cil0_partial();
const AugMatrix& breve_cil2();
const AugMatrix& cil2();
const AugMatrix& cil2_partial();
const AugMatrix& cad_plus();
const AugMatrix& breve_cad_plus();
const AugMatrix& cad();

// Lookup by CLI name ("bin", "bin-inv", "breve-cil", ..., "cad+", "breve-cad+", "cad").
std::optional<AugMatrix> named_matrix(std::string_view name);
const std::vector<std::string>& named_matrix_names();

}  // namespace augsimp
