#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace augsimp {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
  bool waived = false;
};

// Checks sorted by id. Every complex a suite builds is passed through
// validate() and tallied here.
struct SuiteReport {
  std::vector<CheckResult> checks;
  long complexes_validated = 0;
  long complexes_invalid = 0;

  bool passed() const;
  int failures() const;
  int waivers() const;
  SuiteReport& operator+=(const SuiteReport& other);
};

// Reference windows cell for cell, plus one check per waived cell asserting
// the formula value.
SuiteReport table_suite();

// Cylinders of the six-cycle, computed by extend, by the direct pair
// construction, by a·breve and by the triangle action.
SuiteReport hexahedron_suite();

// |extend(X, Z)| = |X| ▷̃ |Z| over random subcomplexes of Γ₊[0..max_n].
SuiteReport commutation_suite(int max_n, std::size_t count, std::uint64_t seed);

// |(X ⊞ Y) ▷̃ Z| = |X ▷̃ Z| ⊞ |Y ▷̃ Z| on random pairs inside Γ₊[0..max_n] for
// the monoidal objects (yoneda, cil2). For cil, cil0 and sd the suite checks
// that Z(Γ₊[1]) differs from Z(Γ₊[0]) ⊞ Z(Γ₊[0]), so monoidality of the action
// is not expected.
SuiteReport monoidal_suite(int max_n, std::size_t count, std::uint64_t seed);

// Join and cone cardinals over gammas, boundaries and random subcomplexes.
SuiteReport join_cone_suite(std::size_t count, std::uint64_t seed);

// join(∂Γ₊[2], ∂Γ₊[2]) against Cil₂(∂Γ₊[2]).
SuiteReport dup_suite();

// Direct pair and chain constructions against extend.
SuiteReport oracle_suite(int max_n, std::size_t count, std::uint64_t seed);

// Interior counts against the breve matrices and the binomial reconstruction
// of every level.
SuiteReport reconstruction_suite(int max_n);

// Subset chains against (p+1)! S(n+1, p+1) and bin·breve-cad⁺ = cad⁺.
SuiteReport chain_suite(int max_n);

SuiteReport inverse_suite();

// Cil₀ ⊆ Cil ⊆ Cil₂ on pairs, and pair counts against the object levels.
SuiteReport nesting_suite(int max_n);

SuiteReport cone_sd_suite(int max_n);

// "pentagonal", "A006331", "A212415", "matchstick", "A210440", "hexagonal",
// "A002492"; nullopt for an unknown name.
std::optional<SuiteReport> oeis_suite(std::string_view check, int count);
const std::vector<std::string>& oeis_check_names();

struct SuiteOptions {
  std::optional<int> n;
  std::optional<std::size_t> count;
  std::uint64_t seed = 1;
};

// "tables", "commutation", "oracles", "nesting", "cone-sd", "all"; nullopt
// for an unknown name.
std::optional<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

}  // namespace augsimp
