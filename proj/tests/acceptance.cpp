#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "augsimp/verify.hpp"

using namespace augsimp;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<SuiteReport()> run;
};

SuiteReport oeis_all() {
  SuiteReport r;
  for (const auto& name : oeis_check_names()) r += *oeis_suite(name, 50);
  return r;
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return c.id + ": " + c.detail;
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", table_suite},
      {2, "hexahedron cylinders", hexahedron_suite},
      {3, "commutation on 200 subcomplexes, n in 0..5", [] { return commutation_suite(5, 200, 1); }},
      {4, "direct constructions on 100 subcomplexes, n <= 4", [] { return oracle_suite(4, 100, 1); }},
      {5, "chain counts and bin times breve-cad+, n <= 8", [] { return chain_suite(8); }},
      {6, "inverse pairs", inverse_suite},
      {7, "closed forms up to n = 50", oeis_all},
      {8, "join and cone laws", [] { return join_cone_suite(40, 1); }},
      {9, "cone of subdivision, n in 0..5", [] { return cone_sd_suite(5); }},
      {10, "join square against cylinder of the boundary", dup_suite},
  };

  SuiteReport total;
  int failed = 0;
  for (const auto& c : criteria) {
    const SuiteReport r = c.run();
    total += r;
    const bool ok = r.passed();
    failed += !ok;
    std::printf("%s %2d %s (%zu checks, %d waivers)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                r.checks.size(), r.waivers(), ok ? "" : ": ", first_failure(r).c_str());
  }
  const bool closed = total.complexes_invalid == 0 && total.complexes_validated > 0;
  failed += !closed;
  std::printf("%s 11 validation closure (%ld complexes validated, %ld invalid)\n", closed ? "PASS" : "FAIL",
              total.complexes_validated, total.complexes_invalid);
  return failed == 0 ? 0 : 1;
}
