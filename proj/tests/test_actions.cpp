#include <bit>

#include "doctest.h"

#include "augsimp/corpus.hpp"
#include "augsimp/cosimplicial.hpp"
#include "augsimp/errors.hpp"
#include "augsimp/extend.hpp"
#include "augsimp/json_io.hpp"
#include "augsimp/named_matrices.hpp"

using namespace augsimp;

namespace {

int lowest(unsigned s) { return std::countr_zero(s); }
int highest(unsigned s) { return 31 - std::countl_zero(s); }

// Pair conditions written out directly: overlap at most one vertex with
// max σ <= min τ, or disjoint with max σ < min τ.
bool pair_ok(CilKind kind, unsigned s, unsigned t) {
  if (kind == CilKind::two || s == 0 || t == 0) return true;
  if (kind == CilKind::standard) return std::popcount(s & t) <= 1 && highest(s) <= lowest(t);
  return (s & t) == 0 && highest(s) < lowest(t);
}

AugSequence pair_count(CilKind kind, int n) {
  const unsigned all = (1u << (n + 1)) - 1;
  std::vector<Scalar> counts(2 * n + 4, 0);
  for (unsigned s = 0; s <= all; ++s)
    for (unsigned t = 0; t <= all; ++t)
      if (pair_ok(kind, s, t)) counts[std::popcount(s) + std::popcount(t)] += 1;
  return AugSequence(counts);
}

class Forgetful : public CoSSObject {
 public:
  Forgetful() : CoSSObject("forgetful", false) {}

 protected:
  AugSSet build_level(int n) const override { return gamma(n); }
  SSetMap build_coface(int n, int i) const override { return cosimp_yoneda()->coface(n, i); }
};

bool same_faces(const AugSSet& a, const AugSSet& b) {
  if (a.top() != b.top()) return false;
  for (int n = -1; n <= a.top(); ++n) {
    if (a.size(n) != b.size(n)) return false;
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < a.size(n); ++s)
        if (a.face(n, i, s) != b.face(n, i, s)) return false;
  }
  return true;
}

int index_of(int ambient, int n, VertexSet s) {
  const AugSSet g = gamma(ambient);
  const auto& sets = g.embedding()->vertex_sets[n + 1];
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k] == s) return static_cast<int>(k);
  return -1;
}

}  // namespace

TEST_CASE("admissible pairs") {
  CHECK(admissible(CilKind::standard, 0b001, 0b001));
  CHECK(admissible(CilKind::standard, 0b011, 0b110));
  CHECK_FALSE(admissible(CilKind::standard, 0b011, 0b101));
  CHECK_FALSE(admissible(CilKind::zero, 0b001, 0b001));
  CHECK(admissible(CilKind::zero, 0b001, 0b010));
  CHECK(admissible(CilKind::two, 0b111, 0b001));
  for (unsigned s = 0; s < 32; ++s)
    for (unsigned t = 0; t < 32; ++t)
      for (auto kind : {CilKind::standard, CilKind::zero, CilKind::two}) CHECK(admissible(kind, s, t) == pair_ok(kind, s, t));
}

TEST_CASE("push_forward skips a vertex") {
  CHECK(push_forward(0b011, 1) == 0b101);
  CHECK(push_forward(0b011, 0) == 0b110);
  CHECK(push_forward(0b011, 2) == 0b011);
  CHECK(push_forward(0, 0) == 0);
}

TEST_CASE("yoneda object") {
  auto y = cosimp_yoneda();
  CHECK(cardinal(y->at(-1)) == cardinal(gamma(-1)));
  for (int n = -1; n <= 6; ++n) CHECK(same_faces(y->at(n), gamma(n)));
  auto m = cardinal_matrix(y);
  for (int i = -1; i <= 8; ++i)
    for (int j = -1; j <= 8; ++j) CHECK(m(i, j) == bin()(i, j));
  const SSetMap& f = y->coface(2, 1);
  CHECK(f(1, index_of(1, 1, 0b011)) == index_of(2, 1, 0b101));
  CHECK(y->regular());
}

TEST_CASE("cylinder objects") {
  CHECK(cardinal(cosimp_cil()->at(1)) == AugSequence{1, 4, 5, 2});
  CHECK(cardinal(cosimp_cil0()->at(2)) == AugSequence{1, 6, 9, 4});
  CHECK(cardinal(cosimp_cil2()->at(1)) == AugSequence{1, 4, 6, 4, 1});
  for (int n = -1; n <= 5; ++n) {
    CHECK(cardinal(cosimp_cil()->at(n)) == pair_count(CilKind::standard, n));
    CHECK(cardinal(cosimp_cil0()->at(n)) == pair_count(CilKind::zero, n));
    CHECK(cardinal(cosimp_cil2()->at(n)) == pair_count(CilKind::two, n));
  }
}

TEST_CASE("subdivision object") {
  auto sd = cosimp_sd();
  CHECK(cardinal(sd->at(2)) == AugSequence{1, 7, 12, 6});
  CHECK(cardinal(sd->at(0)) == cardinal(gamma(0)));
  for (int n = -1; n <= 5; ++n) CHECK(cardinal(sd->at(n)) == cad_plus().row(n));
}

TEST_CASE("objects by name") {
  for (const char* name : {"yoneda", "cil", "cil0", "cil2", "sd"}) {
    CAPTURE(name);
    auto z = cosimp_by_name(name);
    REQUIRE(z != nullptr);
    CHECK(z->regular());
    CHECK(verify_cosimplicial(*z, 5).ok);
  }
  CHECK(cosimp_by_name("dup") == nullptr);
}

TEST_CASE("extend reproduces the object on standard simplices") {
  for (const char* name : {"yoneda", "cil", "cil0", "cil2", "sd"})
    for (int n = -1; n <= 5; ++n) {
      auto z = cosimp_by_name(name);
      const AugSSet x = extend(gamma(n), *z);
      CHECK(cardinal(x) == cardinal(z->at(n)));
      CHECK(validate(x).ok);
    }
}

TEST_CASE("extend examples") {
  CHECK(cardinal(extend(boundary(2), *cosimp_cil2())) == AugSequence{1, 6, 15, 12, 3});
  CHECK(cardinal(cylinder(hexagon())) == AugSequence{1, 12, 24, 12});
  CHECK(cardinal(cylinder0(hexagon())) == AugSequence{1, 12, 18});
  CHECK(cardinal(cylinder2(hexagon())) == AugSequence{1, 12, 30, 24, 6});
  CHECK(cardinal(subdivision(gamma(-1))) == AugSequence{1});
  CHECK(cardinal(subdivision(subdivision(gamma(2)))) == sd_seq(sd_seq(gamma_seq(2))));
  CHECK(extend(AugSSet(), *cosimp_cil()).empty());
  for (const auto& e : random_subcomplexes(50, 0, 5, 3)) {
    const AugSSet x = extend(e.complex, *cosimp_yoneda());
    CHECK(cardinal(x) == cardinal(e.complex));
    CHECK(validate(x).ok);
  }
}

TEST_CASE("extend output is deterministic") {
  const AugSSet h = hexagon();
  CHECK(augsset_to_json(cylinder(h)) == augsset_to_json(cylinder(h)));
  CHECK(augsset_to_json(subdivision(h)) == augsset_to_json(subdivision(hexagon())));
}

TEST_CASE("extend rejects non-regular objects") {
  Forgetful f;
  CHECK_THROWS_AS(extend(gamma(1), f), NonRegular);
  CHECK_THROWS_AS(interior_count(f, 1), NonRegular);
}

TEST_CASE("direct constructions") {
  CHECK(cardinal(direct_cil_subcomplex(gamma(2), CilKind::standard)) == AugSequence{1, 6, 12, 10, 3});
  CHECK(cardinal(direct_cil_subcomplex(boundary(2), CilKind::standard)) == AugSequence{1, 6, 12, 6});
  CHECK(cardinal(direct_sd_subcomplex(gamma(3))) == AugSequence{1, 15, 50, 60, 24});
  CHECK(cardinal(direct_sd_subcomplex(gamma(0))) == cardinal(gamma(0)));
  CHECK(cardinal(direct_sd_subcomplex(hexagon())) == AugSequence{1, 12, 12});
  CHECK(cardinal(direct_sd_subcomplex(hexagon())) == sd_seq(cardinal(hexagon())));
  CHECK_THROWS_AS(direct_cil_subcomplex(join(gamma(0), gamma(0)), CilKind::two), NotASubcomplex);
  CHECK_THROWS_AS(direct_sd_subcomplex(join(gamma(0), gamma(0))), NotASubcomplex);
}

TEST_CASE("direct constructions agree with extend") {
  for (const auto& e : random_subcomplexes(100, 0, 4, 5)) {
    CHECK(cardinal(direct_cil_subcomplex(e.complex, CilKind::two)) == cardinal(cylinder2(e.complex)));
    CHECK(cardinal(direct_cil_subcomplex(e.complex, CilKind::standard)) == cardinal(cylinder(e.complex)));
    CHECK(cardinal(direct_cil_subcomplex(e.complex, CilKind::zero)) == cardinal(cylinder0(e.complex)));
    CHECK(cardinal(direct_sd_subcomplex(e.complex)) == cardinal(subdivision(e.complex)));
  }
}

TEST_CASE("interior counts") {
  CHECK(interior_count(*cosimp_cil(), 3) == AugSequence{0, 0, 0, 0, 5, 4});
  CHECK(interior_count(*cosimp_sd(), 4) == breve_cad_plus().row(4));
  for (int n = -1; n <= 5; ++n) {
    CHECK(interior_count(*cosimp_yoneda(), n) == AugSequence::unit(n));
    CHECK(interior_count(*cosimp_cil2(), n) == breve_cil2().row(n));
    CHECK(interior_count(*cosimp_cil0(), n) == breve_cil0().row(n));
  }
}

TEST_CASE("levels are binomial sums of interiors") {
  for (const char* name : {"cil", "cil0", "cil2", "sd"}) {
    auto z = cosimp_by_name(name);
    for (int n = -1; n <= 5; ++n) {
      AugSequence sum;
      for (int i = -1; i <= n; ++i) sum = sum + Scalar(bin()(n, i)) * interior_count(*z, i);
      CHECK(sum == cardinal(z->at(n)));
    }
  }
}

TEST_CASE("cone of subdivision") {
  auto r0 = cone_sd_check(0);
  CHECK(r0.pass);
  CHECK(r0.left == AugSequence{1, 1});
  CHECK(r0.right == AugSequence{1, 1});
  auto r2 = cone_sd_check(2);
  CHECK(r2.pass);
  CHECK(r2.left == AugSequence{1, 7, 12, 6});
  auto r5 = cone_sd_check(5);
  CHECK(r5.pass);
  CHECK(r5.right == cad_plus().row(5));
  CHECK(r5.left_valid.ok);
  CHECK(r5.right_valid.ok);
}

TEST_CASE("monoidality holds for the join square only") {
  const AugSSet p = gamma(0);
  CHECK(cardinal(cylinder2(join(p, p))) == seq_join(cardinal(cylinder2(p)), cardinal(cylinder2(p))));
  CHECK_FALSE(cardinal(cylinder(join(p, p))) == seq_join(cardinal(cylinder(p)), cardinal(cylinder(p))));
  for (const auto& e : random_subcomplexes(20, 0, 2, 9)) {
    const AugSSet& x = e.complex;
    CHECK(cardinal(cylinder2(join(x, p))) == seq_join(cardinal(cylinder2(x)), cardinal(cylinder2(p))));
  }
}

TEST_CASE("join square of the boundary differs from its cylinder") {
  const AugSSet b = boundary(2);
  CHECK(cardinal(join(b, b)) == AugSequence{1, 6, 15, 18, 9});
  CHECK(cardinal(cylinder2(b)) == AugSequence{1, 6, 15, 12, 3});
}
