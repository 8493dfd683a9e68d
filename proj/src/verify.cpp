#include "augsimp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "augsimp/combinat.hpp"
#include "augsimp/corpus.hpp"
#include "augsimp/cosimplicial.hpp"
#include "augsimp/extend.hpp"
#include "augsimp/kernels.hpp"
#include "augsimp/named_matrices.hpp"
#include "augsimp/reference_tables.hpp"
#include "augsimp/sset.hpp"

namespace augsimp {

bool SuiteReport::passed() const { return failures() == 0 && complexes_invalid == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

int SuiteReport::waivers() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.waived; }));
}

SuiteReport& SuiteReport::operator+=(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  complexes_validated += other.complexes_validated;
  complexes_invalid += other.complexes_invalid;
  return *this;
}

namespace {

struct Tally {
  std::atomic<long> validated{0};
  std::atomic<long> invalid{0};
};

using Task = std::function<CheckResult(Tally&)>;

// Validates x and tallies it; returns an empty string on success.
std::string record(Tally& tally, const AugSSet& x, std::string_view what) {
  ++tally.validated;
  auto report = validate(x);
  if (report.ok) return {};
  ++tally.invalid;
  return std::string(what) + " fails validation: " + report.message;
}

CheckResult pass(std::string id, std::string detail = {}) { return {std::move(id), true, std::move(detail), false}; }
CheckResult fail(std::string id, std::string detail) { return {std::move(id), false, std::move(detail), false}; }

CheckResult compare(std::string id, const AugSequence& got, const AugSequence& want, std::string_view context) {
  if (got == want) return pass(std::move(id), want.str());
  std::ostringstream out;
  out << context << ": got " << got.str() << ", expected " << want.str();
  return fail(std::move(id), out.str());
}

std::string describe(const CorpusEntry& e) {
  std::ostringstream out;
  out << "X ⊆ Γ₊[" << e.ambient << "] generated by {";
  for (std::size_t g = 0; g < e.generators.size(); ++g) {
    out << (g ? "," : "") << '[';
    for (std::size_t v = 0; v < e.generators[g].size(); ++v) out << (v ? "," : "") << e.generators[g][v];
    out << ']';
  }
  out << '}';
  return out.str();
}

// Runs the tasks in parallel and merges results sharing an id.
SuiteReport run_tasks(const std::vector<Task>& tasks) {
  Tally tally;
  std::vector<CheckResult> results(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
    try {
      results[t] = tasks[t](tally);
    } catch (const std::exception& e) {
      results[t] = fail("", std::string("exception: ") + e.what());
    }
  }
  std::map<std::string, std::vector<const CheckResult*>> groups;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (results[t].id.empty()) results[t].id = "task-" + std::to_string(t);
    groups[results[t].id].push_back(&results[t]);
  }
  SuiteReport report;
  for (const auto& [id, members] : groups) {
    if (members.size() == 1) {
      report.checks.push_back(*members.front());
      continue;
    }
    CheckResult merged{id, true, {}, false};
    std::size_t failed = 0;
    const CheckResult* first_failure = nullptr;
    for (const auto* m : members) {
      merged.waived = merged.waived || m->waived;
      if (!m->passed) {
        ++failed;
        if (!first_failure) first_failure = m;
      }
    }
    if (failed == 0) {
      merged.detail = std::to_string(members.size()) + " cases";
    } else {
      merged.passed = false;
      merged.detail = std::to_string(failed) + " of " + std::to_string(members.size()) +
                      " cases failed; first: " + first_failure->detail;
    }
    report.checks.push_back(std::move(merged));
  }
  report.complexes_validated = tally.validated;
  report.complexes_invalid = tally.invalid;
  return report;
}

struct Action {
  std::string name;
  CoSSPtr z;
  const AugMatrix* full;
  const AugMatrix* breve;
};

const std::vector<Action>& actions() {
  static const std::vector<Action> list = {
      {"yoneda", cosimp_yoneda(), &bin(), nullptr},
      {"cil", cosimp_cil(), &cil(), &breve_cil()},
      {"cil0", cosimp_cil0(), &cil0(), &breve_cil0()},
      {"cil2", cosimp_cil2(), &cil2(), &breve_cil2()},
      {"sd", cosimp_sd(), &cad_plus(), &breve_cad_plus()},
  };
  return list;
}

const Action& action(std::string_view name) {
  for (const auto& a : actions())
    if (a.name == name) return a;
  throw std::invalid_argument("unknown action");
}

AugSequence breve_row(const Action& a, int n) { return a.breve ? a.breve->row(n) : AugSequence::unit(n); }

}  // namespace

SuiteReport table_suite() {
  std::vector<Task> tasks;
  for (const auto& table : reference_tables()) {
    tasks.push_back([&table](Tally&) {
      const std::string id = "tables/" + table.id;
      auto m = named_matrix(table.matrix);
      if (!m) return fail(id, "no matrix named " + table.matrix);
      const int rows = static_cast<int>(table.rows.size());
      const int cols = static_cast<int>(table.rows.front().size());
      auto w = kernels::serial::materialize(*m, {table.row_lo, table.row_lo + rows - 1},
                                            {table.col_lo, table.col_lo + cols - 1});
      int waived = 0;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int i = table.row_lo + r, j = table.col_lo + c;
          const bool is_waived = std::any_of(table_waivers().begin(), table_waivers().end(), [&](const TableWaiver& v) {
            return v.table == table.id && v.row == i && v.col == j;
          });
          if (is_waived) {
            ++waived;
            continue;
          }
          if (w.at(i, j) != table.rows[r][c])
            return fail(id, "cell (" + std::to_string(i) + "," + std::to_string(j) + "): computed " +
                                to_string(w.at(i, j)) + ", reference " + std::to_string(table.rows[r][c]));
        }
      }
      std::string detail = std::to_string(rows) + "x" + std::to_string(cols) + " window";
      if (waived) detail += ", " + std::to_string(waived) + " waived cells";
      return pass(id, detail);
    });
  }
  for (const auto& waiver : table_waivers()) {
    tasks.push_back([&waiver](Tally& tally) {
      const std::string id = "tables/waiver/" + waiver.table + "(" + std::to_string(waiver.row) + "," +
                             std::to_string(waiver.col) + ")";
      const Scalar computed = (*named_matrix(waiver.table))(waiver.row, waiver.col);
      Scalar formula;
      if (waiver.table == "cil2") {
        formula = Scalar(binomial(2L * waiver.row + 2, waiver.col + 1));
      } else {
        const AugSSet& level = cosimp_cil()->at(waiver.row);
        if (auto bad = record(tally, level, "Cil level"); !bad.empty()) return fail(id, bad);
        formula = cardinal(level)[waiver.col];
      }
      CheckResult result{id, computed == formula && computed != waiver.printed, {}, true};
      result.detail = "waiver " + waiver.group + ": reference prints " + std::to_string(waiver.printed) +
                      ", computed " + to_string(computed) + ", formula " + to_string(formula) + " (" +
                      waiver.reason + ")";
      return result;
    });
  }
  return run_tasks(tasks);
}

SuiteReport hexahedron_suite() {
  struct Case {
    std::string name;
    CilKind kind;
    AugSequence expected;
  };
  static const std::vector<Case> cases = {
      {"cil", CilKind::standard, {1, 12, 24, 12}},
      {"cil0", CilKind::zero, {1, 12, 18}},
      {"cil2", CilKind::two, {1, 12, 30, 24, 6}},
  };
  std::vector<Task> tasks;
  for (const auto& c : cases) {
    tasks.push_back([&c](Tally& tally) {
      const std::string id = "hexahedron/" + c.name;
      const Action& a = action(c.name);
      const AugSSet h = hexagon();
      if (auto bad = record(tally, h, "hexagon"); !bad.empty()) return fail(id, bad);
      const AugSequence card = cardinal(h);
      if (!(card == AugSequence{1, 6, 6})) return fail(id, "hexagon cardinal " + card.str());
      const AugSSet geometric = extend(h, *a.z);
      if (auto bad = record(tally, geometric, "extend"); !bad.empty()) return fail(id, bad);
      const AugSSet direct = direct_cil_subcomplex(h, c.kind);
      if (auto bad = record(tally, direct, "direct"); !bad.empty()) return fail(id, bad);
      const std::vector<std::pair<std::string, AugSequence>> values = {
          {"extend", cardinal(geometric)},
          {"direct", cardinal(direct)},
          {"a·breve", dot(card, *a.breve)},
          {"a▷̃full", triangle_action(card, *a.full)},
      };
      for (const auto& [how, value] : values)
        if (!(value == c.expected)) return fail(id, how + " gives " + value.str() + ", expected " + c.expected.str());
      return pass(id, c.expected.str());
    });
  }
  return run_tasks(tasks);
}

SuiteReport commutation_suite(int max_n, std::size_t count, std::uint64_t seed) {
  auto corpus = std::make_shared<std::vector<CorpusEntry>>(random_subcomplexes(count, 0, max_n, seed));
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < corpus->size(); ++k) {
    for (const auto& a : actions()) {
      tasks.push_back([corpus, k, &a](Tally& tally) {
        const CorpusEntry& e = (*corpus)[k];
        const std::string id = "commutation/" + a.name;
        if (auto bad = record(tally, e.complex, "X"); !bad.empty()) return fail(id, describe(e) + ": " + bad);
        const AugSSet y = extend(e.complex, *a.z);
        if (auto bad = record(tally, y, "extend"); !bad.empty()) return fail(id, describe(e) + ": " + bad);
        return compare(id, cardinal(y), triangle_action(cardinal(e.complex), *a.full), describe(e));
      });
    }
    tasks.push_back([corpus, k](Tally& tally) {
      const CorpusEntry& e = (*corpus)[k];
      const AugSSet y = extend(e.complex, *cosimp_yoneda());
      if (auto bad = record(tally, y, "extend"); !bad.empty()) return fail("commutation/yoneda-identity", bad);
      return compare("commutation/yoneda-identity", cardinal(y), cardinal(e.complex), describe(e));
    });
  }
  return run_tasks(tasks);
}

SuiteReport monoidal_suite(int max_n, std::size_t count, std::uint64_t seed) {
  constexpr int kMaxJoinDim = 5;
  auto corpus = std::make_shared<std::vector<CorpusEntry>>(random_subcomplexes(2 * count, 0, max_n, seed));
  std::vector<Task> tasks;
  for (std::size_t k = 0; k + 1 < corpus->size(); k += 2) {
    const int dx = *(*corpus)[k].complex.dim(), dy = *(*corpus)[k + 1].complex.dim();
    if (dx + dy + 1 > kMaxJoinDim) continue;
    for (const auto& a : actions()) {
      if (a.name != "yoneda" && a.name != "cil2") continue;
      tasks.push_back([corpus, k, &a](Tally& tally) {
        const CorpusEntry &ex = (*corpus)[k], &ey = (*corpus)[k + 1];
        const std::string id = "monoidal/" + a.name;
        const AugSSet xy = join(ex.complex, ey.complex);
        const AugSSet lhs = extend(xy, *a.z);
        const AugSSet zx = extend(ex.complex, *a.z), zy = extend(ey.complex, *a.z);
        for (const auto* c : {&xy, &lhs, &zx, &zy})
          if (auto bad = record(tally, *c, "complex"); !bad.empty()) return fail(id, bad);
        return compare(id, cardinal(lhs), seq_join(cardinal(zx), cardinal(zy)), describe(ex) + " ⊞ " + describe(ey));
      });
    }
  }
  for (const auto& a : actions()) {
    if (a.name == "yoneda" || a.name == "cil2") continue;
    tasks.push_back([&a](Tally&) {
      const std::string id = "monoidal/not-monoidal-" + a.name;
      const AugSequence point = cardinal(a.z->at(0));
      const AugSequence edge = cardinal(a.z->at(1));
      const AugSequence joined = seq_join(point, point);
      if (edge == joined) return fail(id, "Z(Γ₊[1]) matches Z(Γ₊[0]) ⊞ Z(Γ₊[0]) = " + joined.str());
      return pass(id, "Z(Γ₊[1]) = " + edge.str() + " ≠ " + joined.str());
    });
  }
  return run_tasks(tasks);
}

SuiteReport join_cone_suite(std::size_t count, std::uint64_t seed) {
  auto pool = std::make_shared<std::vector<AugSSet>>();
  for (int k = -1; k <= 5; ++k) pool->push_back(gamma(k));
  for (int k = 0; k <= 5; ++k) pool->push_back(boundary(k));
  for (auto& e : random_subcomplexes(count, 0, 5, seed)) pool->push_back(std::move(e.complex));
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < pool->size(); ++i) {
    tasks.push_back([pool, i](Tally& tally) {
      const AugSSet& x = (*pool)[i];
      const AugSSet l = cone_left(x), r = cone_right(x);
      for (const auto* c : {&x, &l, &r})
        if (auto bad = record(tally, *c, "cone"); !bad.empty()) return fail("cone", bad);
      const AugSequence want = seq_cone(cardinal(x));
      if (!(cardinal(l) == want)) return compare("cone", cardinal(l), want, "cone_left of " + cardinal(x).str());
      return compare("cone", cardinal(r), want, "cone_right of " + cardinal(x).str());
    });
    for (std::size_t j = 0; j < pool->size(); ++j) {
      tasks.push_back([pool, i, j](Tally& tally) {
        const AugSSet &x = (*pool)[i], &y = (*pool)[j];
        const AugSSet xy = join(x, y);
        if (auto bad = record(tally, xy, "join"); !bad.empty()) return fail("join/cardinal", bad);
        const std::string context = cardinal(x).str() + " ⊞ " + cardinal(y).str();
        if (x.dim() && y.dim() && xy.dim() != std::optional<int>(*x.dim() + *y.dim() + 1))
          return fail("join/cardinal", context + ": dimension " + std::to_string(xy.dim().value_or(-2)));
        return compare("join/cardinal", cardinal(xy), seq_join(cardinal(x), cardinal(y)), context);
      });
    }
  }
  for (int n = -1; n <= 11; ++n) {
    for (int m = -1; n + m <= 10; ++m) {
      tasks.push_back([n, m](Tally& tally) {
        const AugSSet xy = join(gamma(n), gamma(m));
        if (auto bad = record(tally, xy, "join"); !bad.empty()) return fail("join/gammas", bad);
        return compare("join/gammas", cardinal(xy), gamma_seq(n + m + 1),
                       "Γ₊[" + std::to_string(n) + "] ⊞ Γ₊[" + std::to_string(m) + "]");
      });
    }
  }
  return run_tasks(tasks);
}

SuiteReport dup_suite() {
  std::vector<Task> tasks;
  tasks.push_back([](Tally& tally) {
    const std::string id = "dup/not-an-action";
    const AugSSet b = boundary(2);
    const AugSSet dup = join(b, b);
    const AugSSet cyl = extend(b, *cosimp_cil2());
    for (const auto* c : {&b, &dup, &cyl})
      if (auto bad = record(tally, *c, "complex"); !bad.empty()) return fail(id, bad);
    const AugSequence want_dup{1, 6, 15, 18, 9}, want_cyl{1, 6, 15, 12, 3};
    if (!(cardinal(dup) == want_dup)) return compare(id, cardinal(dup), want_dup, "join(∂Γ₊[2], ∂Γ₊[2])");
    if (!(cardinal(cyl) == want_cyl)) return compare(id, cardinal(cyl), want_cyl, "Cil₂(∂Γ₊[2])");
    if (cardinal(dup) == cardinal(cyl)) return fail(id, "the two cardinals coincide");
    return pass(id, want_dup.str() + " ≠ " + want_cyl.str());
  });
  return run_tasks(tasks);
}

SuiteReport oracle_suite(int max_n, std::size_t count, std::uint64_t seed) {
  auto corpus = std::make_shared<std::vector<CorpusEntry>>(random_subcomplexes(count, 0, max_n, seed));
  static const std::vector<std::pair<std::string, CilKind>> kinds = {
      {"cil", CilKind::standard}, {"cil0", CilKind::zero}, {"cil2", CilKind::two}};
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < corpus->size(); ++k) {
    for (const auto& [name, kind] : kinds) {
      tasks.push_back([corpus, k, name, kind](Tally& tally) {
        const CorpusEntry& e = (*corpus)[k];
        const std::string id = "oracle/direct-" + name;
        const AugSSet direct = direct_cil_subcomplex(e.complex, kind);
        const AugSSet ext = extend(e.complex, *action(name).z);
        for (const auto* c : {&direct, &ext})
          if (auto bad = record(tally, *c, "complex"); !bad.empty()) return fail(id, describe(e) + ": " + bad);
        return compare(id, cardinal(direct), cardinal(ext), describe(e));
      });
    }
    tasks.push_back([corpus, k](Tally& tally) {
      const CorpusEntry& e = (*corpus)[k];
      const std::string id = "oracle/direct-sd";
      const AugSSet direct = direct_sd_subcomplex(e.complex);
      const AugSSet ext = subdivision(e.complex);
      for (const auto* c : {&direct, &ext})
        if (auto bad = record(tally, *c, "complex"); !bad.empty()) return fail(id, describe(e) + ": " + bad);
      return compare(id, cardinal(direct), cardinal(ext), describe(e));
    });
  }
  return run_tasks(tasks);
}

SuiteReport reconstruction_suite(int max_n) {
  std::vector<Task> tasks;
  for (const auto& a : actions()) {
    tasks.push_back([&a, max_n](Tally&) {
      auto report = verify_cosimplicial(*a.z, max_n);
      const std::string id = "cosimplicial/" + a.name;
      if (!a.z->regular()) return fail(id, "not regular");
      return report.ok ? pass(id, "levels -1.." + std::to_string(max_n)) : fail(id, report.message);
    });
    for (int n = -1; n <= max_n; ++n) {
      tasks.push_back([&a, n](Tally&) {
        const std::string id = "interior/" + a.name;
        return compare(id, interior_count(*a.z, n), breve_row(a, n), "level " + std::to_string(n));
      });
      tasks.push_back([&a, n](Tally& tally) {
        const std::string id = "reconstruction/" + a.name;
        const AugSSet& level = a.z->at(n);
        if (auto bad = record(tally, level, "level"); !bad.empty()) return fail(id, bad);
        AugSequence sum;
        for (int i = -1; i <= n; ++i) sum = sum + Scalar(binomial(n + 1, i + 1)) * interior_count(*a.z, i);
        return compare(id, cardinal(level), sum, "level " + std::to_string(n));
      });
    }
  }
  return run_tasks(tasks);
}

SuiteReport chain_suite(int max_n) {
  std::vector<Task> tasks;
  for (int n = -1; n <= max_n; ++n) {
    tasks.push_back([n](Tally&) {
      const std::string id = "chains/anchored-stirling";
      const auto counts = strict_chain_counts(n, Anchor::anchored);
      for (int p = -1; p <= n; ++p) {
        const BigInt want = factorial(p + 1) * stirling2(n + 1, p + 1);
        if (counts[p + 1] != want)
          return fail(id, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": enumerated " +
                              to_string(counts[p + 1]) + ", formula " + to_string(want));
      }
      return pass(id);
    });
    tasks.push_back([n](Tally&) {
      const std::string id = "chains/unanchored-cad+";
      const auto counts = strict_chain_counts(n, Anchor::unanchored);
      for (int p = -1; p <= n; ++p)
        if (Scalar(counts[p + 1]) != cad_plus()(n, p))
          return fail(id, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": enumerated " +
                              to_string(counts[p + 1]) + ", matrix " + to_string(cad_plus()(n, p)));
      return pass(id);
    });
  }
  for (int p = 0; p <= 9; ++p) {
    tasks.push_back([p](Tally&) {
      const std::string id = "chains/set-partitions";
      for (int q = 0; q <= p; ++q)
        if (count_set_partitions(p, q) != stirling2(p, q))
          return fail(id, "S(" + std::to_string(p) + "," + std::to_string(q) + ")");
      return pass(id);
    });
  }
  tasks.push_back([max_n](Tally&) {
    const std::string id = "chains/bin·breve-cad+";
    const kernels::IndexRange r{-1, max_n};
    auto product = kernels::materialize(matmul(bin(), breve_cad_plus()), r, r);
    auto want = kernels::materialize(cad_plus(), r, r);
    return product.cells == want.cells ? pass(id, "window [-1.." + std::to_string(max_n) + "]²")
                                       : fail(id, "product differs from cad+");
  });
  return run_tasks(tasks);
}

SuiteReport inverse_suite() {
  std::vector<Task> tasks;
  tasks.push_back([](Tally&) {
    const kernels::IndexRange r{-1, 64};
    const bool ok = kernels::is_identity(kernels::product_window(bin(), bin_inv(), r, r));
    return ok ? pass("inverse/bin·bin-inv", "[-1..64]²") : fail("inverse/bin·bin-inv", "not the identity");
  });
  tasks.push_back([](Tally&) {
    const kernels::IndexRange r{-1, 64};
    const bool ok = kernels::is_identity(kernels::product_window(bin_inv(), bin(), r, r));
    return ok ? pass("inverse/bin-inv·bin", "[-1..64]²") : fail("inverse/bin-inv·bin", "not the identity");
  });
  tasks.push_back([](Tally&) {
    const kernels::IndexRange r{-1, 32};
    const AugMatrix inv = invert_triangular(breve_cil());
    const bool ok = kernels::is_identity(kernels::materialize(matmul(inv, breve_cil()), r, r));
    return ok ? pass("inverse/breve-cil", "[-1..32]²") : fail("inverse/breve-cil", "not the identity");
  });
  tasks.push_back([](Tally&) {
    const kernels::IndexRange r{-1, 20};
    const bool ok = kernels::materialize(invert_triangular(bin()), r, r).cells == kernels::materialize(bin_inv(), r, r).cells;
    return ok ? pass("inverse/bin-substitution", "[-1..20]²") : fail("inverse/bin-substitution", "differs from bin-inv");
  });
  tasks.push_back([](Tally&) {
    const std::string id = "inverse/breve-cil0-powers";
    for (int k = -3; k <= 3; ++k) {
      const AugMatrix power = iterate_operator(breve_cil0(), k);
      for (int m = -1; m <= 64; ++m) {
        Scalar want = 1;
        for (int t = 0; t < (k < 0 ? -k : k); ++t) want *= Scalar(m + 2);
        if (k < 0) want = 1 / want;
        if (power(m, m) != want)
          return fail(id, "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + to_string(power(m, m)));
      }
    }
    return pass(id, "k=-3..3, m=-1..64");
  });
  return run_tasks(tasks);
}

SuiteReport nesting_suite(int max_n) {
  std::vector<Task> tasks;
  for (int n = -1; n <= max_n; ++n) {
    tasks.push_back([n](Tally&) {
      const std::string id = "nesting/pairs";
      const VertexSet all = (VertexSet{1} << (n + 1)) - 1;
      for (VertexSet s = 0; s <= all; ++s)
        for (VertexSet t = 0; t <= all; ++t) {
          const bool zero = admissible(CilKind::zero, s, t);
          const bool standard = admissible(CilKind::standard, s, t);
          const bool two = admissible(CilKind::two, s, t);
          if ((zero && !standard) || (standard && !two))
            return fail(id, "n=" + std::to_string(n) + " σ=" + std::to_string(s) + " τ=" + std::to_string(t));
        }
      return pass(id);
    });
    for (const auto& [name, kind] : std::vector<std::pair<std::string, CilKind>>{
             {"cil0", CilKind::zero}, {"cil", CilKind::standard}, {"cil2", CilKind::two}}) {
      tasks.push_back([n, name, kind](Tally& tally) {
        const std::string id = "nesting/levels-" + name;
        const VertexSet all = (VertexSet{1} << (n + 1)) - 1;
        std::vector<Scalar> counts(2 * n + 4);
        for (VertexSet s = 0; s <= all; ++s)
          for (VertexSet t = 0; t <= all; ++t)
            if (admissible(kind, s, t)) counts[std::popcount(s) + std::popcount(t)] += 1;
        const AugSSet& level = action(name).z->at(n);
        if (auto bad = record(tally, level, "level"); !bad.empty()) return fail(id, bad);
        return compare(id, cardinal(level), AugSequence(counts), "pairs over [" + std::to_string(n) + "]");
      });
    }
  }
  return run_tasks(tasks);
}

SuiteReport cone_sd_suite(int max_n) {
  std::vector<Task> tasks;
  for (int n = 0; n <= max_n; ++n) {
    tasks.push_back([n](Tally& tally) {
      const std::string id = "cone-sd/n=" + std::to_string(n);
      ConeSdReport r = cone_sd_check(n);
      tally.validated += 2;
      tally.invalid += !r.left_valid.ok + !r.right_valid.ok;
      if (!r.pass) return fail(id, "left " + r.left.str() + ", right " + r.right.str());
      return compare(id, r.left, cad_plus().row(n), "common cardinal against cad+");
    });
  }
  return run_tasks(tasks);
}

namespace {

struct OeisCheck {
  std::string name;
  std::function<Scalar(int)> column;
  std::function<BigInt(BigInt)> closed;
};

const std::vector<OeisCheck>& oeis_checks() {
  static const std::vector<OeisCheck> checks = {
      {"pentagonal", [](int n) { return cil()(n - 1, 1); }, [](BigInt n) -> BigInt { return n * (3 * n - 1) / 2; }},
      {"A006331", [](int n) { return cil()(n, 2); }, [](BigInt n) -> BigInt { return n * (n + 1) * (2 * n + 1) / 3; }},
      {"A212415", [](int n) { return cil()(n, 3); },
       [](BigInt n) -> BigInt { return (n - 1) * n * (n + 1) * (5 * n + 2) / 24; }},
      {"matchstick", [](int n) { return cil0()(n, 1); }, [](BigInt n) -> BigInt { return 3 * n * (n + 1) / 2; }},
      {"A210440", [](int n) { return cil0()(n + 1, 2); },
       [](BigInt n) -> BigInt { return 2 * n * (n + 1) * (n + 2) / 3; }},
      {"hexagonal", [](int n) { return cil2()(n - 1, 1); }, [](BigInt n) -> BigInt { return n * (2 * n - 1); }},
      {"A002492", [](int n) { return cil2()(n, 2); },
       [](BigInt n) -> BigInt { return 2 * n * (n + 1) * (2 * n + 1) / 3; }},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& oeis_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : oeis_checks()) v.push_back(c.name);
    return v;
  }();
  return names;
}

std::optional<SuiteReport> oeis_suite(std::string_view check, int count) {
  auto it = std::find_if(oeis_checks().begin(), oeis_checks().end(), [&](const OeisCheck& c) { return c.name == check; });
  if (it == oeis_checks().end()) return std::nullopt;
  const OeisCheck& c = *it;
  std::vector<Task> tasks;
  for (int n = 1; n <= count; ++n) {
    tasks.push_back([&c, n](Tally&) {
      const std::string id = "oeis/" + c.name;
      const Scalar got = c.column(n);
      const BigInt want = c.closed(BigInt(n));
      if (got != Scalar(want))
        return fail(id, "n=" + std::to_string(n) + ": matrix " + to_string(got) + ", closed form " + to_string(want));
      return pass(id);
    });
  }
  SuiteReport report = run_tasks(tasks);
  for (auto& r : report.checks)
    if (r.passed) r.detail = "n = 1.." + std::to_string(count);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables", "commutation", "oracles", "nesting", "cone-sd", "all"};
  return names;
}

std::optional<SuiteReport> run_suite(std::string_view name, const SuiteOptions& o) {
  const bool all = name == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) return std::nullopt;
  SuiteReport report;
  if (all || name == "tables") report += table_suite();
  if (all || name == "commutation") {
    const int n = o.n.value_or(5);
    const std::size_t count = o.count.value_or(200);
    report += hexahedron_suite();
    report += commutation_suite(n, count, o.seed);
    report += monoidal_suite(std::min(n, 3), std::max<std::size_t>(count / 4, 1), o.seed);
    report += join_cone_suite(24, o.seed);
    report += dup_suite();
  }
  if (all || name == "oracles") {
    const int n = o.n.value_or(4);
    report += oracle_suite(std::min(n, 4), o.count.value_or(100), o.seed);
    report += reconstruction_suite(std::min(n + 1, 5));
    report += chain_suite(8);
    report += inverse_suite();
  }
  if (all || name == "nesting") report += nesting_suite(o.n.value_or(6));
  if (all || name == "cone-sd") report += cone_sd_suite(o.n.value_or(5));
  if (all)
    for (const auto& check : oeis_check_names()) report += *oeis_suite(check, 50);
  return report;
}

}  // namespace augsimp
