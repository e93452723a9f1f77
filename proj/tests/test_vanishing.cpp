#include <doctest.h>

#include <algorithm>

#include "bottkit/vanishing.hpp"

using namespace bottkit;

namespace {

RootSystem make(const std::string& spec) {
  return RootSystem::build(DynkinDiagram::parse(spec));
}

Weight w(std::vector<long long> v) { return weight_from_ints(v); }

Root root(std::vector<int> c) { return Root{std::move(c)}; }

}  // namespace

TEST_CASE("config validation") {
  const RootSystem a2 = make("A2");
  CHECK_NOTHROW(validate_ab_config(a2, {1}, {{0}, {1}}));
  CHECK_NOTHROW(validate_ab_config(a2, {1}, {{0}, {}}));
  CHECK_NOTHROW(validate_ab_config(a2, {1}, {{}, {1}}));  // empty A is legal
  // A must avoid sigma, B must sit inside sigma.
  CHECK_THROWS_AS(validate_ab_config(a2, {1}, {{1}, {}}), Error);
  CHECK_THROWS_AS(validate_ab_config(a2, {1}, {{0}, {0}}), Error);
  CHECK_THROWS_AS(validate_ab_config(a2, {1}, {{7}, {}}), Error);
}

TEST_CASE("AB-roots: support in A u B with a positive A coordinate") {
  const RootSystem a2 = make("A2");
  const std::vector<Root> r = ab_roots(a2, {1}, {{0}, {1}});
  REQUIRE(r.size() == 2);  // alpha2 itself has no positive A coordinate
  CHECK(r[0] == root({1, 0}));
  CHECK(r[1] == root({1, 1}));

  // Without alpha2 in B the composite root drops out.
  CHECK(ab_roots(a2, {1}, {{0}, {}}) == std::vector<Root>{root({1, 0})});
  CHECK(ab_roots(a2, {1}, {{}, {1}}).empty());

  const RootSystem b2 = make("B2");
  const std::vector<Root> rb = ab_roots(b2, {1}, {{0}, {1}});
  REQUIRE(rb.size() == 3);
  CHECK(rb[0] == root({1, 0}));
  CHECK(rb[1] == root({1, 1}));
  CHECK(rb[2] == root({1, 2}));
}

TEST_CASE("significance of a simple A root is immediate") {
  const RootSystem a2 = make("A2");
  const auto s = significance(a2, {{0}, {1}}, root({1, 0}));
  REQUIRE(s.has_value());
  CHECK(s->sigma_delta == root({1, 0}));
  CHECK(s->fastpath == FastPath::Case1);
}

TEST_CASE("uniform length: lowest A vertex of the support is the witness") {
  const RootSystem a2 = make("A2");
  const auto s = significance(a2, {{0}, {1}}, root({1, 1}));
  REQUIRE(s.has_value());
  CHECK(s->sigma_delta == root({1, 0}));
  CHECK(s->fastpath == FastPath::Case1);
  CHECK(satisfies_significance(a2, {{0}, {1}}, root({1, 1}), s->sigma_delta));
}

TEST_CASE("longest-root fast path in B2") {
  const RootSystem b2 = make("B2");
  // delta = alpha1 + 2 alpha2 mixes lengths; alpha1 is the strict longest
  // in the support and carries coefficient 1.
  const auto s = significance(b2, {{0}, {1}}, root({1, 2}));
  REQUIRE(s.has_value());
  CHECK(s->sigma_delta == root({1, 0}));
  CHECK(s->fastpath == FastPath::Case2);
}

TEST_CASE("short A root forces the long B coordinate into the witness") {
  const RootSystem b2 = make("B2");
  const ABConfig cfg{{1}, {0}};  // A = {alpha2} short, B = {alpha1} long

  // alpha1 + alpha2 has no significant witness: dropping alpha1 violates
  // the length condition, keeping it violates the sign condition.
  CHECK(!significance(b2, cfg, root({1, 1})).has_value());

  // alpha1 + 2 alpha2 is significant with itself as witness.
  const auto s = significance(b2, cfg, root({1, 2}));
  REQUIRE(s.has_value());
  CHECK(s->sigma_delta == root({1, 2}));
  CHECK(satisfies_significance(b2, cfg, root({1, 2}), root({1, 2})));
}

TEST_CASE("G2 highest root needs the exhaustive search when A is short") {
  const RootSystem g2 = make("G2");
  const ABConfig cfg{{1}, {0}};  // A = {alpha2} long... alpha2 is long here
  // With A = {alpha2}, B = {alpha1}: theta = 3a1 + 2a2. The quick paths
  // decline (support lengths mixed, c_{alpha2}(theta) = 2) and the witness
  // search lands on 3a1 + a2.
  const auto s = significance(g2, cfg, root({3, 2}));
  REQUIRE(s.has_value());
  CHECK(s->sigma_delta == root({3, 1}));
  CHECK(s->fastpath == FastPath::None);
  CHECK(satisfies_significance(g2, cfg, root({3, 2}), root({3, 1})));

  // Same root with everything in A: the shortest-root path applies.
  const auto s2 = significance(g2, {{0, 1}, {}}, root({3, 2}));
  REQUIRE(s2.has_value());
  CHECK(s2->sigma_delta == root({3, 1}));
  CHECK(s2->fastpath == FastPath::Case3);
}

TEST_CASE("witness validity is always checked against the full definition") {
  const RootSystem b2 = make("B2");
  // sigma = delta is vacuously fine when the sign condition holds.
  CHECK(satisfies_significance(b2, {{1}, {0}}, root({1, 2}), root({1, 2})));
  // Witness must be dominated by delta.
  CHECK(!satisfies_significance(b2, {{0}, {1}}, root({1, 0}), root({1, 1})));
  // Sign condition: B-heavy witness fails.
  CHECK(!satisfies_significance(b2, {{1}, {0}}, root({1, 1}), root({1, 1})));
}

TEST_CASE("significant root counts") {
  auto count = [](const RootSystem& rs, IndexSet sigma, ABConfig cfg) {
    return ell_AB(rs, sigma, cfg).count;
  };
  const RootSystem a2 = make("A2");
  CHECK(count(a2, {1}, {{0}, {1}}) == 2);
  CHECK(count(a2, {1}, {{0}, {}}) == 1);
  CHECK(count(a2, {}, {{0, 1}, {}}) == 3);

  const RootSystem b2 = make("B2");
  CHECK(count(b2, {1}, {{0}, {1}}) == 3);
  CHECK(count(b2, {0}, {{1}, {0}}) == 2);  // the mixed root drops out
  CHECK(count(b2, {}, {{0, 1}, {}}) == 4);

  const RootSystem g2 = make("G2");
  CHECK(count(g2, {0}, {{1}, {0}}) == 5);
  CHECK(count(g2, {}, {{0, 1}, {}}) == 6);

  // Empty A: no AB-roots at all.
  CHECK(count(a2, {1}, {{}, {1}}) == 0);

  // Witness list is one per significant root, sorted by root order.
  const EllResult r = ell_AB(b2, {1}, {{0}, {1}});
  REQUIRE(r.witnesses.size() == 3);
  CHECK(r.witnesses[0].delta == root({1, 0}));
  CHECK(r.witnesses[1].delta == root({1, 1}));
  CHECK(r.witnesses[2].delta == root({1, 2}));
}

TEST_CASE("simply laced counting formula") {
  const RootSystem a2 = make("A2");
  CHECK(ell_simply_laced(a2, {1}, {{0}, {1}}) == 2);

  const RootSystem a3 = make("A3");
  // A = {alpha2}, B = {alpha1, alpha3}: 6 roots total minus the two
  // B-supported simples = 4.
  CHECK(ell_simply_laced(a3, {0, 2}, {{1}, {0, 2}}) == 4);
  CHECK(ell_AB(a3, {0, 2}, {{1}, {0, 2}}).count == 4);

  // Isolated A root.
  CHECK(ell_simply_laced(a3, {0, 2}, {{1}, {}}) == 1);

  // Components of B that miss A are pruned, so this stays simply laced
  // even though sigma holds a double edge elsewhere: B's far component
  // never enters the count.
  const RootSystem bprod = make("A2xB2");
  CHECK(ell_simply_laced(bprod, {1, 2, 3}, {{0}, {1}}) == 2);
  CHECK(ell_simply_laced(bprod, {1, 2, 3}, {{0}, {1, 2, 3}}) == 2);

  // A double edge inside the kept part is out of scope for the formula.
  const RootSystem b2 = make("B2");
  CHECK_THROWS_AS(ell_simply_laced(b2, {1}, {{0}, {1}}), Error);
  try {
    ell_simply_laced(b2, {1}, {{0}, {1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimplyLacedConfig);
  }
}

TEST_CASE("main vanishing range") {
  const RootSystem a2 = make("A2");
  const EllResult r = theorem_main_range(a2, {1}, w({-1, 0}), {{0}, {1}});
  CHECK(r.count == 2);

  const RootSystem b2 = make("B2");
  CHECK(theorem_main_range(b2, {1}, w({-2, 0}), {{0}, {1}}).count == 3);

  // Empty A: the guarantee is empty but well formed.
  CHECK(theorem_main_range(a2, {1}, w({2, 0}), {{}, {}}).count == 0);

  // Sign condition violations.
  CHECK_THROWS_AS(theorem_main_range(a2, {1}, w({0, 0}), {{0}, {1}}), Error);
  CHECK_THROWS_AS(theorem_main_range(a2, {1}, w({-1, 1}), {{0}, {1}}), Error);
  try {
    theorem_main_range(a2, {1}, w({-1, 1}), {{0}, {1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionABViolated);
  }
  // Non-integral weight.
  CHECK_THROWS_AS(
      theorem_main_range(a2, {1}, Weight{{Rat(-1), Rat(1, 2)}}, {{0}, {1}}),
      Error);
}

TEST_CASE("semisimple fibers") {
  const RootSystem a4 = make("A4");
  const IndexSet sigma{0, 2, 3};

  // All weights dominant: no constraint at all.
  const SemisimpleResult free =
      semisimple_vanishing(a4, sigma, {w({0, 0, 0, 0}), w({1, 2, 0, 3})});
  CHECK(free.unbounded);
  CHECK(free.constrained.empty());
  CHECK(free.B.empty());  // the second weight is nonzero on both components

  const SemisimpleResult r =
      semisimple_vanishing(a4, sigma, {w({0, -2, 0, 0})});
  CHECK(!r.unbounded);
  CHECK(r.B == sigma);
  REQUIRE(r.constrained.size() == 1);
  CHECK(r.constrained[0].A == IndexSet{1});
  CHECK(r.constrained[0].ell == 6);
  CHECK(r.q_max == 6);

  // Mixed: one dominant weight contributes nothing; minimum over the rest.
  const SemisimpleResult m =
      semisimple_vanishing(a4, sigma, {w({0, 0, 0, 0}), w({0, -2, 0, 0})});
  CHECK(m.q_max == 6);

  // A weight nonzero on a sigma component shrinks B.
  const SemisimpleResult shrunk =
      semisimple_vanishing(a4, sigma, {w({1, -2, 0, 0})});
  CHECK(shrunk.B == IndexSet{2, 3});
  CHECK(!shrunk.unbounded);

  CHECK_THROWS_AS(semisimple_vanishing(a4, sigma, {}), Error);
}

TEST_CASE("semisimple B requires the whole component to vanish") {
  const RootSystem a4 = make("A4");
  // Weight vanishes on vertex 2 but not 3: the {2,3} component leaves B.
  const SemisimpleResult r =
      semisimple_vanishing(a4, {0, 2, 3}, {w({0, -1, 0, 2})});
  CHECK(r.B == IndexSet{0});
}

TEST_CASE("intermediate cohomology window") {
  const RootSystem a4 = make("A4");
  const ParabolicData pd = analyze_parabolic(a4, {0, 2, 3});

  const H1Range ok = theorem_H1_range(a4, pd, 4);
  CHECK(ok.guarantee);
  CHECK(ok.d_P == 5);
  CHECK(ok.ell_P == 2);

  const H1Range no = theorem_H1_range(a4, pd, 5);
  CHECK(!no.guarantee);

  CHECK(rigidity_check(a4, pd, 4));
  CHECK(!rigidity_check(a4, pd, 5));

  // d(P) = 1: never rigid this way, whatever the dimension.
  const RootSystem a1 = make("A1");
  const ParabolicData borel = analyze_parabolic(a1, {});
  CHECK(theorem_H1_range(a1, borel, 1).d_P == 1);
  CHECK(!rigidity_check(a1, borel, 1));
  CHECK_THROWS_AS(theorem_H1_range(a1, borel, 0), Error);
}

TEST_CASE("projective space tangent sheaf numbers") {
  // P^3 through A3: d(P) = 3, ell(P) = 3, so anything generated below
  // dimension 3 has no intermediate cohomology in (0, 3).
  const RootSystem a3 = make("A3");
  const ParabolicData pd = analyze_parabolic(a3, {1, 2});
  const H1Range r = theorem_H1_range(a3, pd, 2);
  CHECK(r.guarantee);
  CHECK(r.d_P == 3);
  CHECK(r.ell_P == 3);
  CHECK(rigidity_check(a3, pd, 2));
}
