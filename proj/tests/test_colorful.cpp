#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "tropmat/colorful.hpp"
#include "tropmat/gen.hpp"
#include "tropmat/rng.hpp"

using namespace tropmat;
using testsupport::brute_covering_basis;
using testsupport::brute_independent_cover;
using testsupport::zeros;

namespace {

Trop T(int num, int den = 1) { return Trop::of(Rational(num, den)); }
const Trop NI = Trop::ninf();

// partition {{a,b},{c,d}} with V = (a:1, b:-1, c:2, d:-2) in one dimension
Matroid two_blocks() {
    return Matroid::partition(GroundSet(4), {SmallSet::of({0, 1}), SmallSet::of({2, 3})});
}
TropConfig mixed_signs() { return TropConfig(1, {{T(1)}, {T(-1)}, {T(2)}, {T(-2)}}); }

bool sound(const ColorfulOutcome& out, const Matroid& m, const TropConfig& config) {
    if (out.status != ColorfulOutcome::Status::found) return false;
    if (!m.is_independent(out.basis) || out.basis.size() != m.rank()) return false;
    auto check = tropical_membership(zeros(config.d), config.restrict(out.basis));
    return check.inside && out.certificate.inside;
}

void check_trace(const ColorfulOutcome& out, const Matroid& m, int d) {
    CHECK(static_cast<int>(out.trace.size()) <= d);
    int last = -1;
    for (const TraceStep& step : out.trace) {
        CHECK(m.is_independent(step.basis));
        CHECK(step.basis.size() == m.rank());
        CHECK(step.covered.size() > last);
        last = step.covered.size();
        CHECK_FALSE(step.covered.contains(step.sector));
    }
}

}  // namespace

TEST_CASE("basis/cocircuit condition verification") {
    CHECK(verify_bc_condition(two_blocks(), mixed_signs()).ok);

    Matroid m = Matroid::partition(GroundSet(3), {SmallSet::of({0}), SmallSet::of({1, 2})});
    TropConfig v(1, {{T(1)}, {T(2)}, {T(-2)}});
    ConditionReport r = verify_bc_condition(m, v);
    REQUIRE_FALSE(r.ok);
    CHECK(r.witness->first == SmallSet::of({0, 1}));   // basis {a,c}
    CHECK(r.witness->second == SmallSet::of({0}));     // cocircuit {a}
    CHECK(r.witness->sector == 1);                     // second sector, 0-based

    Matroid free1 = Matroid::uniform(GroundSet(1), 1);
    TropConfig origin(2, {{T(0), T(0)}});
    CHECK(verify_bc_condition(free1, origin).ok);
}

TEST_CASE("condition witnesses reproduce under membership") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Matroid m = gen::random_matroid(rng.range(2, 7), rng, 4);
        int d = std::max(m.rank() - 1, 0);
        TropConfig v = gen::random_trop_config(m.n(), d, rng);
        ConditionReport r = verify_bc_condition(m, v);
        if (r.ok) continue;
        auto member = tropical_membership(zeros(d), v.restrict(r.witness->first | r.witness->second));
        CHECK_FALSE(member.inside);
        CHECK(member.uncovered_sector == r.witness->sector);
    }
}

TEST_CASE("greedy colorful basis on the worked example") {
    ColorfulOutcome out = colorful_basis(two_blocks(), mixed_signs());
    REQUIRE(out.status == ColorfulOutcome::Status::found);
    CHECK(sound(out, two_blocks(), mixed_signs()));
    // brute force: {a,c} is the only transversal whose hull misses the target
    CHECK(out.basis != SmallSet::of({0, 2}));
    check_trace(out, two_blocks(), 1);
}

TEST_CASE("already-covering start basis returns with an empty trace") {
    // lexicographic greedy start is {a,c}; make it cover both sectors
    TropConfig v(1, {{T(1)}, {T(2)}, {T(-1)}, {T(-2)}});
    ColorfulOutcome out = colorful_basis(two_blocks(), v);
    REQUIRE(out.status == ColorfulOutcome::Status::found);
    CHECK(out.basis == SmallSet::of({0, 2}));
    CHECK(out.trace.empty());
}

TEST_CASE("pinned greedy keeps the pin") {
    ColorfulOutcome out = colorful_basis(two_blocks(), mixed_signs(), 1);
    REQUIRE(out.status == ColorfulOutcome::Status::found);
    CHECK(out.basis.contains(1));
    CHECK(sound(out, two_blocks(), mixed_signs()));

    Matroid with_loop = Matroid::graphic(GroundSet(2), {{0, 0}, {0, 1}});
    TropConfig v(0, {{}, {}});
    CHECK_THROWS_AS((void)colorful_basis(with_loop, v, 0), InputError);
}

TEST_CASE("violated instances surface a pair, never a missed basis") {
    Matroid m = Matroid::partition(GroundSet(3), {SmallSet::of({0}), SmallSet::of({1, 2})});
    TropConfig v(1, {{T(1)}, {T(2)}, {T(3)}});  // sector 2 never covered
    ColorfulOutcome out = colorful_basis(m, v);
    REQUIRE(out.status == ColorfulOutcome::Status::violated);
    auto member = tropical_membership(zeros(1), v.restrict(out.witness->first | out.witness->second));
    CHECK_FALSE(member.inside);
    CHECK(member.uncovered_sector == out.witness->sector);
}

TEST_CASE("agreement with exhaustive search over bases") {
    Rng rng(32);
    int found = 0, ok_count = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Matroid m = gen::random_matroid(rng.range(2, 8), rng, 4);
        // half the corpus at the theorem dimension, half anywhere
        int d = rng.chance(50, 100) ? std::max(m.rank() - 1, 0) : rng.range(0, 3);
        TropConfig v = gen::random_trop_config(m.n(), d, rng);
        ColorfulOutcome out = colorful_basis(m, v);
        auto brute = brute_covering_basis(m, v);
        CHECK((out.status == ColorfulOutcome::Status::found) == brute.has_value());
        if (brute) {
            CHECK(sound(out, m, v));
            check_trace(out, m, d);
            ++found;
        }
        // the coverage theorem: condition ok at rank d+1 forces success
        if (m.rank() == d + 1 && verify_bc_condition(m, v).ok) {
            CHECK(out.status == ColorfulOutcome::Status::found);
            ++ok_count;
        }
    }
    CHECK(found > 50);
    CHECK(ok_count > 10);
}

TEST_CASE("pin preservation whenever the condition holds at rank d+1") {
    Rng rng(33);
    int exercised = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Matroid m = gen::random_matroid(rng.range(2, 7), rng, 4);
        int d = std::max(m.rank() - 1, 0);
        TropConfig v = gen::random_trop_config(m.n(), d, rng);
        if (!verify_bc_condition(m, v).ok) continue;
        SmallSet non_loops = SmallSet::full(m.n()) - m.loops();
        if (non_loops.empty()) continue;
        int pin = non_loops.min();
        ColorfulOutcome out = colorful_basis(m, v, pin);
        REQUIRE(out.status == ColorfulOutcome::Status::found);
        CHECK(out.basis.contains(pin));
        CHECK(sound(out, m, v));
        ++exercised;
    }
    CHECK(exercised > 10);
}

TEST_CASE("two-cocircuit condition verification") {
    Matroid m = two_blocks();
    TropConfig ok(1, {{T(1)}, {T(1)}, {T(-1)}, {T(-1)}});
    CHECK(verify_two_cocircuit_condition(m, ok).ok);

    TropConfig bad(1, {{T(1)}, {T(1)}, {T(1)}, {T(1)}});
    ConditionReport r = verify_two_cocircuit_condition(m, bad);
    REQUIRE_FALSE(r.ok);
    CHECK(r.witness->sector == 1);

    Matroid rank1 = Matroid::uniform(GroundSet(2), 1);
    CHECK_THROWS_AS((void)verify_two_cocircuit_condition(rank1, ok), InputError);
}

TEST_CASE("two-cocircuit search on the worked example") {
    Matroid m = two_blocks();
    TropConfig ok(1, {{T(1)}, {T(1)}, {T(-1)}, {T(-1)}});
    ColorfulOutcome out = colorful_basis_two_cocircuit(m, ok);
    REQUIRE(out.status == ColorfulOutcome::Status::found);
    CHECK(out.basis == SmallSet::of({0, 2}));  // start basis already covers
    CHECK(out.trace.empty());

    TropConfig bad(1, {{T(1)}, {T(1)}, {T(1)}, {T(1)}});
    ColorfulOutcome v = colorful_basis_two_cocircuit(m, bad);
    REQUIRE(v.status == ColorfulOutcome::Status::violated);
    auto member = tropical_membership(zeros(1), bad.restrict(v.witness->first | v.witness->second));
    CHECK_FALSE(member.inside);
    CHECK(member.uncovered_sector == v.witness->sector);

    CHECK_THROWS_AS((void)colorful_basis_two_cocircuit(Matroid::uniform(GroundSet(2), 1), ok),
                    InputError);
}

TEST_CASE("two-cocircuit search agrees with enumeration at rank d+1") {
    Rng rng(34);
    int found = 0, ok_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Matroid m = gen::random_matroid(rng.range(2, 8), rng, 4);
        int d = m.rank() - 1;
        if (d < 0) continue;
        TropConfig v = gen::random_trop_config(m.n(), d, rng);
        ColorfulOutcome out = colorful_basis_two_cocircuit(m, v);
        auto brute = brute_covering_basis(m, v);
        CHECK((out.status == ColorfulOutcome::Status::found) == brute.has_value());
        if (brute) {
            CHECK(sound(out, m, v));
            check_trace(out, m, d);
            ++found;
        }
        if (verify_two_cocircuit_condition(m, v).ok) {
            CHECK(out.status == ColorfulOutcome::Status::found);
            ++ok_count;
        }
    }
    CHECK(found > 40);
    CHECK(ok_count > 10);
}

TEST_CASE("generic transversal condition on the worked examples") {
    Matroid m = Matroid::partition(GroundSet(2), {SmallSet::of({0}), SmallSet::of({1})});
    TropConfig v(1, {{T(1)}, {T(-1)}});
    RadoReport r = generic_rado_check(m, v);
    REQUIRE(r.generic);
    REQUIRE(r.rado_holds.has_value());
    CHECK(*r.rado_holds);
    CHECK(r.transversal == SmallSet::of({0, 1}));

    TropConfig tie(1, {{T(0)}, {T(-1)}});  // first element has degree 2
    RadoReport nr = generic_rado_check(m, tie);
    CHECK_FALSE(nr.generic);
    CHECK_FALSE(nr.rado_holds.has_value());

    Matroid u12 = Matroid::uniform(GroundSet(2), 1);
    RadoReport fail = generic_rado_check(u12, v);
    REQUIRE(fail.generic);
    CHECK_FALSE(*fail.rado_holds);
    CHECK(fail.violating_sectors == SmallSet::of({0, 1}));
}

TEST_CASE("generic transversal condition matches brute-force search") {
    Rng rng(35);
    int holds = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Matroid m = gen::random_matroid(rng.range(1, 8), rng);
        int d = rng.range(0, 3);
        TropConfig v = gen::random_generic_config(m.n(), d, rng);
        RadoReport r = generic_rado_check(m, v);
        REQUIRE(r.generic);
        bool brute = brute_independent_cover(m, v);
        CHECK(*r.rado_holds == brute);
        if (brute) {
            REQUIRE(r.transversal.has_value());
            CHECK(m.is_independent(*r.transversal));
            CovectorGraph g = covector_graph(v, zeros(d));
            CHECK(g.neighborhood(*r.transversal) == g.all_sectors());
            ++holds;
        }
    }
    CHECK(holds > 20);
}
