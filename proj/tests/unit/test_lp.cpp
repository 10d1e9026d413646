#include "polyescape/lp.hpp"

#include "doctest.h"

#include <random>

using namespace polyescape;

namespace {

// Axis-aligned box [lo1, hi1] x [lo2, hi2].
Polytope box2(const Rational& lo1, const Rational& hi1, const Rational& lo2,
              const Rational& hi2) {
    Polytope p;
    p.b = RatMatrix{{Rational(1), Rational(0)},
                    {Rational(-1), Rational(0)},
                    {Rational(0), Rational(1)},
                    {Rational(0), Rational(-1)}};
    p.c = RatVector{hi1, -lo1, hi2, -lo2};
    return p;
}

}  // namespace

TEST_CASE("lp_optimize on a box is exact") {
    const Polytope p = box2(Rational(1), Rational(2), Rational(-1, 3), Rational(5, 3));
    const RatVector obj{Rational(1), Rational(2)};

    const LpOutcome mx = lp_optimize(p, obj, LpSense::Max);
    REQUIRE(mx.status == LpStatus::Optimal);
    CHECK(mx.value == Rational(2) + Rational(10, 3));
    CHECK(p.contains(mx.witness));

    const LpOutcome mn = lp_optimize(p, obj, LpSense::Min);
    REQUIRE(mn.status == LpStatus::Optimal);
    CHECK(mn.value == Rational(1) - Rational(2, 3));
    CHECK(p.contains(mn.witness));
}

TEST_CASE("infeasible and unbounded are classified with witnesses") {
    Polytope empty;
    empty.b = RatMatrix{{Rational(1)}, {Rational(-1)}};
    empty.c = RatVector{Rational(0), Rational(-1)};  // x <= 0 and x >= 1
    CHECK(lp_optimize(empty, RatVector{Rational(1)}, LpSense::Max).status ==
          LpStatus::Infeasible);

    Polytope half;
    half.b = RatMatrix{{Rational(-1)}};
    half.c = RatVector{Rational(0)};  // x >= 0
    const LpOutcome up = lp_optimize(half, RatVector{Rational(1)}, LpSense::Max);
    REQUIRE(up.status == LpStatus::Unbounded);
    // recession ray: B r <= 0 and strictly improving
    CHECK((half.b * up.witness)[0] <= 0);
    CHECK(up.witness[0] > 0);
}

TEST_CASE("feasibility with equalities finds exact points") {
    const Polytope p = box2(Rational(0), Rational(1), Rational(0), Rational(1));
    RatMatrix e(1, 2);
    e.at(0, 0) = 1;
    e.at(0, 1) = 1;

    const LpOutcome on = lp_feasible_with_equalities(p, e, RatVector{Rational(3, 2)});
    REQUIRE(on.status == LpStatus::Optimal);
    CHECK(on.witness[0] + on.witness[1] == Rational(3, 2));
    CHECK(p.contains(on.witness));

    const LpOutcome off = lp_feasible_with_equalities(p, e, RatVector{Rational(3)});
    CHECK(off.status == LpStatus::Infeasible);
}

TEST_CASE("compactness classification") {
    CHECK(is_compact_nonempty(box2(Rational(0), Rational(1), Rational(0), Rational(1))) ==
          Compactness::CompactNonempty);

    Polytope unbounded;
    unbounded.b = RatMatrix{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
    unbounded.c = RatVector{Rational(0), Rational(0)};
    CHECK(is_compact_nonempty(unbounded) == Compactness::Unbounded);

    Polytope empty;
    empty.b = RatMatrix{{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
    empty.c = RatVector{Rational(0), Rational(-1)};
    CHECK(is_compact_nonempty(empty) == Compactness::Empty);
}

TEST_CASE("vertices of boxes and simplices are exact, sorted, deduplicated") {
    const auto vb = vertices(box2(Rational(1), Rational(2), Rational(1), Rational(2)));
    REQUIRE(vb.size() == 4);
    CHECK(vb[0] == RatVector{Rational(1), Rational(1)});
    CHECK(vb[1] == RatVector{Rational(1), Rational(2)});
    CHECK(vb[2] == RatVector{Rational(2), Rational(1)});
    CHECK(vb[3] == RatVector{Rational(2), Rational(2)});

    // simplex x, y >= 0, x + y <= 1
    Polytope s;
    s.b = RatMatrix{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)},
                    {Rational(1), Rational(1)}};
    s.c = RatVector{Rational(0), Rational(0), Rational(1)};
    const auto vs = vertices(s);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0] == RatVector{Rational(0), Rational(0)});
    CHECK(vs[1] == RatVector{Rational(0), Rational(1)});
    CHECK(vs[2] == RatVector{Rational(1), Rational(0)});

    // a degenerate face (line segment embedded in 3d): exactly two vertices
    Polytope seg;
    seg.b = RatMatrix{{Rational(1), Rational(0), Rational(0)},
                      {Rational(-1), Rational(0), Rational(0)},
                      {Rational(0), Rational(1), Rational(0)},
                      {Rational(0), Rational(-1), Rational(0)},
                      {Rational(0), Rational(0), Rational(1)},
                      {Rational(0), Rational(0), Rational(-1)}};
    seg.c = RatVector{Rational(0), Rational(0), Rational(1), Rational(-1), Rational(1),
                      Rational(0)};
    const auto vseg = vertices(seg);
    REQUIRE(vseg.size() == 2);
    CHECK(vseg[0] == RatVector{Rational(0), Rational(1), Rational(0)});
    CHECK(vseg[1] == RatVector{Rational(0), Rational(1), Rational(1)});
}

TEST_CASE("LP witnesses satisfy constraints with zero tolerance") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational lo1(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        const Rational lo2(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        const Polytope p = box2(lo1, lo1 + 1 + Rational(static_cast<long>(rng() % 3)), lo2,
                                lo2 + Rational(1, 2));
        RatVector obj{Rational(static_cast<long>(rng() % 11) - 5),
                      Rational(static_cast<long>(rng() % 11) - 5)};
        const LpOutcome out = lp_optimize(p, obj, trial % 2 ? LpSense::Max : LpSense::Min);
        REQUIRE(out.status == LpStatus::Optimal);
        for (std::size_t i = 0; i < p.constraint_count(); ++i)
            CHECK(p.b.row(i).dot(out.witness) <= p.c[i]);
    }
}
