#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qc/icosian.hpp"
#include "qc/quasiadd.hpp"

using namespace qc;

namespace {

GoldenInt gi(long a, long b) { return GoldenInt(Int(a), Int(b)); }
GoldenRat gr(long num, long den = 1) { return GoldenRat(Rat(num, den)); }

Coords rand_coords(std::mt19937_64& g, int pairs, long bound = 200) {
    Coords c(pairs);
    for (auto& x : c) x = qc::testing::rand_golden_int(g, bound);
    return c;
}

// Independent oracle: the componentwise integral-coordinate formula.
std::array<Int, 8> z8_qadd_oracle(const std::array<Int, 8>& x, const std::array<Int, 8>& y) {
    std::array<Int, 8> r;
    for (int k = 0; k < 4; ++k) {
        Int da = x[2 * k] - y[2 * k];
        Int db = x[2 * k + 1] - y[2 * k + 1];
        r[2 * k] = da + db + y[2 * k];
        r[2 * k + 1] = da + db + x[2 * k + 1];
    }
    return r;
}

}  // namespace

TEST_CASE("qadd: pinned examples") {
    Coords zero = {gi(0, 0)}, one_tau = {gi(1, 1)};
    CHECK(qadd(one_tau, one_tau) == one_tau);
    CHECK(qadd(zero, one_tau) == Coords{gi(-1, -2)});
    CHECK(qadd(one_tau, zero) == Coords{gi(2, 3)});
}

TEST_CASE("qadd_repeated: closed form matches iteration") {
    Coords zero = {gi(0, 0)}, x = {gi(1, 1)};
    CHECK(qadd_repeated_iterative(zero, x, 2) == Coords{gi(-4, -7)});
    CHECK(qadd_repeated_closed(zero, x, 2) == Coords{gi(-4, -7)});
    CHECK(qadd_repeated_closed(x, x, 5) == x);
    // k = 1 is y |- x = (1+tau)(y-x) + x
    auto g = qc::testing::rng(21);
    for (int i = 0; i < 2000; ++i) {
        Coords a = rand_coords(g, 2), b = rand_coords(g, 2);
        CHECK(qadd_repeated_closed(a, b, 1) == qadd(a, b));
        long k = qc::testing::rand_long(g, 1, 10);
        CHECK(qadd_repeated_iterative(a, b, k) == qadd_repeated_closed(a, b, k));
    }
    CHECK_THROWS_AS(qadd_repeated_closed(zero, x, 0), std::invalid_argument);
}

TEST_CASE("integral-coordinate formula equals the pair arithmetic") {
    auto g = qc::testing::rng(22);
    for (int i = 0; i < 10000; ++i) {
        std::array<Int, 8> xz, yz;
        for (auto& v : xz) v = qc::testing::rand_long(g, -100, 100);
        for (auto& v : yz) v = qc::testing::rand_long(g, -100, 100);
        Coords x(4), y(4);
        for (int k = 0; k < 4; ++k) {
            x[k] = GoldenInt(xz[2 * k], xz[2 * k + 1]);
            y[k] = GoldenInt(yz[2 * k], yz[2 * k + 1]);
        }
        Coords r = qadd(x, y);
        auto oracle = z8_qadd_oracle(xz, yz);
        for (int k = 0; k < 4; ++k) {
            CHECK(r[k].a() == oracle[2 * k]);
            CHECK(r[k].b() == oracle[2 * k + 1]);
        }
    }
}

TEST_CASE("star compatibility identity on random pairs") {
    auto g = qc::testing::rng(23);
    Scheme fib = preset("fibonacci-palindromic");
    Scheme pen = preset("penrose");
    Scheme z6 = preset("z6");
    for (int i = 0; i < 10000; ++i) {
        CHECK(star_compatibility_holds(fib, rand_coords(g, 1), rand_coords(g, 1)));
        CHECK(star_compatibility_holds(pen, rand_coords(g, 2, 50), rand_coords(g, 2, 50)));
        CHECK(star_compatibility_holds(z6, rand_coords(g, 3, 30), rand_coords(g, 3, 30)));
    }
}

TEST_CASE("identities hold on random triples") {
    auto g = qc::testing::rng(24);
    for (int i = 0; i < 10000; ++i) {
        auto rep = check_identities(rand_coords(g, 1), rand_coords(g, 1), rand_coords(g, 1));
        CHECK(rep.ok());
    }
    Coords z = {gi(0, 0)};
    CHECK(check_identities(z, z, z).ok());
}

TEST_CASE("fixed point law: x|-y = x iff y = x") {
    Scheme s = preset("fibonacci-palindromic");
    auto pts = enumerate_points(s, gr(9));
    for (const auto& p : pts)
        for (const auto& q : pts) {
            bool fixed = qadd(p.coords, q.coords) == p.coords;
            CHECK(fixed == (p.coords == q.coords));
        }
}

TEST_CASE("non-commutativity and non-associativity witnesses") {
    Coords x = {gi(0, 0)}, y = {gi(1, 1)};
    CHECK(qadd(x, y) != qadd(y, x));
    Coords z = {gi(1, 0)};
    CHECK(qadd(qadd(x, y), z) != qadd(x, qadd(y, z)));
}

TEST_CASE("closure over the palindromic chain: all 81 ordered pairs") {
    Scheme s = preset("fibonacci-palindromic");
    auto pts = enumerate_points(s, gr(9));
    REQUIRE(pts.size() == 9);
    auto rep = check_closure(s, pts);
    CHECK(rep.pairs == 81);
    CHECK(rep.ok());
    // single point: x |- x = x, trivially closed
    std::vector<QcPoint> one = {pts[0]};
    CHECK(check_closure(s, one).ok());
}

TEST_CASE("closure fails for a non-convex region") {
    Scheme s = preset("fibonacci-palindromic");
    auto region = [](const VecR& p) {
        GoldenRat v = p[0];
        GoldenRat lo(Rat(1, 5)), hi(Rat(1, 2));
        return ((-hi <= v && v <= -lo) || (lo <= v && v <= hi));
    };
    auto all = enumerate_points(s, gr(30));
    std::vector<QcPoint> pts;
    for (const auto& p : all)
        if (region(p.star)) pts.push_back(p);
    REQUIRE(pts.size() > 4);
    auto rep = check_closure_region(s, pts, region);
    CHECK(!rep.ok());
    // and the violating pair really leaves the region
    const auto& [vx, vy] = rep.violations.front();
    CHECK(!region(s.star_of(qadd(vx, vy))));
}

TEST_CASE("closure on penrose and z6 batches") {
    for (const char* name : {"penrose", "z6"}) {
        Scheme s = preset(name);
        auto pts = enumerate_points(s, gr(5, 2));
        REQUIRE(!pts.empty());
        CHECK(check_closure(s, pts).ok());
    }
}

TEST_CASE("icosian quasi-addition respects the ring") {
    // doubled coordinates follow the same pair formula; ring elements stay
    // ring elements
    auto g = qc::testing::rng(25);
    const auto& ring = IcosianLattice::ring();
    auto table = build_icosian_group();
    for (int i = 0; i < 500; ++i) {
        const Icosian& a = table.elements[qc::testing::rand_long(g, 0, 119)];
        const Icosian& b = table.elements[qc::testing::rand_long(g, 0, 119)];
        Coords x(4), y(4);
        for (int k = 0; k < 4; ++k) {
            x[k] = a.doubled(k);
            y[k] = b.doubled(k);
        }
        Coords r = qadd(x, y);
        CHECK(ring.contains(Icosian::from_doubled(r[0], r[1], r[2], r[3])));
    }
}
