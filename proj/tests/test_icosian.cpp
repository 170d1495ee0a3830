#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qc/icosian.hpp"

using namespace qc;

namespace {

const IcosianGroupTable& group() {
    static const IcosianGroupTable t = build_icosian_group();
    return t;
}

Icosian rand_ring_element(std::mt19937_64& g, int terms = 4, long coeff = 3) {
    Icosian x;
    for (int i = 0; i < terms; ++i) {
        long c = qc::testing::rand_long(g, -coeff, coeff);
        const Icosian& e = group().elements[qc::testing::rand_long(g, 0, 119)];
        x = x + GoldenInt(Int(c), 0) * e;
    }
    return x;
}

}  // namespace

TEST_CASE("quat_mul: pinned examples") {
    CHECK(Icosian::unit(1) * Icosian::unit(2) == Icosian::unit(3));
    GoldenInt one(1, 0);
    Icosian h = Icosian::from_doubled(one, one, one, one);  // (1+i+j+k)/2
    CHECK(h * h.conj() == Icosian::unit(0));
    auto g = qc::testing::rng(11);
    Icosian y = rand_ring_element(g);
    CHECK(Icosian::unit(0) * y == y);
}

TEST_CASE("quaternionic and euclidean norms: pinned examples") {
    CHECK(Icosian::unit(0).quaternionic_norm() == GoldenRat::one());
    Icosian t = Icosian::real(GoldenInt::tau());
    CHECK(t.quaternionic_norm() == GoldenRat(Rat(3, 2), Rat(1, 2)));
    CHECK(Icosian::unit(0).euclidean_norm() == Rat(1));
    CHECK(t.euclidean_norm() == Rat(2));
}

TEST_CASE("icosian group: size, unit norms, closure, A5") {
    const auto& t = group();
    CHECK(t.elements.size() == 120);
    for (const auto& x : t.elements) {
        CHECK(x.quaternionic_norm() == GoldenRat::one());
        CHECK(x.euclidean_norm() == Rat(1));
    }
    // contains +-1, +-i, +-j, +-k
    for (int k = 0; k < 4; ++k) {
        CHECK(t.index_of(Icosian::unit(k)) >= 0);
        CHECK(t.index_of(-Icosian::unit(k)) >= 0);
    }
    // pinned correspondences
    GoldenInt one(1, 0), tau(0, 1), inv_tau(-1, 1);
    CHECK(t.a5_image[t.index_of(Icosian::unit(1))] == Perm5::from_cycles("(2,3)(4,5)"));
    CHECK(t.a5_image[t.index_of(Icosian::unit(2))] == Perm5::from_cycles("(2,4)(5,3)"));
    CHECK(t.a5_image[t.index_of(Icosian::unit(3))] == Perm5::from_cycles("(2,5)(3,4)"));
    Icosian w = Icosian::from_doubled(-one, one, one, one);
    CHECK(t.a5_image[t.index_of(w)] == Perm5::from_cycles("(3,4,5)"));
    Icosian v = Icosian::from_doubled(GoldenInt(), one, -inv_tau, tau);
    CHECK(t.a5_image[t.index_of(v)] == Perm5::from_cycles("(1,3)(4,5)"));

    // homomorphism property over the whole table
    for (int i = 0; i < 120; i += 7)
        for (int j = 0; j < 120; ++j)
            CHECK(t.a5_image[t.product_index[i][j]] == t.a5_image[i].then(t.a5_image[j]));
}

TEST_CASE("z8 coordinates and star consistency") {
    auto g = qc::testing::rng(12);
    for (int i = 0; i < 10000; ++i) {
        std::array<Int, 8> z;
        for (auto& c : z) c = qc::testing::rand_long(g, -50, 50);
        Icosian x = Icosian::from_z8(z);
        CHECK(x.to_z8() == z);
        // componentwise star map in integral coordinates:
        // (a,b,...) -> (a+b, -b, ...)
        std::array<Int, 8> zs;
        for (int k = 0; k < 4; ++k) {
            zs[2 * k] = z[2 * k] + z[2 * k + 1];
            zs[2 * k + 1] = -z[2 * k + 1];
        }
        CHECK(x.star() == Icosian::from_z8(zs));
        CHECK(x.star().star() == x);
    }
    // strict halves refuse z8 conversion
    GoldenInt one(1, 0);
    CHECK_THROWS(Icosian::from_doubled(one, one, one, one).to_z8());
}

TEST_CASE("norm multiplicativity on random ring pairs") {
    auto g = qc::testing::rng(13);
    for (int i = 0; i < 10000; ++i) {
        Icosian x = rand_ring_element(g), y = rand_ring_element(g);
        CHECK((x * y).quaternionic_norm() == x.quaternionic_norm() * y.quaternionic_norm());
    }
}

TEST_CASE("euclidean norm is a positive-definite integer form on the ring") {
    auto g = qc::testing::rng(14);
    for (int i = 0; i < 10000; ++i) {
        Icosian x = rand_ring_element(g);
        Rat n = x.euclidean_norm();
        CHECK(n.get_den() == 1);
        if (x.is_zero())
            CHECK(n == 0);
        else
            CHECK(n > 0);
    }
    CHECK(Icosian().euclidean_norm() == 0);
}

TEST_CASE("ring lattice: membership and structure") {
    const auto& ring = IcosianLattice::ring();
    CHECK(ring.rank() == 8);
    auto g = qc::testing::rng(15);
    for (int i = 0; i < 500; ++i) {
        CHECK(ring.contains(rand_ring_element(g)));
    }
    // a strict half outside the ring: (1/2) * 1
    CHECK(!ring.contains(Icosian::from_doubled(GoldenInt(1, 0), {}, {}, {})));
    // tau * anything in the ring stays in the ring
    for (int i = 0; i < 200; ++i)
        CHECK(ring.contains(GoldenInt::tau() * rand_ring_element(g)));

    const auto& pure = IcosianLattice::pure();
    CHECK(pure.rank() == 6);
    for (const auto& e : group().elements)
        if (e.is_pure()) CHECK(pure.contains(e));
    CHECK(!pure.contains(Icosian::unit(0)));
    // Z[tau]-span of {i, j, w0} equals the pure lattice, w0 = (i + j/tau + tau k)/2
    GoldenInt one(1, 0), tau(0, 1), inv_tau(-1, 1);
    Icosian w0 = Icosian::from_doubled({}, one, inv_tau, tau);
    std::vector<std::array<Int, 8>> gens;
    for (const Icosian& b : {Icosian::unit(1), Icosian::unit(2), w0}) {
        gens.push_back(b.doubled_z8());
        gens.push_back((GoldenInt::tau() * b).doubled_z8());
    }
    auto span = IcosianLattice::from_generators(gens);
    CHECK(span.rank() == 6);
    CHECK(span.pivot_product() == pure.pivot_product());
    for (const auto& row : pure.basis()) CHECK(span.contains(row));
}

TEST_CASE("e8 projections: pinned examples") {
    std::array<Int, 8> zero{};
    CHECK(e8_project_parallel(zero).is_zero());
    CHECK(e8_project_perp(zero).is_zero());

    std::array<Int, 8> e1{};
    e1[0] = 1;
    GoldenInt one(1, 0), tau(0, 1), inv_tau(-1, 1);
    // iota(a1) = (1/tau - tau i - k)/2
    Icosian a1 = Icosian::from_doubled(inv_tau, -tau, GoldenInt(), -one);
    CHECK(e8_project_parallel(e1) == a1);
    CHECK(e8_project_perp(e1) == a1.star());
}

TEST_CASE("e8 lattice maps bijectively onto the icosian ring") {
    const auto& ring = IcosianLattice::ring();
    // image of each basis vector lies in the ring
    std::vector<std::array<Int, 8>> images;
    for (int j = 0; j < 8; ++j) {
        std::array<Int, 8> e{};
        e[j] = 1;
        Icosian x = e8_project_parallel(e);
        CHECK(ring.contains(x));
        images.push_back(x.doubled_z8());
    }
    // covolume match <=> surjectivity given containment
    auto image_lattice = IcosianLattice::from_generators(images);
    CHECK(image_lattice.rank() == 8);
    CHECK(image_lattice.pivot_product() == ring.pivot_product());

    // exact inverse on random coefficient vectors
    auto g = qc::testing::rng(16);
    for (int i = 0; i < 2000; ++i) {
        std::array<Int, 8> c;
        for (auto& v : c) v = qc::testing::rand_long(g, -40, 40);
        Icosian x = e8_project_parallel(c);
        auto back = e8_coefficients(x);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
}

TEST_CASE("parallel images within a euclidean-norm ball are closed under addition") {
    // Enumerate ring elements with small euclidean norm via the group scaled
    // by small Z[tau] factors, then check pairwise sums stay in the image set
    // whenever their norm allows.
    auto g = qc::testing::rng(17);
    const Rat radius(6);
    std::vector<Icosian> pts;
    for (int i = 0; i < 400; ++i) {
        Icosian x = rand_ring_element(g, 2, 1);
        if (x.euclidean_norm() <= radius) pts.push_back(x);
    }
    for (std::size_t i = 0; i < pts.size(); i += 7)
        for (std::size_t j = 0; j < pts.size(); j += 11) {
            Icosian s = pts[i] + pts[j];
            auto c = e8_coefficients(s);
            REQUIRE(c.has_value());
            CHECK(e8_project_parallel(*c) == s);
        }
}
