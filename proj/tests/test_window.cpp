#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qc/window.hpp"

using namespace qc;

namespace {

GoldenRat gr(long num, long den = 1) { return GoldenRat(Rat(num, den)); }
const GoldenRat T = GoldenRat::tau();

// Pentagon with vertices xi^k in scaled coordinates (x, y/sin72).
std::vector<VecR> pentagon_vertices() {
    GoldenRat c1 = (T - GoldenRat::one()) * gr(1, 2);  // cos 72
    GoldenRat c2 = -T * gr(1, 2);                      // cos 144
    GoldenRat s2 = T - GoldenRat::one();               // sin144 / sin72
    return {
        {GoldenRat::one(), GoldenRat::zero()},
        {c1, GoldenRat::one()},
        {c2, s2},
        {c2, -s2},
        {c1, -GoldenRat::one()},
    };
}

std::vector<VecR> triacontahedron_vertices() {
    std::vector<VecR> out;
    GoldenRat one = GoldenRat::one(), tau = T, itau = T - GoldenRat::one();
    auto add_cyclic = [&](GoldenRat a, GoldenRat b, GoldenRat c) {
        for (int rot = 0; rot < 3; ++rot) {
            for (int sb : {1, -1})
                for (int sc : {1, -1}) {
                    VecR v = {a, sb > 0 ? b : -b, sc > 0 ? c : -c};
                    std::rotate(v.begin(), v.begin() + rot, v.end());
                    out.push_back(v);
                }
        }
    };
    add_cyclic(GoldenRat::zero(), one, tau);    // icosahedron
    add_cyclic(GoldenRat::zero(), tau, itau);   // dodecahedron, cyclic part
    for (int m = 0; m < 8; ++m)
        out.push_back({(m & 1) ? -one : one, (m & 2) ? -one : one, (m & 4) ? -one : one});
    return out;
}

int incident_vertices(const ConvexWindow& w, const Facet& f) {
    int n = 0;
    for (const auto& v : w.vertices())
        if (golden_compare(dot(f.normal, v), f.offset) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("interval window from vertices") {
    ConvexWindow w = facets_from_vertices(1, {{gr(-1, 2)}, {gr(1, 2)}});
    CHECK(w.facets().size() == 2);
    CHECK(w.contains({gr(0)}));
    CHECK(w.contains({gr(1, 2)}));
    CHECK(!w.contains({gr(3, 4)}));
    // star of 1+tau is 2-tau, inside [-1/2, 1/2]
    CHECK(w.contains({gr(2) - T}));
    CHECK(!w.contains({gr(1)}));
}

TEST_CASE("pentagon window: five facets, two incident vertices each") {
    ConvexWindow w = facets_from_vertices(2, pentagon_vertices());
    CHECK(w.facets().size() == 5);
    for (const auto& f : w.facets()) CHECK(incident_vertices(w, f) == 2);
    // contains the origin and all vertices (closed boundary)
    CHECK(w.contains({gr(0), gr(0)}));
    for (const auto& v : pentagon_vertices()) CHECK(w.contains(v));
    // xi^4 is a vertex
    CHECK(w.contains({(T - GoldenRat::one()) * gr(1, 2), -GoldenRat::one()}));
    CHECK(!w.contains({gr(2), gr(0)}));
    CHECK(!w.contains({-T * gr(1, 2) - gr(1, 100), gr(0)}));
}

TEST_CASE("pentagon facet keys are insertion-order independent") {
    auto verts = pentagon_vertices();
    ConvexWindow a = facets_from_vertices(2, verts);
    std::reverse(verts.begin(), verts.end());
    std::swap(verts[0], verts[2]);
    ConvexWindow b = facets_from_vertices(2, verts);
    CHECK(a.facet_keys() == b.facet_keys());
}

TEST_CASE("rhombic triacontahedron: 30 facets and Euler count") {
    auto verts = triacontahedron_vertices();
    std::sort(verts.begin(), verts.end(), vec_lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    CHECK(verts.size() == 32);
    ConvexWindow w = facets_from_vertices(3, verts);
    CHECK(w.facets().size() == 30);
    int edge_halves = 0;
    for (const auto& f : w.facets()) {
        int k = incident_vertices(w, f);
        CHECK(k == 4);  // rhombic faces
        edge_halves += k;
    }
    int V = 32, E = edge_halves / 2, F = static_cast<int>(w.facets().size());
    CHECK(V - E + F == 2);
    // inradius is tau: the support offset of every unit-normalized facet
    for (const auto& f : w.facets()) {
        GoldenRat n2 = dot(f.normal, f.normal);
        CHECK(f.offset * f.offset == n2 * T * T);
    }
    CHECK(w.contains({gr(1), gr(0), gr(0)}));
    CHECK(w.contains({gr(0), gr(0), gr(0)}));
    CHECK(!w.contains({gr(2), gr(0), gr(0)}));
}

TEST_CASE("degenerate hulls are rejected") {
    CHECK_THROWS_AS(facets_from_vertices(2, {{gr(0), gr(0)}, {gr(1), gr(1)}, {gr(2), gr(2)}}),
                    WindowError);
    CHECK_THROWS_AS(facets_from_vertices(2, {{gr(0), gr(0)}, {gr(1), gr(0)}}), WindowError);
    CHECK_THROWS_AS(
        facets_from_vertices(3, {{gr(0), gr(0), gr(0)},
                                 {gr(1), gr(0), gr(0)},
                                 {gr(0), gr(1), gr(0)},
                                 {gr(1), gr(1), gr(0)}}),
        WindowError);
}

TEST_CASE("boundary policy: half-open interval (0,1]") {
    ConvexWindow w = ConvexWindow::interval(gr(0), gr(1), /*lo_closed=*/false, true);
    CHECK(!w.contains({gr(0)}));
    CHECK(w.contains({gr(1)}));
    CHECK(w.contains({gr(1, 2)}));
    CHECK(!w.contains({gr(2)}));
}

TEST_CASE("translate window: (0,1] shifted by -1/2 gives (-1/2,1/2]") {
    ConvexWindow w = ConvexWindow::interval(gr(0), gr(1), false, true);
    ConvexWindow t = w.translated({gr(-1, 2)});
    CHECK(!t.contains({gr(-1, 2)}));
    CHECK(t.contains({gr(1, 2)}));
    CHECK(t.contains({gr(0)}));
    CHECK(!t.contains({gr(3, 4)}));
    // zero shift is the identity
    ConvexWindow z = w.translated({gr(0)});
    CHECK(z.facet_keys() == w.facet_keys());
}

TEST_CASE("kappa-scaled window membership") {
    ConvexWindow w = facets_from_vertices(1, {{gr(-1)}, {gr(1)}}, /*kappa_scaled=*/true);
    // true window is [-kappa, kappa], kappa ~ 0.6015
    CHECK(w.contains({gr(3, 5)}));
    CHECK(!w.contains({gr(61, 100)}));
    CHECK(w.contains({gr(-3, 5)}));
    CHECK(!w.contains({gr(-61, 100)}));
    auto box = w.outer_bbox();
    CHECK(box[0].first <= gr(-3, 5));
    CHECK(gr(3, 5) <= box[0].second);
    CHECK_THROWS_AS(w.translated({gr(1, 10)}), WindowError);
}

TEST_CASE("window JSON round-trip and revalidation") {
    ConvexWindow w = facets_from_vertices(2, pentagon_vertices());
    std::string text = w.to_json();
    ConvexWindow back = ConvexWindow::from_json(text);
    CHECK(back.dim() == 2);
    CHECK(back.facet_keys() == w.facet_keys());
    CHECK(back.vertices().size() == w.vertices().size());
    CHECK_THROWS_AS(ConvexWindow::from_json("{\"schema\":\"nope\"}"), WindowError);
    CHECK_THROWS_AS(ConvexWindow::from_json("not json"), WindowError);
    // tampered offsets fail revalidation
    std::string bad = text;
    auto pos = bad.find("\"offset\"");
    pos = bad.find(':', pos);
    bad.replace(pos + 1, bad.find(',', pos) - pos - 1, " \"0+0*sqrt5\"");
    CHECK_THROWS_AS(ConvexWindow::from_json(bad), WindowError);
}

TEST_CASE("outer bbox encloses the vertices") {
    ConvexWindow w = facets_from_vertices(2, pentagon_vertices());
    auto box = w.outer_bbox();
    for (const auto& v : w.vertices()) {
        CHECK(box[0].first <= v[0]);
        CHECK(v[0] <= box[0].second);
        CHECK(box[1].first <= v[1]);
        CHECK(v[1] <= box[1].second);
    }
}
