#include "qc/scheme.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "qc/icosian.hpp"
#include "qc/parallel.hpp"

namespace qc {

namespace {

const GoldenRat kOne = GoldenRat::one();
const GoldenRat kTau = GoldenRat::tau();
const GoldenRat kHalf = GoldenRat(Rat(1, 2));
const GoldenRat kCos72 = (kTau - kOne) * kHalf;
const GoldenRat kSin72Sq{Rat(5, 8), Rat(1, 8)};  // sin^2(72 deg)

GoldenRat gval(const GoldenInt& x) { return x.to_rat(); }

std::vector<VecR> pentagon_vertices() {
    GoldenRat c2 = -kTau * kHalf;
    GoldenRat s2 = kTau - kOne;
    return {{kOne, GoldenRat::zero()},
            {kCos72, kOne},
            {c2, s2},
            {c2, -s2},
            {kCos72, -kOne}};
}

// Rhombic triacontahedron in the orientation aligned with the inner-space
// action of the icosian group (conjugation by Galois-conjugated units). The
// mirror orientation is not preserved by that action.
std::vector<VecR> triacontahedron_vertices() {
    std::vector<VecR> out;
    GoldenRat itau = kTau - kOne;
    auto add_cyclic = [&](GoldenRat a, GoldenRat b, GoldenRat c) {
        for (int rot = 0; rot < 3; ++rot)
            for (int sb : {1, -1})
                for (int sc : {1, -1}) {
                    VecR v = {a, sb > 0 ? b : -b, sc > 0 ? c : -c};
                    std::rotate(v.begin(), v.begin() + rot, v.end());
                    out.push_back(v);
                }
    };
    add_cyclic(GoldenRat::zero(), kTau, kOne);
    add_cyclic(GoldenRat::zero(), itau, kTau);
    for (int m = 0; m < 8; ++m)
        out.push_back({(m & 1) ? -kOne : kOne, (m & 2) ? -kOne : kOne, (m & 4) ? -kOne : kOne});
    std::sort(out.begin(), out.end(), vec_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

VecR Scheme::star_of(const Coords& c) const {
    switch (kind) {
        case SchemeKind::fibonacci:
            return {gval(c[0].star())};
        case SchemeKind::penrose: {
            GoldenRat us = gval(c[0].star()), vs = gval(c[1].star());
            return {us + kCos72 * vs, -vs};
        }
        case SchemeKind::z6:
            return {gval(c[0].star()), gval(c[1].star()), gval(c[2].star())};
        case SchemeKind::z6_icosian:
            return {gval(c[0].star()) * kHalf, gval(c[1].star()) * kHalf,
                    gval(c[2].star()) * kHalf};
        case SchemeKind::elser_sloane:
            return {gval(c[0].star()) * kHalf, gval(c[1].star()) * kHalf,
                    gval(c[2].star()) * kHalf, gval(c[3].star()) * kHalf};
    }
    throw std::logic_error("star_of: bad scheme");
}

VecR Scheme::phys_of(const Coords& c) const {
    switch (kind) {
        case SchemeKind::fibonacci:
            return {gval(c[0])};
        case SchemeKind::penrose: {
            GoldenRat u = gval(c[0]), v = gval(c[1]);
            return {u - kTau * kHalf * v, v * (kTau - kOne)};
        }
        case SchemeKind::z6:
            return {gval(c[0]), gval(c[1]), gval(c[2])};
        case SchemeKind::z6_icosian:
            return {gval(c[0]) * kHalf, gval(c[1]) * kHalf, gval(c[2]) * kHalf};
        case SchemeKind::elser_sloane:
            return {gval(c[0]) * kHalf, gval(c[1]) * kHalf, gval(c[2]) * kHalf,
                    gval(c[3]) * kHalf};
    }
    throw std::logic_error("phys_of: bad scheme");
}

GoldenRat Scheme::phys_norm2(const Coords& c) const {
    VecR p = phys_of(c);
    if (kind == SchemeKind::penrose) return p[0] * p[0] + kSin72Sq * p[1] * p[1];
    return dot(p, p);
}

bool Scheme::lattice_contains(const Coords& c) const {
    if (kind == SchemeKind::z6_icosian)
        return IcosianLattice::pure().contains(
            Icosian::from_doubled(GoldenInt(), c[0], c[1], c[2]));
    if (kind == SchemeKind::elser_sloane)
        return IcosianLattice::ring().contains(Icosian::from_doubled(c[0], c[1], c[2], c[3]));
    return true;
}

QcPoint Scheme::make_point(const Coords& c) const {
    if (static_cast<int>(c.size()) != pairs)
        throw std::invalid_argument("make_point: wrong coordinate count");
    if (!lattice_contains(c)) throw std::runtime_error("make_point: not a lattice point");
    VecR star = star_of(c);
    if (!window.contains(star))
        throw std::runtime_error("make_point: inner image outside the acceptance window");
    return {c, std::move(star)};
}

Scheme preset(const std::string& name) {
    if (name == "fibonacci-palindromic") {
        return {SchemeKind::fibonacci, name, 1, 1, 1, 1,
                ConvexWindow::interval(GoldenRat(Rat(-1, 2)), GoldenRat(Rat(1, 2)))};
    }
    if (name == "fibonacci") {
        return {SchemeKind::fibonacci, name, 1, 1, 1, 1,
                ConvexWindow::interval(GoldenRat::zero(), kOne, /*lo_closed=*/false, true)};
    }
    if (name == "penrose") {
        return {SchemeKind::penrose, name, 2, 2, 2, 1, facets_from_vertices(2, pentagon_vertices())};
    }
    if (name == "z6") {
        return {SchemeKind::z6, name, 3, 3, 3, 1,
                facets_from_vertices(3, triacontahedron_vertices())};
    }
    if (name == "z6-icosian") {
        return {SchemeKind::z6_icosian, name, 3, 3, 3, 2,
                facets_from_vertices(3, triacontahedron_vertices())};
    }
    if (name == "elser-sloane") {
        return {SchemeKind::elser_sloane, name, 4, 4, 4, 2, load_elser_sloane_window()};
    }
    throw std::invalid_argument("unknown scheme preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"fibonacci-palindromic", "fibonacci", "penrose", "z6", "z6-icosian", "elser-sloane"};
}

Scheme with_window(Scheme s, ConvexWindow w) {
    if (w.dim() != s.inner_dim) throw std::invalid_argument("with_window: dimension mismatch");
    s.window = std::move(w);
    return s;
}

Scheme translate_window(const Scheme& s, const VecR& shift) {
    Scheme out = s;
    out.window = s.window.translated(shift);
    return out;
}

namespace {

// Integer pairs (a, b) with a + tau b in [wlo, whi] and a + (1-tau) b in
// [slo, shi]; complete by construction, exact by filtering.
std::vector<GoldenInt> pair_candidates(const GoldenRat& wlo, const GoldenRat& whi,
                                       const GoldenRat& slo, const GoldenRat& shi) {
    const GoldenRat inv_sqrt5 = GoldenRat::sqrt5() * GoldenRat(Rat(1, 5));
    const GoldenRat one_minus_tau = kOne - kTau;
    Int blo = ((wlo - shi) * inv_sqrt5).ceil();
    Int bhi = ((whi - slo) * inv_sqrt5).floor();
    std::vector<GoldenInt> out;
    for (Int b = blo; b <= bhi; ++b) {
        GoldenRat tb = kTau * GoldenRat(Rat(b));
        GoldenRat sb = one_minus_tau * GoldenRat(Rat(b));
        Int alo = (wlo - tb).ceil();
        Int alo2 = (slo - sb).ceil();
        if (alo2 > alo) alo = alo2;
        Int ahi = (whi - tb).floor();
        Int ahi2 = (shi - sb).floor();
        if (ahi2 < ahi) ahi = ahi2;
        for (Int a = alo; a <= ahi; ++a) out.emplace_back(a, b);
    }
    return out;
}

struct PairBounds {
    GoldenRat wlo, whi, slo, shi;
};

std::vector<PairBounds> pair_bounds(const Scheme& s, const GoldenRat& radius) {
    auto box = s.window.outer_bbox();
    std::vector<PairBounds> out;
    switch (s.kind) {
        case SchemeKind::fibonacci:
            out.push_back({-radius, radius, box[0].first, box[0].second});
            break;
        case SchemeKind::penrose: {
            // |v| <= R tau / sin72, via the exact square
            GoldenRat bv2 = radius * radius * kTau * kTau * kSin72Sq.inverse();
            GoldenRat bv(Rat(floor_sqrt(bv2) + 1));
            GoldenRat bu = radius + kTau * kHalf * bv;
            // star: x* = u* + cos72 * v*, y* = -v*
            GoldenRat vs_lo = -box[1].second, vs_hi = -box[1].first;
            GoldenRat us_lo = box[0].first - kCos72 * vs_hi;
            GoldenRat us_hi = box[0].second - kCos72 * vs_lo;
            out.push_back({-bu, bu, us_lo, us_hi});
            out.push_back({-bv, bv, vs_lo, vs_hi});
            break;
        }
        case SchemeKind::z6:
            for (int k = 0; k < 3; ++k)
                out.push_back({-radius, radius, box[k].first, box[k].second});
            break;
        case SchemeKind::z6_icosian:
        case SchemeKind::elser_sloane: {
            GoldenRat two(Rat(2));
            for (int k = 0; k < s.pairs; ++k)
                out.push_back({-two * radius, two * radius, two * box[k].first,
                               two * box[k].second});
            break;
        }
    }
    return out;
}

bool axis_aligned(SchemeKind k) { return k != SchemeKind::penrose; }

}  // namespace

std::vector<QcPoint> enumerate_points(const Scheme& s, const GoldenRat& radius) {
    if (radius.sign() < 0) throw std::invalid_argument("enumerate: negative radius");
    GoldenRat r2 = radius * radius;
    auto bounds = pair_bounds(s, radius);
    std::vector<std::vector<GoldenInt>> cand(s.pairs);
    for (int k = 0; k < s.pairs; ++k)
        cand[k] = pair_candidates(bounds[k].wlo, bounds[k].whi, bounds[k].slo, bounds[k].shi);
    for (const auto& c : cand)
        if (c.empty()) return {};

    GoldenRat denom_inv(Rat(1, s.denom));
    std::vector<std::vector<QcPoint>> found(thread_count() + 1);
    parallel_chunks(cand[0].size(), [&](int chunk, std::size_t begin, std::size_t end) {
        auto& sink = found[chunk];
        Coords coords(s.pairs);
        auto descend = [&](auto&& self, int depth, const GoldenRat& partial_norm2) -> void {
            if (depth == s.pairs) {
                if (!s.lattice_contains(coords)) return;
                if (golden_compare(s.phys_norm2(coords), r2) > 0) return;
                VecR star = s.star_of(coords);
                if (!s.window.contains(star)) return;
                sink.push_back({coords, std::move(star)});
                return;
            }
            for (const auto& p : cand[depth]) {
                coords[depth] = p;
                GoldenRat next = partial_norm2;
                if (axis_aligned(s.kind)) {
                    GoldenRat vk = gval(p) * denom_inv;
                    next += vk * vk;
                    if (golden_compare(next, r2) > 0) continue;
                }
                self(self, depth + 1, next);
            }
        };
        for (std::size_t i = begin; i < end; ++i) {
            coords[0] = cand[0][i];
            GoldenRat base;
            if (axis_aligned(s.kind)) {
                GoldenRat v0 = gval(cand[0][i]) * denom_inv;
                base = v0 * v0;
                if (golden_compare(base, r2) > 0) continue;
            }
            if (s.pairs == 1) {
                descend(descend, 1, base);
            } else {
                Coords saved = coords;
                descend(descend, 1, base);
                coords = saved;
            }
        }
    });

    std::vector<QcPoint> out;
    for (auto& part : found)
        for (auto& p : part) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [&](const QcPoint& a, const QcPoint& b) {
        int c = golden_compare(s.phys_norm2(a.coords), s.phys_norm2(b.coords));
        if (c != 0) return c < 0;
        return a.coords < b.coords;
    });

    // injectivity of the physical projection on the batch
    std::map<std::string, int> seen;
    for (const auto& p : out)
        if (++seen[vec_str(s.phys_of(p.coords))] > 1)
            throw std::runtime_error("enumerate: physical projection collision");
    return out;
}

std::vector<VecR> elser_sloane_vertices() {
    static const int even_perm[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
                                         {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
                                         {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    const GoldenRat tau2 = kTau * kTau;             // tau^2
    const GoldenRat itau = kTau - kOne;             // 1/tau
    const GoldenRat itau2 = GoldenRat(2) - kTau;    // 1/tau^2
    const GoldenRat sqrt5 = GoldenRat::sqrt5();     // 2 tau - 1
    const GoldenRat half = kHalf, third(Rat(1, 3));
    const GoldenRat zero = GoldenRat::zero(), one = kOne, two(2);

    std::vector<std::pair<GoldenRat, VecR>> families = {
        {half, {two, zero, zero, zero}},
        {half, {one, one, one, one}},
        {half, {zero, one, kTau, itau}},
        {third, {tau2, itau2, one, zero}},
        {third, {tau2, itau, itau, itau}},
        {third, {sqrt5, itau, kTau, zero}},
        {third, {sqrt5, one, one, one}},
        {third, {kTau, kTau, kTau, itau2}},
        {third, {two, two, zero, zero}},
        {third, {two, one, kTau, itau}},
    };

    std::vector<VecR> out;
    for (const auto& [scale, base] : families)
        for (const auto& p : even_perm)
            for (int m = 0; m < 16; ++m) {
                VecR v(4);
                bool skip = false;
                for (int k = 0; k < 4; ++k) {
                    GoldenRat c = base[p[k]] * scale;
                    if ((m >> k) & 1) {
                        if (c.is_zero()) { skip = true; break; }
                        c = -c;
                    }
                    v[k] = c;
                }
                if (!skip) out.push_back(std::move(v));
            }
    std::sort(out.begin(), out.end(), vec_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != 720)
        throw std::runtime_error("elser-sloane vertex expansion yielded " +
                                 std::to_string(out.size()) + " != 720 vertices");
    return out;
}

ConvexWindow build_elser_sloane_window() {
    return facets_from_vertices(4, elser_sloane_vertices(), /*kappa_scaled=*/true);
}

std::string elser_sloane_cache_path() {
    if (const char* env = std::getenv("QC_DATA_DIR"))
        return std::string(env) + "/elser_sloane_hrep.json";
#ifdef QC_DATA_DIR
    return std::string(QC_DATA_DIR) + "/elser_sloane_hrep.json";
#else
    return "data/elser_sloane_hrep.json";
#endif
}

namespace {

ConvexWindow load_elser_sloane_window_uncached();

}  // namespace

ConvexWindow load_elser_sloane_window() {
    static const ConvexWindow w = load_elser_sloane_window_uncached();
    return w;
}

namespace {

ConvexWindow load_elser_sloane_window_uncached() {
    const std::string path = elser_sloane_cache_path();
    auto expected = elser_sloane_vertices();
    std::ifstream in(path);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            ConvexWindow w = ConvexWindow::from_json(buf.str());
            std::vector<VecR> verts = w.vertices();
            std::sort(verts.begin(), verts.end(), vec_lex_less);
            if (w.dim() == 4 && w.kappa_scaled_vertices() && verts == expected &&
                !w.facets().empty())
                return w;
        } catch (const WindowError&) {
            // fall through to a rebuild
        }
    }
    ConvexWindow w = build_elser_sloane_window();
    std::ofstream out(path);
    if (out) out << w.to_json();
    return w;
}

}  // namespace

namespace {

struct FibonacciCache {
    std::vector<GoldenInt> by_index;  // ascending physical order
    long zero_pos = -1;
    std::map<GoldenInt, long> index_of;
};

const FibonacciCache& fibonacci_cache() {
    static const FibonacciCache cache = [] {
        FibonacciCache c;
        Scheme s = preset("fibonacci-palindromic");
        auto pts = enumerate_points(s, GoldenRat(Rat(100)));
        std::sort(pts.begin(), pts.end(), [](const QcPoint& a, const QcPoint& b) {
            return gval(a.coords[0]) < gval(b.coords[0]);
        });
        for (const auto& p : pts) c.by_index.push_back(p.coords[0]);
        for (long i = 0; i < static_cast<long>(c.by_index.size()); ++i) {
            if (c.by_index[i].is_zero()) c.zero_pos = i;
        }
        if (c.zero_pos < 0) throw std::logic_error("fibonacci chain misses the origin");
        for (long i = 0; i < static_cast<long>(c.by_index.size()); ++i)
            c.index_of.emplace(c.by_index[i], i - c.zero_pos);
        return c;
    }();
    return cache;
}

}  // namespace

GoldenInt fibonacci_point(long n) {
    const auto& c = fibonacci_cache();
    long pos = n + c.zero_pos;
    if (pos < 0 || pos >= static_cast<long>(c.by_index.size()))
        throw std::out_of_range("fibonacci_point: index outside the cached range");
    return c.by_index[pos];
}

std::optional<long> fibonacci_index(const GoldenInt& x) {
    const auto& c = fibonacci_cache();
    auto it = c.index_of.find(x);
    if (it == c.index_of.end()) return std::nullopt;
    return it->second;
}

}  // namespace qc
