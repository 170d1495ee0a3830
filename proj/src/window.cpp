#include "qc/window.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace qc {

namespace {

// Exact rational brackets 3/5 < kappa < 301/500, asserted once against
// kappa^2 = (5+sqrt5)/20.
const Rat& kappa_lo() {
    static const Rat lo = [] {
        Rat l(3, 5);
        if (!(GoldenRat(l * l) < kappa_squared())) throw std::logic_error("kappa lower bracket");
        return l;
    }();
    return lo;
}
const Rat& kappa_hi() {
    static const Rat hi = [] {
        Rat h(301, 500);
        if (!(kappa_squared() < GoldenRat(h * h))) throw std::logic_error("kappa upper bracket");
        return h;
    }();
    return hi;
}

int facet_side(const Facet& f, const VecR& p) {
    GoldenRat v = dot(f.normal, p);
    if (f.kappa_scaled) return kappa_compare(v, KappaScaledRat::kappa_times(f.offset));
    return golden_compare(v, f.offset);
}

}  // namespace

ConvexWindow ConvexWindow::interval(const GoldenRat& lo, const GoldenRat& hi, bool lo_closed,
                                    bool hi_closed) {
    if (!(lo < hi)) throw WindowError("interval: lo must be below hi");
    std::vector<Facet> facets = {
        {{GoldenRat::one()}, hi, false, hi_closed},
        {{-GoldenRat::one()}, -lo, false, lo_closed},
    };
    return ConvexWindow(1, std::move(facets), {{lo}, {hi}});
}

void ConvexWindow::init_inner_ball() {
    if (facets_.empty()) return;
    std::optional<GoldenRat> r2;
    for (const auto& f : facets_) {
        if (f.offset.sign() <= 0) return;  // origin not strictly interior
        GoldenRat d2 = f.offset * f.offset * dot(f.normal, f.normal).inverse();
        if (f.kappa_scaled) d2 *= kappa_squared();
        if (!r2 || d2 < *r2) r2 = d2;
    }
    inner_ball2_ = r2;
}

bool ConvexWindow::contains(const VecR& p) const {
    if (static_cast<int>(p.size()) != dim_)
        throw std::invalid_argument("window/point dimension mismatch");
    if (inner_ball2_ && dot(p, p) < *inner_ball2_) return true;
    for (const auto& f : facets_) {
        int s = facet_side(f, p);
        if (s > 0 || (s == 0 && !f.closed)) return false;
    }
    return true;
}

std::vector<std::pair<GoldenRat, GoldenRat>> ConvexWindow::outer_bbox() const {
    if (vertices_.empty()) throw WindowError("outer_bbox needs the vertex list");
    std::vector<std::pair<GoldenRat, GoldenRat>> box(dim_);
    for (int k = 0; k < dim_; ++k) {
        GoldenRat lo = vertices_[0][k], hi = vertices_[0][k];
        for (const auto& v : vertices_) {
            if (v[k] < lo) lo = v[k];
            if (hi < v[k]) hi = v[k];
        }
        if (kappa_vertices_) {
            lo = lo.sign() >= 0 ? lo * GoldenRat(kappa_lo()) : lo * GoldenRat(kappa_hi());
            hi = hi.sign() >= 0 ? hi * GoldenRat(kappa_hi()) : hi * GoldenRat(kappa_lo());
        }
        box[k] = {lo, hi};
    }
    return box;
}

ConvexWindow ConvexWindow::translated(const VecR& shift) const {
    std::vector<Facet> facets = facets_;
    for (auto& f : facets) {
        if (f.kappa_scaled)
            throw WindowError("translate: kappa-scaled windows are not translatable");
        f.offset += dot(f.normal, shift);
    }
    std::vector<VecR> verts = vertices_;
    for (auto& v : verts) v = vadd(v, shift);
    return ConvexWindow(dim_, std::move(facets), std::move(verts), kappa_vertices_);
}

void ConvexWindow::validate() const {
    for (const auto& f : facets_) {
        if (static_cast<int>(f.normal.size()) != dim_)
            throw WindowError("facet dimension mismatch");
        int incident = 0;
        std::vector<VecR> on;
        for (const auto& v : vertices_) {
            // kappa-scaled windows keep both sides unscaled, so the plain
            // comparison is the right one for vertices.
            int s = golden_compare(dot(f.normal, v), f.offset);
            if (s > 0) throw WindowError("vertex outside facet " + vec_str(f.normal));
            if (s == 0) {
                ++incident;
                on.push_back(v);
            }
        }
        if (!vertices_.empty()) {
            if (incident < dim_) throw WindowError("facet supported by too few vertices");
            MatR diffs;
            for (std::size_t i = 1; i < on.size(); ++i) diffs.push_back(vsub(on[i], on[0]));
            if (mat_rank(diffs) != dim_ - 1)
                throw WindowError("facet support is affinely degenerate");
        }
    }
}

std::vector<std::string> ConvexWindow::facet_keys() const {
    std::vector<std::string> keys;
    for (const auto& f : facets_) {
        GoldenRat scale;
        for (const auto& c : f.normal)
            if (!c.is_zero()) { scale = c.abs().inverse(); break; }
        if (scale.is_zero()) throw WindowError("zero facet normal");
        std::string k;
        for (const auto& c : f.normal) k += (c * scale).str() + "|";
        k += (f.offset * scale).str();
        k += f.kappa_scaled ? "|k" : "|p";
        k += f.closed ? "|c" : "|o";
        keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::string ConvexWindow::to_json() const {
    nlohmann::json j;
    j["schema"] = "qc.window/1";
    j["dim"] = dim_;
    j["kappa_scaled_vertices"] = kappa_vertices_;
    for (const auto& f : facets_) {
        nlohmann::json jf;
        for (const auto& c : f.normal) jf["normal"].push_back(c.str());
        jf["offset"] = f.offset.str();
        jf["kappa_scaled"] = f.kappa_scaled;
        jf["closed"] = f.closed;
        j["facets"].push_back(jf);
    }
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_) {
        nlohmann::json jv = nlohmann::json::array();
        for (const auto& c : v) jv.push_back(c.str());
        j["vertices"].push_back(jv);
    }
    return j.dump(1);
}

ConvexWindow ConvexWindow::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw WindowError("window JSON: parse error");
    if (j.value("schema", "") != "qc.window/1") throw WindowError("window JSON: unknown schema");
    auto parse_rat = [](const nlohmann::json& s) {
        auto v = GoldenRat::parse(s.get<std::string>());
        if (!v) throw WindowError("window JSON: bad value " + s.get<std::string>());
        return *v;
    };
    int dim = j.at("dim").get<int>();
    std::vector<Facet> facets;
    for (const auto& jf : j.at("facets")) {
        Facet f;
        for (const auto& c : jf.at("normal")) f.normal.push_back(parse_rat(c));
        f.offset = parse_rat(jf.at("offset"));
        f.kappa_scaled = jf.value("kappa_scaled", false);
        f.closed = jf.value("closed", true);
        if (static_cast<int>(f.normal.size()) != dim) throw WindowError("window JSON: facet dim");
        facets.push_back(std::move(f));
    }
    std::vector<VecR> verts;
    for (const auto& jv : j.at("vertices")) {
        VecR v;
        for (const auto& c : jv) v.push_back(parse_rat(c));
        if (static_cast<int>(v.size()) != dim) throw WindowError("window JSON: vertex dim");
        verts.push_back(std::move(v));
    }
    ConvexWindow w(dim, std::move(facets), std::move(verts),
                   j.value("kappa_scaled_vertices", false));
    w.validate();
    return w;
}

namespace {

struct HullFacet {
    std::vector<int> verts;  // dim indices, sorted
    VecR normal;
    GoldenRat offset;
    bool alive = true;
};

// Hyperplane through the given points, oriented away from `interior`.
// Returns false if the points are affinely dependent.
bool hyperplane(const std::vector<VecR>& pts, const std::vector<int>& idx, const VecR& interior,
                VecR& normal, GoldenRat& offset) {
    int dim = static_cast<int>(pts[idx[0]].size());
    MatR diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(vsub(pts[idx[i]], pts[idx[0]]));
    auto kernel = mat_kernel(diffs);
    if (kernel.size() != 1) return false;
    normal = kernel[0];
    offset = dot(normal, pts[idx[0]]);
    int side = golden_compare(dot(normal, interior), offset);
    if (side == 0) return false;
    if (side > 0) {
        normal = vneg(normal);
        offset = -offset;
    }
    (void)dim;
    return true;
}

}  // namespace

ConvexWindow facets_from_vertices(int dim, const std::vector<VecR>& vertices, bool kappa_scaled) {
    if (dim < 1 || dim > 4) throw WindowError("facets_from_vertices: dimension out of range");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim) throw WindowError("vertex dimension mismatch");

    // dedupe
    std::vector<VecR> pts = vertices;
    std::sort(pts.begin(), pts.end(), vec_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (static_cast<int>(pts.size()) < dim + 1)
        throw WindowError("degenerate hull: fewer than dim+1 distinct vertices");

    if (dim == 1) {
        GoldenRat lo = pts.front()[0], hi = pts.back()[0];
        std::vector<Facet> facets = {
            {{GoldenRat::one()}, hi, kappa_scaled, true},
            {{-GoldenRat::one()}, -lo, kappa_scaled, true},
        };
        return ConvexWindow(1, std::move(facets), vertices, kappa_scaled);
    }

    // initial affinely independent set of dim+1 points
    std::vector<int> simplex = {0};
    MatR diffs;
    for (int i = 1; i < static_cast<int>(pts.size()) && simplex.size() < std::size_t(dim + 1);
         ++i) {
        diffs.push_back(vsub(pts[i], pts[0]));
        if (mat_rank(diffs) == static_cast<int>(simplex.size()))
            simplex.push_back(i);
        else
            diffs.pop_back();
    }
    if (simplex.size() != std::size_t(dim + 1))
        throw WindowError("degenerate hull: vertices do not affinely span the space");

    VecR interior(dim);
    for (int idx : simplex) interior = vadd(interior, pts[idx]);
    GoldenRat inv(Rat(1, dim + 1));
    interior = vscale(inv, interior);

    std::vector<HullFacet> facets;
    for (int omit = 0; omit <= dim; ++omit) {
        HullFacet f;
        for (int i = 0; i <= dim; ++i)
            if (i != omit) f.verts.push_back(simplex[i]);
        std::sort(f.verts.begin(), f.verts.end());
        if (!hyperplane(pts, f.verts, interior, f.normal, f.offset))
            throw WindowError("degenerate initial simplex facet");
        facets.push_back(std::move(f));
    }

    // deterministic pseudo-shuffled insertion order
    std::vector<int> order;
    std::set<int> in_simplex(simplex.begin(), simplex.end());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (!in_simplex.count(i)) order.push_back(i);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(order[i], order[state % std::uint64_t(i + 1)]);
    }

    for (int pi : order) {
        const VecR& p = pts[pi];
        std::vector<int> visible;
        for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
            if (!facets[fi].alive) continue;
            if (golden_compare(dot(facets[fi].normal, p), facets[fi].offset) > 0)
                visible.push_back(fi);
        }
        if (visible.empty()) continue;  // inside or on the current hull

        // horizon = ridges covered exactly once by the visible region
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const auto& vs = facets[fi].verts;
            for (std::size_t omit = 0; omit < vs.size(); ++omit) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    if (i != omit) ridge.push_back(vs[i]);
                ridge_count[ridge]++;
            }
        }
        for (int fi : visible) facets[fi].alive = false;
        int created = 0;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            HullFacet f;
            f.verts = ridge;
            f.verts.push_back(pi);
            std::sort(f.verts.begin(), f.verts.end());
            if (!hyperplane(pts, f.verts, interior, f.normal, f.offset))
                throw WindowError("hull update produced a degenerate facet");
            facets.push_back(std::move(f));
            ++created;
        }
        if (created == 0) throw WindowError("hull update found no horizon");
    }

    // canonical deduplication of supporting hyperplanes
    std::map<std::string, Facet> unique;
    for (const auto& hf : facets) {
        if (!hf.alive) continue;
        GoldenRat scale;
        for (const auto& c : hf.normal)
            if (!c.is_zero()) { scale = c.abs().inverse(); break; }
        VecR n = vscale(scale, hf.normal);
        GoldenRat off = hf.offset * scale;
        std::string key;
        for (const auto& c : n) key += c.str() + "|";
        key += off.str();
        unique.emplace(key, Facet{n, off, kappa_scaled, true});
    }
    std::vector<Facet> out;
    out.reserve(unique.size());
    for (auto& [k, f] : unique) out.push_back(std::move(f));

    ConvexWindow w(dim, std::move(out), vertices, kappa_scaled);
    w.validate();
    return w;
}

}  // namespace qc
