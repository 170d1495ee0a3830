#include "qc/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qc {

namespace {

const GoldenRat kTau = GoldenRat::tau();
const GoldenRat kOne = GoldenRat::one();
const GoldenRat kHalfR(Rat(1, 2));

std::string coords_str(const Coords& c) {
    std::string s = "[";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += c[k].str();
    }
    return s + "]";
}

}  // namespace

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [x, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str() + "*L" + coords_str(x);
    }
    return s;
}

AlgebraElement jordan_product(const Scheme& s, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            Rat w = cx * cy / 2;
            Coords xy = qadd(x, y), yx = qadd(y, x);
            for (const Coords* r : {&xy, &yx}) {
                if (!s.window.contains(s.star_of(*r)))
                    throw std::runtime_error(
                        "jordan_product: closure certificate failed at " + coords_str(*r));
                out.add_term(*r, w);
            }
        }
    return out;
}

bool jordan_identity_check(const Scheme& s, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement ab = jordan_product(s, a, b);
    if (ab != jordan_product(s, b, a)) return false;
    AlgebraElement aa = jordan_product(s, a, a);
    return jordan_product(s, ab, aa) == jordan_product(s, a, jordan_product(s, b, aa));
}

bool sum_conservation_check(const Coords& x, const Coords& y) {
    return coords_add(qadd(x, y), qadd(y, x)) == coords_add(x, y);
}

UnitProbeReport unit_probe(const Scheme& s, const std::vector<QcPoint>& pts) {
    UnitProbeReport rep;
    rep.batch_size = static_cast<long>(pts.size());
    QcPoint origin = s.make_point(s.zero());
    AlgebraElement l0 = AlgebraElement::generator(origin);
    for (const auto& p : pts) {
        AlgebraElement prod = jordan_product(s, AlgebraElement::generator(p), l0);
        bool fixes = prod == l0;
        bool is_zero = p.coords == origin.coords;
        if (fixes) rep.fixers.push_back(p.coords);
        if (fixes != is_zero) {
            rep.ok = false;
            return rep;
        }
        if (!is_zero) {
            // structural obstruction: two strictly positive half coefficients
            for (const auto& [x, c] : prod.terms())
                if (!(c > 0)) {
                    rep.ok = false;
                    return rep;
                }
        }
    }
    rep.ok = rep.fixers.size() == 1 && rep.fixers[0] == s.zero();
    return rep;
}

GrowthProbeReport subalgebra_growth_probe(const Scheme& s, const QcPoint& x, const QcPoint& y,
                                          long k_max) {
    if (x.coords == y.coords)
        throw std::invalid_argument("subalgebra_growth_probe: generators must differ");
    GrowthProbeReport rep;
    rep.requested = k_max;
    rep.closed_form_agrees = true;
    std::set<Coords> seen;
    Coords chain = qadd(x.coords, y.coords);
    for (long k = 1; k <= k_max; ++k) {
        if (!s.window.contains(s.star_of(chain)))
            throw std::runtime_error("subalgebra_growth_probe: chain left the model set");
        if (qadd_repeated_closed(x.coords, y.coords, k) != chain) rep.closed_form_agrees = false;
        seen.insert(chain);
        chain = qadd(chain, y.coords);
    }
    rep.distinct = static_cast<long>(seen.size());
    rep.ok = rep.closed_form_agrees && rep.distinct == k_max;
    return rep;
}

IdealProbeReport ideal_probe(const Scheme& s, const QcPoint& generator,
                             const std::vector<QcPoint>& pts) {
    IdealProbeReport rep;
    rep.batch_size = static_cast<long>(pts.size());
    bool gen_in_batch = false;
    for (const auto& p : pts) gen_in_batch = gen_in_batch || p.coords == generator.coords;
    if (!gen_in_batch) throw std::invalid_argument("ideal_probe: generator not in batch");

    AlgebraElement lg = AlgebraElement::generator(generator);
    std::vector<AlgebraElement> products;
    std::set<Coords> support;
    for (const auto& p : pts) {
        products.push_back(jordan_product(s, lg, AlgebraElement::generator(p)));
        for (const auto& [x, c] : products.back().terms()) support.insert(x);
    }
    for (const auto& p : pts) support.insert(p.coords);

    std::vector<Coords> columns(support.begin(), support.end());
    std::map<Coords, int> col_of;
    for (int i = 0; i < static_cast<int>(columns.size()); ++i) col_of[columns[i]] = i;

    MatR m;
    for (const auto& prod : products) {
        VecR row(columns.size());
        for (const auto& [x, c] : prod.terms()) row[col_of[x]] = GoldenRat(c);
        m.push_back(std::move(row));
    }
    rep.span_rank = mat_rank(m);

    for (const auto& p : pts) {
        MatR ext = m;
        VecR row(columns.size());
        row[col_of[p.coords]] = kOne;
        ext.push_back(std::move(row));
        if (mat_rank(ext) > rep.span_rank) {
            rep.unreachable = p.coords;
            rep.proper_on_batch = true;
            break;
        }
    }
    return rep;
}

UnitizedElement unitized_product(const Scheme& s, const UnitizedElement& a,
                                 const UnitizedElement& b) {
    UnitizedElement r;
    r.body = jordan_product(s, a.body, b.body) + b.body.scaled(a.scalar) + a.body.scaled(b.scalar);
    r.scalar = a.scalar * b.scalar;
    return r;
}

bool witt_scalars_commutative(SchemeKind k) {
    return k == SchemeKind::fibonacci || k == SchemeKind::penrose;
}

namespace {

void require_witt_scheme(const Scheme& s) {
    if (!witt_scalars_commutative(s.kind))
        throw std::invalid_argument(
            "witt bracket: scheme lacks a commutative scalar ring (not admissible)");
}

}  // namespace

Coords scalar_one(const Scheme& s) {
    Coords c(s.pairs);
    c[0] = GoldenInt::one();
    return c;
}

Coords scalar_mul(const Scheme& s, const Coords& a, const Coords& b) {
    require_witt_scheme(s);
    if (s.kind == SchemeKind::fibonacci) return {a[0] * b[0]};
    // (u + v xi^2)(u' + v' xi^2) with xi^4 = -1 - tau xi^2
    const GoldenInt &u = a[0], &v = a[1], &up = b[0], &vp = b[1];
    GoldenInt vv = v * vp;
    return {u * up - vv, u * vp + v * up - GoldenInt::tau() * vv};
}

WittElement WittElement::generator(const Scheme& s, const Coords& x) {
    WittElement e;
    e.terms_[x] = scalar_one(s);
    return e;
}

WittElement& WittElement::add_term(const Coords& x, const Coords& coeff) {
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        bool zero = true;
        for (const auto& c : coeff) zero = zero && c.is_zero();
        if (!zero) terms_[x] = coeff;
        return *this;
    }
    Coords sum = coords_add(it->second, coeff);
    bool zero = true;
    for (const auto& c : sum) zero = zero && c.is_zero();
    if (zero)
        terms_.erase(it);
    else
        it->second = std::move(sum);
    return *this;
}

WittElement WittElement::operator+(const WittElement& o) const {
    WittElement r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, c);
    return r;
}

WittElement WittElement::operator-(const WittElement& o) const {
    WittElement r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, coords_neg(c));
    return r;
}

WittElement witt_bracket(const Scheme& s, const WittElement& a, const WittElement& b,
                         bool windowed) {
    require_witt_scheme(s);
    WittElement out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            Coords sum = coords_add(x, y);
            if (windowed && !s.window.contains(s.star_of(sum))) continue;
            Coords coeff = scalar_mul(s, scalar_mul(s, cx, cy), coords_sub(x, y));
            out.add_term(sum, coeff);
        }
    return out;
}

WittElement jacobi_sum(const Scheme& s, const Coords& x, const Coords& y, const Coords& z,
                       bool windowed) {
    WittElement lx = WittElement::generator(s, x), ly = WittElement::generator(s, y),
                lz = WittElement::generator(s, z);
    WittElement acc = witt_bracket(s, lx, witt_bracket(s, ly, lz, windowed), windowed);
    acc = acc + witt_bracket(s, ly, witt_bracket(s, lz, lx, windowed), windowed);
    acc = acc + witt_bracket(s, lz, witt_bracket(s, lx, ly, windowed), windowed);
    return acc;
}

AcceptabilityReport acceptability_check(const ConvexWindow& w, const std::vector<VecR>& samples) {
    for (const auto& p : samples)
        if (!w.contains(p))
            throw std::invalid_argument("acceptability_check: sample outside the window");
    AcceptabilityReport rep;
    std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++rep.triples;
                const VecR &x = samples[i], &y = samples[j], &z = samples[k];
                if (!w.contains(vadd(vadd(x, y), z))) continue;
                if (!w.contains(vadd(x, y))) continue;
                if (!w.contains(vadd(x, z))) rep.violations.push_back({x, y, z});
            }
    return rep;
}

PairedIsometry isometry_identity(const Scheme& s) {
    return {"identity", mat_identity(s.phys_dim), mat_identity(s.inner_dim)};
}

PairedIsometry isometry_negation(const Scheme& s) {
    MatR p = mat_identity(s.phys_dim), q = mat_identity(s.inner_dim);
    for (int i = 0; i < s.phys_dim; ++i) p[i][i] = -kOne;
    for (int i = 0; i < s.inner_dim; ++i) q[i][i] = -kOne;
    return {"negation", std::move(p), std::move(q)};
}

PairedIsometry isometry_penrose_fivefold() {
    GoldenRat c72 = (kTau - kOne) * kHalfR;
    GoldenRat s2{Rat(5, 8), Rat(1, 8)};  // sin^2 72
    GoldenRat itau = kTau - kOne;
    MatR phys = {{c72, -s2}, {kOne, c72}};
    MatR inner = {{-kTau * kHalfR, -s2 * itau}, {itau, -kTau * kHalfR}};
    return {"fivefold", std::move(phys), std::move(inner)};
}

MatR rotation_from_unit_quaternion(const VecR& q) {
    // v -> q v conj(q) on pure quaternions, exact in Q(sqrt5)
    GoldenRat q0 = q[0];
    VecR im = {q[1], q[2], q[3]};
    GoldenRat im2 = dot(im, im);
    MatR m(3, VecR(3));
    GoldenRat two(2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            m[a][b] = two * im[a] * im[b];
            if (a == b) m[a][b] += q0 * q0 - im2;
        }
    // + 2 q0 [im]_x
    m[0][1] -= two * q0 * im[2];
    m[0][2] += two * q0 * im[1];
    m[1][0] += two * q0 * im[2];
    m[1][2] -= two * q0 * im[0];
    m[2][0] -= two * q0 * im[1];
    m[2][1] += two * q0 * im[0];
    return m;
}

PairedIsometry isometry_icosahedral(int row) {
    // Rotations v -> q v conj(q) for the five pinned unit icosians; the inner
    // space rotates by conjugation with q*, the entrywise Galois conjugate.
    const GoldenRat h = kHalfR, t = kTau, it = kTau - kOne, z = GoldenRat::zero(), o = kOne;
    VecR q;
    std::string name;
    switch (row) {
        case 0:
            q = {z, o, z, z};
            name = "icosahedral-i";
            break;
        case 1:
            q = {z, z, o, z};
            name = "icosahedral-j";
            break;
        case 2:
            q = {z, z, z, o};
            name = "icosahedral-k";
            break;
        case 3:
            q = {-h, h, h, h};
            name = "icosahedral-omega";
            break;
        case 4:
            q = {z, h, -it * h, t * h};
            name = "icosahedral-v";
            break;
        default:
            throw std::invalid_argument("isometry_icosahedral: row must be 0..4");
    }
    MatR m = rotation_from_unit_quaternion(q);
    return {name, m, mat_star(m)};
}

std::optional<Coords> apply_isometry(const Scheme& s, const PairedIsometry& iso, const Coords& c) {
    VecR image = mat_vec(iso.phys, s.phys_of(c));
    auto as_golden_int = [](const GoldenRat& v) -> std::optional<GoldenInt> {
        Rat b = v.q() * 2, a = v.p() - v.q();
        if (a.get_den() != 1 || b.get_den() != 1) return std::nullopt;
        return GoldenInt(a.get_num(), b.get_num());
    };
    Coords out(s.pairs);
    switch (s.kind) {
        case SchemeKind::fibonacci: {
            auto g = as_golden_int(image[0]);
            if (!g) return std::nullopt;
            out[0] = *g;
            return out;
        }
        case SchemeKind::penrose: {
            GoldenRat v = image[1] * kTau;  // 1/(tau-1) = tau
            GoldenRat u = image[0] + v * kTau * kHalfR;
            auto gu = as_golden_int(u), gv = as_golden_int(v);
            if (!gu || !gv) return std::nullopt;
            out[0] = *gu;
            out[1] = *gv;
            return out;
        }
        case SchemeKind::z6: {
            for (int k = 0; k < 3; ++k) {
                auto g = as_golden_int(image[k]);
                if (!g) return std::nullopt;
                out[k] = *g;
            }
            return out;
        }
        case SchemeKind::z6_icosian:
        case SchemeKind::elser_sloane: {
            GoldenRat two(Rat(2));
            for (int k = 0; k < s.pairs; ++k) {
                auto g = as_golden_int(image[k] * two);
                if (!g) return std::nullopt;
                out[k] = *g;
            }
            return out;
        }
    }
    return std::nullopt;
}

namespace {

MatR scheme_metric(const Scheme& s, int dim) {
    MatR g = mat_identity(dim);
    if (s.kind == SchemeKind::penrose) g[1][1] = GoldenRat(Rat(5, 8), Rat(1, 8));
    return g;
}

bool is_metric_isometry(const MatR& m, const MatR& g) {
    return mat_eq(mat_mul(mat_transpose(m), mat_mul(g, m)), g);
}

}  // namespace

SymmetryReport symmetry_transfer_check(const Scheme& s, const PairedIsometry& iso,
                                       const std::vector<QcPoint>& pts) {
    SymmetryReport rep;
    if (!is_metric_isometry(iso.phys, scheme_metric(s, s.phys_dim)) ||
        !is_metric_isometry(iso.inner, scheme_metric(s, s.inner_dim)))
        throw std::invalid_argument("symmetry_transfer_check: not an isometry pair");

    // window invariance on the facet set
    MatR inner_inv_t = mat_transpose(mat_inverse(iso.inner));
    std::vector<Facet> transformed;
    for (const auto& f : s.window.facets()) {
        Facet g = f;
        g.normal = mat_vec(inner_inv_t, f.normal);
        transformed.push_back(std::move(g));
    }
    ConvexWindow moved(s.window.dim(), std::move(transformed), {});
    rep.window_invariant = moved.facet_keys() == s.window.facet_keys();
    if (!rep.window_invariant) return rep;  // hypothesis failure, not a bug

    // batch image: lattice membership, window membership, star equivariance
    std::set<Coords> image;
    std::set<Coords> original;
    for (const auto& p : pts) original.insert(p.coords);
    for (const auto& p : pts) {
        auto moved_coords = apply_isometry(s, iso, p.coords);
        if (!moved_coords || !s.member(*moved_coords)) {
            rep.lattice_ok = false;
            rep.violations.push_back("image of " + AlgebraElement::generator(p).str() +
                                     " leaves the model set");
            continue;
        }
        if (!(s.star_of(*moved_coords) == mat_vec(iso.inner, p.star)))
            rep.violations.push_back("star map does not intertwine the pair");
        image.insert(*moved_coords);
    }
    rep.core_bijection = image == original;

    // equivariance rho(x |- y) = rho(x) |- rho(y), all ordered pairs
    std::vector<Coords> moved_of(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto m = apply_isometry(s, iso, pts[i].coords);
        if (!m) return rep;
        moved_of[i] = *m;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            ++rep.pairs;
            auto lhs = apply_isometry(s, iso, qadd(pts[i].coords, pts[j].coords));
            if (!lhs || *lhs != qadd(moved_of[i], moved_of[j])) {
                rep.violations.push_back("equivariance failed on a pair");
                return rep;
            }
        }
    return rep;
}

std::pair<long, long> fibonacci_label_product(long n, long m) {
    auto integer_part = [](long idx) {
        GoldenInt f = fibonacci_point(idx);
        if (f.b() != idx) throw std::logic_error("chain label: tau coefficient != index");
        return f.a();
    };
    Int np = integer_part(n), mp = integer_part(m);
    Int first = np - mp + 2 * n - m;
    Int second = mp - np + 2 * m - n;
    return {static_cast<long>(first.get_si()), static_cast<long>(second.get_si())};
}

}  // namespace qc
