#include "qc/quasiadd.hpp"

#include "qc/parallel.hpp"

namespace qc {

Coords qadd_repeated_iterative(const Coords& y, const Coords& x, long k) {
    if (k < 1) throw std::invalid_argument("qadd_repeated: k must be >= 1");
    Coords acc = y;
    for (long i = 0; i < k; ++i) acc = qadd(acc, x);
    return acc;
}

Coords qadd_repeated_closed(const Coords& y, const Coords& x, long k) {
    if (k < 1) throw std::invalid_argument("qadd_repeated: k must be >= 1");
    GoldenInt f = GoldenInt(1, 1).pow(static_cast<unsigned>(k));  // (1+tau)^k
    return coords_add(coords_scale(f, coords_sub(y, x)), x);
}

bool star_compatibility_holds(const Scheme& s, const Coords& x, const Coords& y) {
    GoldenRat t = GoldenRat::one() - GoldenRat::tau();
    VecR lhs = s.star_of(qadd(x, y));
    VecR rhs = vsub(vscale(t * t, s.star_of(x)), vscale(t, s.star_of(y)));
    return lhs == rhs;
}

IdentityReport check_identities(const Coords& x, const Coords& y, const Coords& u) {
    IdentityReport rep;
    auto expect = [&rep](bool cond, const char* what) {
        ++rep.cases;
        if (!cond) rep.violations.push_back(what);
    };
    expect(qadd(x, x) == x, "x|-x = x");
    expect(qadd(x, qadd(y, x)) == qadd(qadd(x, y), x), "x|-(y|-x) = (x|-y)|-x");
    Coords xy = qadd(x, y);
    expect(qadd(x, qadd(y, y)) == xy, "x|-(y|-y) = x|-y");
    expect(qadd(qadd(x, x), y) == xy, "(x|-x)|-y = x|-y");
    expect(qadd(x, qadd(x, y)) == qadd(y, x), "x|-(x|-y) = y|-x");
    expect(qadd(coords_add(x, u), coords_add(y, u)) == coords_add(xy, u),
           "(x+u)|-(y+u) = (x|-y)+u");
    return rep;
}

ClosureReport check_closure_region(const Scheme& s, const std::vector<QcPoint>& pts,
                                   const std::function<bool(const VecR&)>& region) {
    ClosureReport rep;
    rep.pairs = static_cast<long>(pts.size()) * static_cast<long>(pts.size());
    std::vector<std::vector<std::pair<Coords, Coords>>> bad(thread_count() + 1);
    parallel_chunks(pts.size(), [&](int chunk, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                Coords r = qadd(pts[i].coords, pts[j].coords);
                if (!region(s.star_of(r)))
                    bad[chunk].emplace_back(pts[i].coords, pts[j].coords);
            }
    });
    for (auto& part : bad)
        for (auto& v : part) rep.violations.push_back(std::move(v));
    return rep;
}

ClosureReport check_closure(const Scheme& s, const std::vector<QcPoint>& pts) {
    return check_closure_region(s, pts,
                                [&s](const VecR& p) { return s.window.contains(p); });
}

}  // namespace qc
