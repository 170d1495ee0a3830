#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qc/scheme.hpp"

namespace qc {

/// Quasiaddition x |- y = tau^2 x - tau y on one Z[tau] pair.
inline GoldenInt qadd_pair(const GoldenInt& x, const GoldenInt& y) {
    return {x.a() + x.b() - y.b(), x.a() + 2 * x.b() - y.a() - y.b()};
}

inline Coords qadd(const Coords& x, const Coords& y) {
    if (x.size() != y.size()) throw std::invalid_argument("qadd: coordinate mismatch");
    Coords r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = qadd_pair(x[k], y[k]);
    return r;
}

inline Coords coords_add(const Coords& x, const Coords& y) {
    Coords r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] + y[k];
    return r;
}

inline Coords coords_sub(const Coords& x, const Coords& y) {
    Coords r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
    return r;
}

inline Coords coords_neg(const Coords& x) {
    Coords r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = -x[k];
    return r;
}

inline Coords coords_scale(const GoldenInt& t, const Coords& x) {
    Coords r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = t * x[k];
    return r;
}

/// (((y |- x) |- x) ... |- x), x quasiadded k times.
Coords qadd_repeated_iterative(const Coords& y, const Coords& x, long k);
/// Closed form (1+tau)^k (y - x) + x.
Coords qadd_repeated_closed(const Coords& y, const Coords& x, long k);

/// Exact check of star(x |- y) = (1-tau)^2 x* - (1-tau) y*.
bool star_compatibility_holds(const Scheme& s, const Coords& x, const Coords& y);

struct IdentityReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// The four quasiaddition identities plus translational invariance on one
/// coordinate triple, all exact.
IdentityReport check_identities(const Coords& x, const Coords& y, const Coords& u);

struct ClosureReport {
    long pairs = 0;
    std::vector<std::pair<Coords, Coords>> violations;
    bool ok() const { return violations.empty(); }
};

/// star(x |- y) must land in the window for every ordered pair.
ClosureReport check_closure(const Scheme& s, const std::vector<QcPoint>& pts);
/// Same with a custom inner-space membership predicate (used to exhibit the
/// failure for non-convex regions).
ClosureReport check_closure_region(const Scheme& s, const std::vector<QcPoint>& pts,
                                   const std::function<bool(const VecR&)>& region);

}  // namespace qc
