#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/golden.hpp"
#include "qc/linalg.hpp"
#include "qc/window.hpp"

namespace qc {

enum class SchemeKind { fibonacci, penrose, z6, z6_icosian, elser_sloane };

/// Canonical integral coordinates: one GoldenInt per lattice pair. Icosian
/// schemes store doubled components (true component = coordinate / 2).
using Coords = std::vector<GoldenInt>;

/// Quasicrystal point with its cached inner image (membership certificate).
struct QcPoint {
    Coords coords;
    VecR star;

    bool operator==(const QcPoint& o) const { return coords == o.coords; }
    bool operator<(const QcPoint& o) const { return coords < o.coords; }
};

/// A cut-and-project scheme: lattice parametrization, star map, physical
/// embedding with its exact quadratic form, and the acceptance window.
class Scheme {
public:
    SchemeKind kind;
    std::string name;
    int pairs;      // GoldenInt coordinates per point
    int phys_dim;   // physical embedding dimension (scaled basis for penrose)
    int inner_dim;  // window dimension
    int denom;      // 1, or 2 for icosian-based doubled coordinates
    ConvexWindow window;

    VecR star_of(const Coords& c) const;
    VecR phys_of(const Coords& c) const;
    /// Exact squared length of the physical image (metric-aware).
    GoldenRat phys_norm2(const Coords& c) const;
    /// Lattice membership beyond the integer parametrization (icosian ring
    /// constraint for the pure-icosian scheme).
    bool lattice_contains(const Coords& c) const;
    bool member(const Coords& c) const { return lattice_contains(c) && window.contains(star_of(c)); }
    /// Builds a certified point; throws if the coordinates are not in the
    /// model set.
    QcPoint make_point(const Coords& c) const;

    Coords zero() const { return Coords(pairs); }
};

/// Named presets: fibonacci-palindromic, fibonacci, penrose, z6, z6-icosian,
/// elser-sloane.
Scheme preset(const std::string& name);
std::vector<std::string> preset_names();

/// Same scheme with the acceptance window replaced.
Scheme with_window(Scheme s, ConvexWindow w);
/// Same scheme with the window shifted in inner space.
Scheme translate_window(const Scheme& s, const VecR& shift);

/// All model-set points whose physical image has squared length <= radius^2,
/// canonically ordered, certificate attached. Deterministic for any thread
/// count.
std::vector<QcPoint> enumerate_points(const Scheme& s, const GoldenRat& radius);

/// The unscaled 720-vertex list of the Elser-Sloane acceptance polytope
/// (true vertices are kappa times these).
std::vector<VecR> elser_sloane_vertices();
/// Builds the H-representation from scratch (expensive; cached on disk by
/// the preset loader).
ConvexWindow build_elser_sloane_window();
/// Loads the cached H-representation, revalidating it; rebuilds and rewrites
/// the cache when missing or invalid.
ConvexWindow load_elser_sloane_window();
std::string elser_sloane_cache_path();

/// Fibonacci integral labels: value of the palindromic chain at index n and
/// the index of a chain point (nullopt when off-chain).
GoldenInt fibonacci_point(long n);
std::optional<long> fibonacci_index(const GoldenInt& x);

}  // namespace qc
