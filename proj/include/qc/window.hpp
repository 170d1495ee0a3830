#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/golden.hpp"
#include "qc/linalg.hpp"

namespace qc {

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One halfspace normal . x <= offset (or < for open facets). When
/// kappa_scaled is set the true offset is kappa * offset with
/// kappa = tau / sqrt(4 + 2 tau).
struct Facet {
    VecR normal;
    GoldenRat offset;
    bool kappa_scaled = false;
    bool closed = true;
};

/// Exact H-representation of a convex acceptance window, with the defining
/// vertex list kept alongside when available. For kappa-scaled windows the
/// stored vertices are unscaled (true vertex = kappa * v).
class ConvexWindow {
public:
    ConvexWindow() = default;
    ConvexWindow(int dim, std::vector<Facet> facets, std::vector<VecR> vertices,
                 bool kappa_scaled_vertices = false)
        : dim_(dim),
          facets_(std::move(facets)),
          vertices_(std::move(vertices)),
          kappa_vertices_(kappa_scaled_vertices) {
        init_inner_ball();
    }

    /// Closed interval [lo, hi] in dimension 1.
    static ConvexWindow interval(const GoldenRat& lo, const GoldenRat& hi,
                                 bool lo_closed = true, bool hi_closed = true);

    int dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<VecR>& vertices() const { return vertices_; }
    bool kappa_scaled_vertices() const { return kappa_vertices_; }

    bool contains(const VecR& p) const;

    /// Per-axis rational bounds that enclose the true window.
    std::vector<std::pair<GoldenRat, GoldenRat>> outer_bbox() const;

    /// Same window shifted by `shift` in inner space. Unsupported for
    /// kappa-scaled windows (the shifted offsets leave the representation).
    ConvexWindow translated(const VecR& shift) const;

    /// Checks every stored vertex against every facet (closure reading) and
    /// that each facet is supported by >= dim affinely independent vertices.
    void validate() const;

    /// Canonical per-facet keys (positive rescaling quotient); order-free
    /// comparison of facet sets.
    std::vector<std::string> facet_keys() const;

    std::string to_json() const;
    static ConvexWindow from_json(const std::string& text);

private:
    void init_inner_ball();

    int dim_ = 0;
    std::vector<Facet> facets_;
    std::vector<VecR> vertices_;
    bool kappa_vertices_ = false;
    // squared radius of an origin-centred ball strictly inside the window;
    // lets membership skip the facet loop for deep-interior points
    std::optional<GoldenRat> inner_ball2_;
};

/// Exact incremental convex hull over Q(sqrt5), dimensions 1 through 4.
/// Returns the window with deduplicated facet hyperplanes (all closed) and
/// the input vertices attached. Throws WindowError if the points do not
/// affinely span the space.
ConvexWindow facets_from_vertices(int dim, const std::vector<VecR>& vertices,
                                  bool kappa_scaled = false);

}  // namespace qc
