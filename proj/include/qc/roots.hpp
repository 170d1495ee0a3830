#pragma once

#include <string>
#include <vector>

#include "qc/golden.hpp"
#include "qc/linalg.hpp"

namespace qc {

/// Finite root system with exact Q(sqrt5) coordinates. rank is the dimension
/// of the span; the ambient dimension may be larger (the decagon sits inside
/// the icosahedral system).
struct RootSystem {
    std::string name;
    int ambient_dim = 0;
    int rank = 0;
    std::vector<VecR> roots;                      // canonically sorted
    std::vector<std::vector<int>> coxeter_matrix; // rank x rank

    bool contains(const VecR& v) const;
};

struct Reflection {
    VecR axis;
};

/// v - (2 <v|a> / <a|a>) a; rejects a zero axis.
VecR reflect(const Reflection& r, const VecR& v);
MatR reflection_matrix(const VecR& axis);

/// Explicit root systems of type H2 (10 roots), H3 (30) and H4 (120).
RootSystem build_delta(int n);

/// Both root-system axioms: -a in the set and r_a-invariance, for every root.
bool is_root_system(const RootSystem& rs);

/// Indices of a simple system found by a positivity sweep, ordered so that
/// the pairwise product orders match the system's Coxeter matrix.
std::vector<int> simple_root_indices(const RootSystem& rs);
std::vector<Reflection> simple_reflections(const RootSystem& rs);

struct CoxeterReport {
    std::vector<std::vector<int>> observed_order;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks (R_i R_j)^{m_ij} = 1 for the given generators against the system's
/// Coxeter matrix; violations are reported, not thrown.
CoxeterReport verify_coxeter(const RootSystem& rs, const std::vector<Reflection>& gens);

/// True iff 2<b|a>/<a|a> is an integer for every ordered root pair.
bool check_crystallographic(const RootSystem& rs);

/// Order of the group generated by the simple reflections, by closure
/// enumeration; throws if the cap is exceeded.
long reflection_group_order(const RootSystem& rs, long cap = 20000);

/// Membership in the root lattice (integer multiples of roots).
bool root_lattice_contains(const RootSystem& rs, const VecR& beta);

}  // namespace qc
