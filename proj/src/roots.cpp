#include "qc/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qc {

bool RootSystem::contains(const VecR& v) const {
    return std::binary_search(roots.begin(), roots.end(), v, vec_lex_less);
}

VecR reflect(const Reflection& r, const VecR& v) {
    GoldenRat a2 = dot(r.axis, r.axis);
    if (a2.is_zero()) throw std::invalid_argument("reflect: zero axis");
    GoldenRat c = GoldenRat(Rat(2)) * dot(v, r.axis) * a2.inverse();
    return vsub(v, vscale(c, r.axis));
}

MatR reflection_matrix(const VecR& axis) {
    int n = static_cast<int>(axis.size());
    MatR m = mat_identity(n);
    GoldenRat a2 = dot(axis, axis);
    if (a2.is_zero()) throw std::invalid_argument("reflection_matrix: zero axis");
    GoldenRat two_inv = GoldenRat(Rat(2)) * a2.inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] -= two_inv * axis[i] * axis[j];
    return m;
}

namespace {

const GoldenRat kOne = GoldenRat::one();
const GoldenRat kTau = GoldenRat::tau();
const GoldenRat kInvTau = GoldenRat::tau() - GoldenRat::one();
const GoldenRat kHalf = GoldenRat(Rat(1, 2));

void sort_canon(std::vector<VecR>& v) {
    std::sort(v.begin(), v.end(), vec_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<VecR> delta3_roots() {
    std::vector<VecR> out;
    for (int pos = 0; pos < 3; ++pos)
        for (int s : {1, -1}) {
            VecR v(3, GoldenRat::zero());
            v[pos] = s > 0 ? kOne : -kOne;
            out.push_back(v);
        }
    // (1/2)(+-1, +-1/tau, +-tau) and all even (cyclic) permutations
    for (int rot = 0; rot < 3; ++rot)
        for (int m = 0; m < 8; ++m) {
            VecR v = {kHalf, kInvTau * kHalf, kTau * kHalf};
            std::rotate(v.begin(), v.begin() + rot, v.end());
            for (int k = 0; k < 3; ++k)
                if ((m >> k) & 1) v[k] = -v[k];
            out.push_back(v);
        }
    sort_canon(out);
    return out;
}

std::vector<VecR> delta4_roots() {
    std::vector<VecR> out;
    for (int pos = 0; pos < 4; ++pos)
        for (int s : {1, -1}) {
            VecR v(4, GoldenRat::zero());
            v[pos] = s > 0 ? kOne : -kOne;
            out.push_back(v);
        }
    for (int m = 0; m < 16; ++m) {
        VecR v(4, kHalf);
        for (int k = 0; k < 4; ++k)
            if ((m >> k) & 1) v[k] = -v[k];
        out.push_back(v);
    }
    static const int even_perm[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
                                         {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
                                         {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
    const VecR base = {GoldenRat::zero(), kHalf, kInvTau * kHalf, kTau * kHalf};
    for (const auto& p : even_perm)
        for (int m = 0; m < 8; ++m) {
            VecR v(4);
            int bit = 0;
            for (int k = 0; k < 4; ++k) {
                GoldenRat c = base[p[k]];
                if (!c.is_zero() && ((m >> bit++) & 1)) c = -c;
                v[k] = c;
            }
            out.push_back(v);
        }
    sort_canon(out);
    return out;
}

// The decagon section of the icosahedral system: roots orthogonal to the
// five-fold axis (0, 1, tau).
std::vector<VecR> delta2_roots() {
    const VecR axis = {GoldenRat::zero(), kOne, kTau};
    std::vector<VecR> out;
    for (const auto& r : delta3_roots())
        if (dot(r, axis).is_zero()) out.push_back(r);
    sort_canon(out);
    return out;
}

}  // namespace

RootSystem build_delta(int n) {
    RootSystem rs;
    switch (n) {
        case 2:
            rs = {"H2", 3, 2, delta2_roots(), {{1, 5}, {5, 1}}};
            break;
        case 3:
            rs = {"H3", 3, 3, delta3_roots(), {{1, 3, 2}, {3, 1, 5}, {2, 5, 1}}};
            break;
        case 4:
            rs = {"H4", 4, 4, delta4_roots(),
                  {{1, 3, 2, 2}, {3, 1, 3, 2}, {2, 3, 1, 5}, {2, 2, 5, 1}}};
            break;
        default:
            throw std::invalid_argument("build_delta: n must be 2, 3 or 4");
    }
    return rs;
}

bool is_root_system(const RootSystem& rs) {
    for (const auto& a : rs.roots) {
        if (!rs.contains(vneg(a))) return false;
        Reflection r{a};
        for (const auto& b : rs.roots)
            if (!rs.contains(reflect(r, b))) return false;
    }
    return true;
}

namespace {

VecR sweep_functional(const RootSystem& rs) {
    // generic rational direction: no root may be orthogonal to it
    for (long seed = 1; seed < 200; ++seed) {
        VecR t(rs.ambient_dim);
        Rat x(1);
        for (int k = 0; k < rs.ambient_dim; ++k) {
            t[k] = GoldenRat(x);
            x /= (7 + seed);
        }
        bool ok = true;
        for (const auto& r : rs.roots)
            if (dot(r, t).is_zero()) { ok = false; break; }
        if (ok) return t;
    }
    throw std::runtime_error("sweep_functional: no generic direction found");
}

int product_order(const MatR& a, const MatR& b, int cap = 40) {
    MatR p = mat_mul(a, b);
    MatR acc = p;
    MatR id = mat_identity(static_cast<int>(a.size()));
    for (int k = 1; k <= cap; ++k) {
        if (mat_eq(acc, id)) return k;
        acc = mat_mul(acc, p);
    }
    return -1;
}

}  // namespace

std::vector<int> simple_root_indices(const RootSystem& rs) {
    VecR t = sweep_functional(rs);
    std::vector<int> positive;
    for (int i = 0; i < static_cast<int>(rs.roots.size()); ++i)
        if (dot(rs.roots[i], t).sign() > 0) positive.push_back(i);

    // simple <=> its reflection permutes the other positive roots
    std::vector<int> simple;
    for (int i : positive) {
        Reflection r{rs.roots[i]};
        bool ok = true;
        for (int j : positive) {
            if (j == i) continue;
            VecR im = reflect(r, rs.roots[j]);
            if (dot(im, t).sign() <= 0) { ok = false; break; }
        }
        if (ok) simple.push_back(i);
    }
    if (static_cast<int>(simple.size()) != rs.rank)
        throw std::runtime_error("simple system size != rank for " + rs.name);

    // order the generators so pairwise product orders match the Coxeter matrix
    std::vector<MatR> refl;
    for (int i : simple) refl.push_back(reflection_matrix(rs.roots[i]));
    int n = rs.rank;
    std::vector<std::vector<int>> order(n, std::vector<int>(n, 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            order[i][j] = order[j][i] = product_order(refl[i], refl[j]);

    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    std::vector<int> out;
    auto backtrack = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev)
                if (order[perm[prev]][cand] != rs.coxeter_matrix[prev][pos]) ok = false;
            if (!ok) continue;
            perm[pos] = cand;
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (!backtrack(backtrack, 0))
        throw std::runtime_error("no generator ordering matches the Coxeter matrix of " + rs.name);
    for (int i = 0; i < n; ++i) out.push_back(simple[perm[i]]);
    return out;
}

std::vector<Reflection> simple_reflections(const RootSystem& rs) {
    std::vector<Reflection> out;
    for (int i : simple_root_indices(rs)) out.push_back(Reflection{rs.roots[i]});
    return out;
}

CoxeterReport verify_coxeter(const RootSystem& rs, const std::vector<Reflection>& gens) {
    CoxeterReport rep;
    int n = static_cast<int>(gens.size());
    std::vector<MatR> m;
    for (const auto& g : gens) m.push_back(reflection_matrix(g.axis));
    rep.observed_order.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ord = product_order(m[i], m[j]);
            rep.observed_order[i][j] = ord;
            int want = rs.coxeter_matrix[i][j];
            if (ord != want)
                rep.violations.push_back("(R" + std::to_string(i + 1) + " R" +
                                         std::to_string(j + 1) + ") has order " +
                                         std::to_string(ord) + ", expected " +
                                         std::to_string(want));
        }
    return rep;
}

bool check_crystallographic(const RootSystem& rs) {
    for (const auto& a : rs.roots) {
        GoldenRat a2_inv = dot(a, a).inverse();
        for (const auto& b : rs.roots) {
            GoldenRat ratio = GoldenRat(Rat(2)) * dot(b, a) * a2_inv;
            if (!ratio.is_rational() || ratio.p().get_den() != 1) return false;
        }
    }
    return true;
}

long reflection_group_order(const RootSystem& rs, long cap) {
    auto gens = simple_reflections(rs);
    std::vector<MatR> gm;
    for (const auto& g : gens) gm.push_back(reflection_matrix(g.axis));
    auto key = [](const MatR& m) {
        std::string k;
        for (const auto& row : m)
            for (const auto& c : row) k += c.str() + "|";
        return k;
    };
    std::map<std::string, MatR> seen;
    MatR id = mat_identity(rs.ambient_dim);
    seen.emplace(key(id), id);
    std::vector<MatR> frontier = {id};
    while (!frontier.empty()) {
        std::vector<MatR> next;
        for (const auto& m : frontier)
            for (const auto& g : gm) {
                MatR p = mat_mul(m, g);
                auto k = key(p);
                if (seen.emplace(k, p).second) {
                    next.push_back(std::move(p));
                    if (static_cast<long>(seen.size()) > cap)
                        throw std::runtime_error("reflection group exceeds cap");
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size());
}

bool root_lattice_contains(const RootSystem& rs, const VecR& beta) {
    bool all_zero = true;
    for (const auto& c : beta)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) return true;
    for (const auto& a : rs.roots) {
        // beta = n * a for an integer n?
        GoldenRat n;
        bool ok = true, have = false;
        for (std::size_t k = 0; k < beta.size() && ok; ++k) {
            if (a[k].is_zero()) {
                if (!beta[k].is_zero()) ok = false;
                continue;
            }
            GoldenRat q = beta[k] * a[k].inverse();
            if (!have) {
                n = q;
                have = true;
            } else if (!(q == n)) {
                ok = false;
            }
        }
        if (ok && have && n.is_rational() && n.p().get_den() == 1) return true;
    }
    return false;
}

}  // namespace qc
