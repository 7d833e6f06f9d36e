#include "specinf/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "specinf/errors.hpp"
#include "specinf/matrix.hpp"

namespace specinf {

namespace {

long vec_gcd(const ExponentVector& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::labs(x));
    return g;
}

void make_primitive(ExponentVector& v) {
    long g = vec_gcd(v);
    if (g > 1)
        for (long& x : v) x /= g;
}

long dot(const ExponentVector& a, const ExponentVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int affine_rank(const std::vector<ExponentVector>& pts) {
    if (pts.empty()) return -1;
    QMatrix m(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            m.at(i - 1, j) = Rational(pts[i][j] - pts[0][j]);
    return static_cast<int>(m.rank());
}

// Integer normal of the hyperplane through the given n affinely independent
// points; zero vector if they are affinely dependent.
ExponentVector hyperplane_normal(const std::vector<ExponentVector>& pts) {
    std::size_t n = pts[0].size();
    if (n == 2) {
        long dx = pts[1][0] - pts[0][0], dy = pts[1][1] - pts[0][1];
        ExponentVector u = {dy, -dx};
        make_primitive(u);
        return u;
    }
    if (n == 3) {
        ExponentVector d1 = pts[1] - pts[0], d2 = pts[2] - pts[0];
        ExponentVector u = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
                            d1[0] * d2[1] - d1[1] * d2[0]};
        make_primitive(u);
        return u;
    }
    return ExponentVector(n, 0);
}

std::vector<ExponentVector> support_points(const LaurentPolynomial& f) {
    std::vector<ExponentVector> pts;
    for (const auto& [m, c] : f.terms()) pts.push_back(m);
    return pts;
}

// Orders coplanar points in convex position around their centroid; `up` is
// the plane normal fixing the rotation sense (may be empty in 2D).
void sort_cycle(std::vector<ExponentVector>& pts, const ExponentVector& up) {
    std::size_t n = pts[0].size();
    std::vector<Rational> g(n, Rational(0));
    for (const auto& p : pts)
        for (std::size_t j = 0; j < n; ++j) g[j] += Rational(p[j]);
    for (auto& c : g) c /= Rational(static_cast<long>(pts.size()));
    auto rel = [&](const ExponentVector& p) {
        std::vector<Rational> d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = Rational(p[j]) - g[j];
        return d;
    };
    // signed area component of u x v along `up` (or the scalar cross in 2D)
    auto cross = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) -> Rational {
        if (n == 2) return u[0] * v[1] - u[1] * v[0];
        Rational s = 0;
        s += (u[1] * v[2] - u[2] * v[1]) * Rational(up[0]);
        s += (u[2] * v[0] - u[0] * v[2]) * Rational(up[1]);
        s += (u[0] * v[1] - u[1] * v[0]) * Rational(up[2]);
        return s;
    };
    std::vector<Rational> ref = rel(pts[0]);
    std::sort(pts.begin(), pts.end(), [&](const ExponentVector& a, const ExponentVector& b) {
        auto da = rel(a), db = rel(b);
        Rational ca = cross(ref, da), cb = cross(ref, db);
        // half-plane relative to the reference ray
        auto dotq = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += u[j] * v[j];
            return s;
        };
        int ha = (ca > 0) ? 0 : (ca < 0 ? 2 : (dotq(ref, da) > 0 ? 0 : 1));
        int hb = (cb > 0) ? 0 : (cb < 0 ? 2 : (dotq(ref, db) > 0 ? 0 : 1));
        if (ha != hb) return ha < hb;
        return cross(da, db) > 0;
    });
}

} // namespace

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw EmptyPolynomial();
    const int n = f.arity();
    if (n > 3) throw ArityLimitExceeded(n);
    NewtonPolytope P;
    P.arity = n;
    std::vector<ExponentVector> pts = support_points(f);
    P.full_dimensional = (affine_rank(pts) == n);
    if (!P.full_dimensional) {
        // vertices still reported as the extreme points of the (degenerate)
        // hull; facet description is only meaningful in full dimension
        if (n == 1 || pts.size() == 1) {
            P.vertices = {*std::min_element(pts.begin(), pts.end()),
                          *std::max_element(pts.begin(), pts.end())};
            if (P.vertices[0] == P.vertices[1]) P.vertices.pop_back();
        } else {
            P.vertices = pts;
        }
        return P;
    }

    // facet enumeration: every n-subset spanning a hyperplane is a candidate
    if (n == 1) {
        long lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        P.facets.push_back({{1}, Rational(hi)});
        P.facets.push_back({{-1}, Rational(-lo)});
        P.vertices = {{lo}, {hi}};
        P.faces.push_back({0, {{lo}}});
        P.faces.push_back({0, {{hi}}});
        return P;
    }

    std::set<std::pair<ExponentVector, long>> seen;
    std::vector<std::size_t> idx(n);
    auto try_subset = [&](const std::vector<ExponentVector>& sub) {
        ExponentVector u = hyperplane_normal(sub);
        if (vec_gcd(u) == 0) return;
        long c = dot(u, sub[0]);
        bool below = true, above = true;
        for (const auto& p : pts) {
            long d = dot(u, p);
            if (d > c) below = false;
            if (d < c) above = false;
        }
        if (!below && !above) return;
        if (!below) {
            for (long& x : u) x = -x;
            c = -c;
        }
        if (seen.insert({u, c}).second) P.facets.push_back({u, Rational(c)});
    };
    std::vector<std::size_t> comb(n);
    auto rec = [&](auto&& self, std::size_t start, std::size_t k) -> void {
        if (k == static_cast<std::size_t>(n)) {
            std::vector<ExponentVector> sub;
            for (std::size_t i : comb) sub.push_back(pts[i]);
            try_subset(sub);
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            comb[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    rec(rec, 0, 0);

    // vertices: support points whose tight facet normals span R^n
    for (const auto& p : pts) {
        QMatrix tight(0, 0);
        std::vector<std::vector<Rational>> rows;
        for (const auto& F : P.facets)
            if (Rational(dot(F.normal, p)) == F.offset) {
                std::vector<Rational> r(n);
                for (int j = 0; j < n; ++j) r[j] = Rational(F.normal[j]);
                rows.push_back(r);
            }
        IncrementalRank rk;
        for (const auto& r : rows) rk.add_row(r);
        if (rk.rank() == static_cast<std::size_t>(n)) P.vertices.push_back(p);
    }
    std::sort(P.vertices.begin(), P.vertices.end());

    // proper faces, keyed by the support subset lying on them
    std::set<std::vector<ExponentVector>> face_supports;
    auto add_face = [&](const std::vector<std::size_t>& facet_set) {
        std::vector<ExponentVector> sup;
        for (const auto& p : pts) {
            bool on_all = true;
            for (std::size_t fi : facet_set)
                if (Rational(dot(P.facets[fi].normal, p)) != P.facets[fi].offset) on_all = false;
            if (on_all) sup.push_back(p);
        }
        if (sup.empty()) return;
        std::sort(sup.begin(), sup.end());
        if (face_supports.insert(sup).second) P.faces.push_back({affine_rank(sup), sup});
    };
    for (std::size_t i = 0; i < P.facets.size(); ++i) {
        add_face({i});
        for (std::size_t j = i + 1; j < P.facets.size(); ++j) {
            add_face({i, j});
            if (n == 3)
                for (std::size_t k = j + 1; k < P.facets.size(); ++k) add_face({i, j, k});
        }
    }
    return P;
}

bool is_convenient(const NewtonPolytope& P) {
    if (!P.full_dimensional) return false;
    for (const auto& F : P.facets)
        if (F.offset <= 0) return false;
    return true;
}

bool is_convenient(const LaurentPolynomial& f) { return is_convenient(newton_polytope(f)); }

Rational newton_degree(const NewtonPolytope& P, const ExponentVector& m) {
    if (!is_convenient(P)) throw NotConvenient();
    Rational best = 0;
    for (const auto& F : P.facets) {
        Rational v = Rational(dot(F.normal, m)) / F.offset;
        if (v > best) best = v;
    }
    best.canonicalize();
    return best;
}

long normalized_volume(const NewtonPolytope& P) {
    if (!P.full_dimensional) throw DegeneratePolytope();
    const int n = P.arity;
    if (n == 1) return P.vertices.back()[0] - P.vertices.front()[0];
    if (n == 2) {
        std::vector<ExponentVector> cyc = P.vertices;
        sort_cycle(cyc, {});
        long twice_area = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto& a = cyc[i];
            const auto& b = cyc[(i + 1) % cyc.size()];
            twice_area += a[0] * b[1] - a[1] * b[0];
        }
        return std::labs(twice_area);
    }
    // n == 3: signed sum over outward-oriented facet triangulations
    long six_vol = 0;
    for (const auto& F : P.facets) {
        std::vector<ExponentVector> fv;
        for (const auto& v : P.vertices)
            if (Rational(dot(F.normal, v)) == F.offset) fv.push_back(v);
        sort_cycle(fv, F.normal);
        for (std::size_t i = 1; i + 1 < fv.size(); ++i) {
            const auto &a = fv[0], &b = fv[i], &c = fv[i + 1];
            long det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
            // orient the triangle so its normal agrees with the outward facet normal
            ExponentVector tn = hyperplane_normal({a, b, c});
            six_vol += dot(tn, F.normal) > 0 ? det : -det;
        }
    }
    return std::labs(six_vol);
}

std::vector<ExponentVector> lattice_points(const NewtonPolytope& P, long scale) {
    if (!P.full_dimensional) throw DegeneratePolytope();
    const int n = P.arity;
    ExponentVector lo(n, 0), hi(n, 0);
    for (const auto& v : P.vertices)
        for (int j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], scale * v[j]);
            hi[j] = std::max(hi[j], scale * v[j]);
        }
    std::vector<ExponentVector> out;
    ExponentVector m = lo;
    for (;;) {
        bool inside = true;
        for (const auto& F : P.facets)
            if (Rational(dot(F.normal, m)) > Rational(scale) * F.offset) inside = false;
        if (inside) out.push_back(m);
        int j = 0;
        while (j < n && m[j] == hi[j]) {
            m[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++m[j];
    }
    return out;
}

} // namespace specinf
