#pragma once

#include <vector>

#include "specinf/laurent.hpp"

namespace specinf {

// Facet inequality <m, normal> <= offset with primitive integer normal.
struct Facet {
    ExponentVector normal;
    Rational offset;
};

// A proper face, recorded by the support monomials of f lying on it.
struct Face {
    int dim; // 0 = vertex, 1 = edge, 2 = 2-face
    std::vector<ExponentVector> support;
};

// Newton polytope of a Laurent polynomial. Exact convex hull for n <= 3.
// Facets and the face lattice are only populated for full-dimensional hulls.
struct NewtonPolytope {
    int arity = 0;
    bool full_dimensional = false;
    std::vector<ExponentVector> vertices;
    std::vector<Facet> facets;
    std::vector<Face> faces; // proper faces, deduplicated by support
};

NewtonPolytope newton_polytope(const LaurentPolynomial& f);

// True iff 0 is an interior point of the polytope (requires full dimension).
bool is_convenient(const LaurentPolynomial& f);
bool is_convenient(const NewtonPolytope& P);

// Newton function nu(m) = min{t >= 0 : m in t*P} = max(0, max_F <m,u_F>/c_F).
// Requires a convenient polytope (all offsets > 0).
Rational newton_degree(const NewtonPolytope& P, const ExponentVector& m);

// n! * vol(P), exact, via triangulation from the first vertex.
long normalized_volume(const NewtonPolytope& P);

// Kouchnirenko non-degeneracy: no proper-face truncation of f has a critical
// point in the torus. Checked by torus saturation of the face Jacobians.
bool is_nondegenerate(const LaurentPolynomial& f);

// Lattice points of scale*P (scale >= 0 integer).
std::vector<ExponentVector> lattice_points(const NewtonPolytope& P, long scale);

} // namespace specinf
