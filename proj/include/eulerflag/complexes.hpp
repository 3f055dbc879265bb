#pragma once

#include "eulerflag/flag.hpp"
#include "eulerflag/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace eulerflag {

using Vertex = std::string;
using Face = std::vector<Vertex>;  // sorted, no repeats; {} is the empty face

std::string face_id(const Face& face);  // "{a,b}"
Face make_face(std::vector<Vertex> vertices);

// Abstract simplicial complex given by its facets. Faces are enumerated once at
// construction, so a complex is immutable and safe to share between threads.
// The complex with no facets is {empty face}; the void complex is not representable.
class SimplicialComplex {
public:
    SimplicialComplex();  // {empty face}
    // Non-maximal facets are dropped; `extra_vertices` become faces in their own right.
    explicit SimplicialComplex(std::vector<Face> facets, const std::vector<Vertex>& extra_vertices = {});

    const std::vector<Face>& facets() const { return facets_; }
    // Ordered by (size, lexicographic); the empty face first.
    const std::vector<Face>& faces() const { return faces_; }
    std::vector<Vertex> vertices() const;
    bool contains(const Face& face) const;
    int dimension() const;  // -1 for {empty face}

    SimplicialComplex link(const Face& face) const;
    long euler_characteristic() const;  // over nonempty faces
    long reduced_euler_characteristic() const { return euler_characteristic() - 1; }

    SimplicialComplex intersection(const SimplicialComplex& other) const;
    SimplicialComplex union_with(const SimplicialComplex& other) const;
    // The subcomplex generated by the given faces (each must be a face).
    SimplicialComplex generated_by(const std::vector<Face>& faces) const;

    friend bool operator==(const SimplicialComplex& l, const SimplicialComplex& r) { return l.faces_ == r.faces_; }

private:
    std::vector<Face> facets_;
    std::vector<Face> faces_;
};

// Faces ranked by size, bottom "{}"; with adjoin_top an extra element "1" above all.
QuasiGradedPoset face_poset_classical(const SimplicialComplex& gamma, bool adjoin_top);

// Faces of gamma, "*" at rank n and "1" at rank n+1; zeta(x,*) = 1 + (-1)^{n-|x|} reduced
// Euler characteristic of link(x). Faces of size n are not below "*".
QuasiGradedPoset semisuspension(const SimplicialComplex& gamma, int n);

// Elements "0" < "p" < "c" < "b" of ranks 0, 1, n, n+1 with zeta(p,c) = 1 + (-1)^n.
QuasiGradedPoset omega_poset(int n);

// "0" < "dM" < "M" of ranks 0, n, n+1.
QuasiGradedPoset manifold_poset(int n, const Rational& chi);

// variant 1: face lattice (n = 1: one vertex, one edge, zeta 2); 2: edges merged;
// 3: edges and vertices merged.
QuasiGradedPoset ngon_poset(int n, int variant);

// "0" < "x1" < ... < "xn" < "1" with zeta(0,xi) = f[i-1], zeta(xi,xj) = C(n+1-i, n+1-j).
QuasiGradedPoset simple_chain_poset(const std::vector<Rational>& f);

AbPoly semisuspension_of_empty_face(int n);

// Psi(Semi(gamma,n)) + Psi(Semi(delta,n)) = Psi(Semi(meet,n)) + Psi(Semi(join,n)).
bool check_inclusion_exclusion(const SimplicialComplex& gamma, const SimplicialComplex& delta, int n);

// -sum over distinct intersections F of facets of rchi(link F) Psi(B_|F|) Psi(Omega_{n-dim F});
// the empty intersection contributes Psi(Semi({empty face}, n)).
CdPoly semisuspension_via_intersections(const SimplicialComplex& gamma, int n);

// Psi(Semi(gamma,n+1)) = Psi(Semi(gamma,n)) c - Psi([0,*]) d.
bool check_wednesday(const SimplicialComplex& gamma, int n);

// Boundary complexes of two subdivisions of the n-ball (interior = top cell) and
// the carrier of every lambda face in gamma.
struct Subdivision {
    SimplicialComplex gamma;
    SimplicialComplex lambda;
    std::map<Face, Face> carrier;
};

// Fills carriers of higher faces from the vertex carriers (union) where not
// given, and validates the whole map.
Subdivision make_subdivision(SimplicialComplex gamma, SimplicialComplex lambda,
                             const std::map<Face, Face>& given_carriers);

struct LocalRelation {
    AbPoly sum;
    std::vector<std::pair<std::string, AbPoly>> terms;  // label ("0", face id, "1"), signed term
    bool holds() const { return sum.is_zero(); }
};

LocalRelation check_local_relation(const Subdivision& subdivision, int n);

}  // namespace eulerflag
