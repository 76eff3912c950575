#pragma once

#include <map>

#include "orbcat/rep.hpp"

namespace orbcat {

// Bounded complex of representations, homologically graded: the
// differential d_n maps the degree-n term to degree n-1 and d.d = 0.
// Plain complexes of vector spaces are the one-vertex-quiver case.
struct Complex {
    Quiver q;
    Field f;
    std::map<int, Rep> terms;     // nonzero terms only
    std::map<int, RepMap> diffs;  // nonzero differentials only, keyed by source degree

    Rep term(int n) const;
    RepMap diff(int n) const;     // d_n: term(n) -> term(n-1)
    bool has_term(int n) const { return terms.count(n) != 0; }
    int lo() const;
    int hi() const;
    bool is_zero() const { return terms.empty(); }
    int dim_at(int n) const { return term(n).total_dim(); }

    void validate() const;
    bool operator==(const Complex& o) const = default;
};

Complex make_complex(const Quiver& q, const Field& f, std::map<int, Rep> terms,
                     std::map<int, RepMap> diffs);
Complex stalk_complex(const Rep& m, int degree);
Complex zero_complex(const Quiver& q, const Field& f);
Complex complex_direct_sum(const Complex& a, const Complex& b);

// (Sigma^n X)_{k+n} = X_k with the differential scaled by (-1)^n.
Complex shift_complex(const Complex& x, int n);

// Homogeneous degree-n map: components f_k : X_k -> Y_{k+n}.
struct GradedMap {
    Complex source, target;
    int degree = 0;
    std::map<int, RepMap> comp;  // nonzero components only

    RepMap component(int k) const;
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-() const;
    GradedMap scaled(const Scalar& c) const;
    bool is_zero_map() const { return comp.empty(); }
    void prune();  // drop zero components
};

GradedMap graded_zero(const Complex& x, const Complex& y, int degree);
GradedMap gm_compose(const GradedMap& g, const GradedMap& f);
// dY . f - (-1)^n f . dX
GradedMap hom_differential(const GradedMap& f);

// Degree-0 cycle of the hom complex, i.e. an actual map of complexes.
struct ChainMap {
    Complex source, target;
    std::map<int, RepMap> comp;

    RepMap component(int k) const;
    GradedMap as_graded() const;
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-() const;
    ChainMap scaled(const Scalar& c) const;
    bool is_zero_map() const { return comp.empty(); }
    void validate() const;
};

ChainMap chain_identity(const Complex& x);
ChainMap chain_zero(const Complex& x, const Complex& y);
ChainMap chain_from_graded(const GradedMap& g);  // validates the cycle condition
ChainMap chain_compose(const ChainMap& g, const ChainMap& f);
ChainMap shift_map(const ChainMap& f, int n);

// Mapping cone with its structure maps: (Cf)_k = Y_k + X_{k-1},
// D(y,x) = (dy + fx, -dx); Y -> Cf -> Sigma X, and the degree-1 inclusion
// of X that together with Y -> Cf forms the universal cycle.
struct ConeData {
    Complex cone;
    ChainMap from_target;    // Y -> Cf
    ChainMap to_shift_source;  // Cf -> Sigma X
    GradedMap universal;     // X -> Cf, degree +1
};
ConeData cone(const ChainMap& f);
Complex cone_complex(const ChainMap& f);

// Hom complex with its block bookkeeping. `total` is a plain complex whose
// degree-n dimension is sum_k dim Hom(X_k, Y_{k+n}).
struct HomComplex {
    struct Block {
        int k;
        HomSpace basis;
        int offset;
    };
    Complex x, y;
    Complex total;
    std::map<int, std::vector<Block>> blocks;

    int dim(int degree) const { return total.dim_at(degree); }
    Vector coords(const GradedMap& f) const;
    GradedMap from_coords(int degree, const Vector& v) const;
    Matrix diff_matrix(int degree) const;  // of `total`
};

HomComplex hom_complex(const Complex& x, const Complex& y);

std::vector<ChainMap> cycle_homs(const Complex& x, const Complex& y);

struct HomotopyClass {
    ChainMap rep;
};

struct HomologyHoms {
    int dimension = 0;
    std::vector<HomotopyClass> basis;
};
HomologyHoms homology_homs(const Complex& x, const Complex& y);

bool is_nullhomotopic(const ChainMap& f);
bool is_chain_homotopic(const ChainMap& f, const ChainMap& g);

// Cached data for expressing homotopy classes in a fixed basis.
struct HomBasisData {
    HomComplex hc;
    std::vector<ChainMap> reps;
    Matrix rep_cols;       // degree-0 coordinates of the representatives
    Matrix boundary_cols;  // d_1 of the hom complex
    int dimension() const { return (int)reps.size(); }
    Vector class_coords(const ChainMap& f) const;
};
HomBasisData hom_basis_data(const Complex& x, const Complex& y);

// Homology of the complex itself (vertexwise), with chosen representatives.
struct ComplexHomology {
    struct Piece {
        Matrix boundaries;  // columns spanning the boundary space
        Matrix reps;        // columns: cycles spanning homology
    };
    std::map<int, std::vector<Piece>> pieces;  // degree -> per vertex
    DimVector dims(int degree, int vertex_count) const;
};
ComplexHomology homology(const Complex& c);
std::map<int, DimVector> homology_dims(const Complex& c);
bool is_acyclic(const Complex& c);
// matrix of H(f) at one degree and vertex
Matrix homology_induced(const ComplexHomology& hx, const ComplexHomology& hy, const ChainMap& f,
                        int degree, int vertex);

// Cofibrations are the degreewise (split) monomorphisms.
bool is_cofibration(const ChainMap& f);
Complex quotient_complex(const ChainMap& f);  // Y / im f, for a cofibration
// Chain homotopy equivalences, decided by acyclicity of the cone.
bool is_weak_equivalence(const ChainMap& f);

enum class ConeCorruption { none, flipped_sign, dropped_summand, swapped_order };
bool verify_cone_representability(const ChainMap& f, const Complex& z,
                                  ConeCorruption corruption = ConeCorruption::none);

}  // namespace orbcat
