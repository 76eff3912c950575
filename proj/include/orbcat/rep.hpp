#pragma once

#include <optional>
#include <vector>

#include "orbcat/matrix.hpp"
#include "orbcat/quiver.hpp"

namespace orbcat {

using DimVector = std::vector<int>;

// Quiver representation: a dimension per vertex and a matrix per arrow,
// maps[a] of shape dims[target] x dims[source].
struct Rep {
    Quiver q;
    Field f;
    DimVector dims;             // indexed by vertex-1
    std::vector<Matrix> maps;   // indexed like q.arrows

    int dim(int vertex) const { return dims[vertex - 1]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    static Rep zero(const Quiver& q, const Field& f);
    void validate() const;
    bool operator==(const Rep& o) const = default;
};

// Morphism of representations: one matrix per vertex, comp[v-1] of shape
// N.dims[v] x M.dims[v], intertwining all arrow maps.
struct RepMap {
    std::vector<Matrix> comp;

    static RepMap zero(const Rep& from, const Rep& to);
    static RepMap identity(const Rep& m);
    RepMap operator+(const RepMap& o) const;
    RepMap operator-() const;
    RepMap scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const RepMap& o) const = default;
};

// g after f, per vertex.
RepMap compose(const RepMap& g, const RepMap& f);
bool is_intertwiner(const Rep& from, const Rep& to, const RepMap& phi);
Rep direct_sum(const Rep& a, const Rep& b);

// Interval in path-order positions, inclusive; the support of an
// indecomposable type-A module.
struct Interval {
    int a = 0, b = 0;
    bool operator==(const Interval& o) const = default;
    bool operator<(const Interval& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Rep interval_rep(const Quiver& q, const Field& f, Interval iv);
std::vector<Interval> interval_list(const Quiver& q);

// All indecomposables of a type-A quiver: the interval modules, ordered by
// (a, b) in path positions.
std::vector<Rep> indecomposables(const Quiver& q, const Field& f);

struct HomSpace {
    int dimension = 0;
    std::vector<RepMap> basis;
};
HomSpace hom_space(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

// Entries of phi stacked row-major, vertices in order.
Vector repmap_flatten(const RepMap& phi, const Field& f);
// Coordinates of phi in a hom-space basis; throws if phi is outside the span.
Vector coords_in_hom_basis(const HomSpace& hs, const RepMap& phi, const Field& f);

Rep projective(const Quiver& q, const Field& f, int vertex);
Rep injective(const Quiver& q, const Field& f, int vertex);
Interval projective_interval(const Quiver& q, int vertex);
Interval injective_interval(const Quiver& q, int vertex);

// Minimal projective presentation 0 -> P1 -> P0 -> M -> 0 (hereditary case).
struct Presentation {
    Rep p1, p0;
    RepMap incl;  // P1 -> P0
    RepMap cover; // P0 -> M
};
Presentation minimal_presentation(const Rep& m);

// dim coker(Hom(P0,N) -> Hom(P1,N)) for the presentation above.
int ext1_dim(const Rep& m, const Rep& n);

// Auslander-Reiten translate via the Nakayama construction; empty for
// projectives. Input must be an interval module (indecomposable).
std::optional<Rep> ar_translate(const Rep& m);

// Kernel of a morphism as a subrepresentation, with its inclusion.
struct SubRep {
    Rep rep;
    RepMap incl;
};
SubRep kernel_rep(const Rep& from, const Rep& to, const RepMap& phi);

// Nakayama functor data: nu(X)_v = D Hom(X, P(v)) with the arrow maps dual
// to composition with the canonical inclusions P(t) -> P(s).
struct NuRep {
    Rep rep;
    std::vector<HomSpace> hom_to_proj;  // per vertex v-1: basis of Hom(X, P(v))
};
NuRep nakayama(const Rep& x);
RepMap nakayama_map(const Rep& x, const Rep& y, const NuRep& nx, const NuRep& ny, const RepMap& phi);

// Cartan matrix C (columns = dimension vectors of the indecomposable
// projectives) and the Coxeter transformation, satisfying
// dim(tau M) = Phi . dim(M) for non-projective indecomposables.
Matrix cartan_matrix(const Quiver& q);
Matrix coxeter_matrix(const Quiver& q);

}  // namespace orbcat
