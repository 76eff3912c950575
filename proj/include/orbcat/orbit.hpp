#pragma once

#include <mutex>

#include "orbcat/derived.hpp"

namespace orbcat {

// Self-equivalence tau^p Sigma^s acting on derived labels.
struct AutoEquivalence {
    int tau_pow = 0;
    int sigma_pow = 0;
    bool operator==(const AutoEquivalence& o) const = default;
};

// Canonical representative of an F-orbit: the orbit member with the
// lexicographically least (shift, module) among nonnegative shifts.
struct OrbitObj {
    DbIndec rep;
    bool operator==(const OrbitObj& o) const = default;
    bool operator<(const OrbitObj& o) const { return rep < o.rep; }
};

struct OrbitHom {
    int total = 0;
    std::map<int, int> support;  // n -> dim Hom(X, F^n Y), nonzero entries
};

// Morphism of the orbit category: a finitely supported family of homotopy
// classes, component n living in Hom(X, F^n Y) on the chosen realizations.
struct OrbitMorphism {
    DbIndec source, target;
    std::map<int, ChainMap> comp;
};

class OrbitHandle {
public:
    OrbitHandle(std::shared_ptr<const DerivedModel> model, AutoEquivalence f);
    static OrbitHandle cluster_category(const Quiver& q, const Field& f);

    const DerivedModel& model() const { return *model_; }
    const AutoEquivalence& functor() const { return F_; }
    int coxeter_number() const { return h_; }
    // exact shift displacement over one full tau-period: shift(F^h X) - shift(X)
    int period_drift() const { return drift_; }
    bool finite_orbit_homs() const { return drift_ != 0; }

    DbIndec apply_F(DbIndec x, int n) const;
    OrbitObj canonicalize(DbIndec x) const;
    std::vector<OrbitObj> orbit_indecomposables() const;

    OrbitHom orbit_hom_dim(DbIndec x, DbIndec y) const;
    bool verify_2cy(DbIndec x, DbIndec y) const;

    struct DgOrbitHom {
        std::map<int, int> dims;  // degree -> homology dimension of the stabilized colimit
        int stabilized_at = 0;    // least stage whose dims equal the stabilized ones
    };
    DgOrbitHom dg_orbit_hom(DbIndec x, DbIndec y, int deg_lo = -3, int deg_hi = 3) const;

    // morphism layer (all class-level, computed on realizations)
    Complex realization(DbIndec x) const;
    ChainMap transport(const ChainMap& f, DbIndec src, DbIndec tgt, int n) const;
    Vector class_coords(DbIndec src, DbIndec tgt, const ChainMap& f) const;
    int class_space_dim(DbIndec src, DbIndec tgt) const;
    ChainMap class_rep(DbIndec src, DbIndec tgt, const Vector& coords) const;

    OrbitMorphism orbit_identity(DbIndec x) const;
    OrbitMorphism orbit_zero(DbIndec x, DbIndec y) const;
    OrbitMorphism orbit_compose(const OrbitMorphism& g, const OrbitMorphism& f) const;
    bool orbit_morphism_equal(const OrbitMorphism& a, const OrbitMorphism& b) const;

private:
    struct NuShift {  // Sigma^{-2} . nu applied to a realization, with basis data
        Complex w;
        std::map<int, NuRep> nu_terms;  // degree of the source realization -> nu data
    };
    struct Equivalence {
        ChainMap to_w;  // quasi-isomorphism realize(F^{-1}A) -> W_A
    };

    const NuShift& nu_shift(DbIndec a) const;
    const Equivalence& equivalence(DbIndec a) const;
    const HomBasisData& pair_data(DbIndec src, DbIndec tgt) const;
    ChainMap transport_down(const ChainMap& f, DbIndec src, DbIndec tgt) const;
    ChainMap transport_up(const ChainMap& f, DbIndec src, DbIndec tgt) const;

    std::shared_ptr<const DerivedModel> model_;
    AutoEquivalence F_;
    int h_ = 0;
    int drift_ = 0;

    mutable std::mutex mu_;
    mutable std::map<DbIndec, Complex> realizations_;
    mutable std::map<DbIndec, NuShift> nu_shifts_;
    mutable std::map<DbIndec, Equivalence> equivalences_;
    mutable std::map<std::pair<DbIndec, DbIndec>, HomBasisData> pair_data_;
};

}  // namespace orbcat
