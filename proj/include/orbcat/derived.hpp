#pragma once

#include <memory>
#include <string>

#include "orbcat/complex.hpp"

namespace orbcat {

// Indecomposable object of the bounded derived category: a shifted module
// Sigma^shift M, with M indexed into the interval-module list.
struct DbIndec {
    int module = 0;
    int shift = 0;
    bool operator==(const DbIndec& o) const = default;
    bool operator<(const DbIndec& o) const {
        return shift != o.shift ? shift < o.shift : module < o.module;
    }
};

struct DbSummand {
    DbIndec indec;
    int mult = 1;
};

// Formal finite direct sum; empty list is the zero object.
struct DbObject {
    std::vector<DbSummand> summands;
};

// Combinatorial model of the bounded derived category of a type-A quiver.
// Hom and Ext dimensions between all interval modules are precomputed; the
// translate acts on labels, with tau(P_i) = Sigma^{-1} I_i on projectives.
class DerivedModel {
public:
    DerivedModel(const Quiver& q, const Field& f);

    const Quiver& quiver() const { return q_; }
    const Field& field() const { return f_; }
    int module_count() const { return (int)intervals_.size(); }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const Rep& module(int idx) const { return modules_.at(idx); }
    const DimVector& dim_vector(int idx) const { return modules_.at(idx).dims; }

    int interval_index(Interval iv) const;
    int index_of_dims(const DimVector& dims) const;
    int projective_index(int vertex) const { return proj_of_vertex_.at(vertex - 1); }
    int injective_index(int vertex) const { return inj_of_vertex_.at(vertex - 1); }
    bool is_projective(int idx) const { return proj_vertex_of_.at(idx) != 0; }
    bool is_injective(int idx) const { return inj_vertex_of_.at(idx) != 0; }

    int hom_dim_modules(int i, int j) const { return hom_.at(i).at(j); }
    int ext_dim_modules(int i, int j) const { return ext_.at(i).at(j); }

    int db_hom_dim(DbIndec x, DbIndec y) const;
    int db_hom_dim(const DbObject& x, const DbObject& y) const;

    DbIndec translate(DbIndec x) const;      // tau
    DbIndec translate_inv(DbIndec x) const;  // tau^{-1}
    static DbIndec suspend(DbIndec x, int n) { return {x.module, x.shift + n}; }
    DbIndec serre(DbIndec x) const { return suspend(translate(x), 1); }
    bool verify_serre_duality(DbIndec x, DbIndec y) const;

    // Bridge to the complex model: a two-term projective resolution placed
    // so that its homology is the module in degree `shift` (a stalk when the
    // module is projective). Homotopy classes of maps between realizations
    // compute the derived homs.
    Complex realize(DbIndec x) const;
    Complex realize(const DbObject& x) const;

    const Matrix& coxeter() const { return coxeter_; }
    std::string label_name(DbIndec x) const;

private:
    Quiver q_;
    Field f_;
    std::vector<Interval> intervals_;
    std::vector<Rep> modules_;
    std::vector<std::vector<int>> hom_, ext_;
    std::vector<int> proj_of_vertex_, inj_of_vertex_;
    std::vector<int> proj_vertex_of_, inj_vertex_of_;  // 0 when not projective/injective
    std::vector<std::pair<int, int>> tau_, tau_inv_;   // module -> (module, shift delta)
    std::vector<Presentation> presentations_;
    Matrix coxeter_;
};

}  // namespace orbcat
