#include "orbcat/derived.hpp"

#include <map>
#include <stdexcept>

namespace orbcat {

DerivedModel::DerivedModel(const Quiver& q, const Field& f) : q_(q), f_(f) {
    DynkinClass cls = validate_quiver(q);
    if (cls.type != DynkinType::A)
        throw std::invalid_argument("derived model: type A only, got " + cls.name());

    intervals_ = interval_list(q);
    for (Interval iv : intervals_) modules_.push_back(interval_rep(q, f, iv));
    int m = module_count();

    proj_of_vertex_.assign(q.vertex_count, -1);
    inj_of_vertex_.assign(q.vertex_count, -1);
    proj_vertex_of_.assign(m, 0);
    inj_vertex_of_.assign(m, 0);
    for (int v = 1; v <= q.vertex_count; ++v) {
        int pi = interval_index(projective_interval(q, v));
        int ii = interval_index(injective_interval(q, v));
        proj_of_vertex_[v - 1] = pi;
        inj_of_vertex_[v - 1] = ii;
        proj_vertex_of_[pi] = v;
        inj_vertex_of_[ii] = v;
    }

    hom_.assign(m, std::vector<int>(m, 0));
    ext_.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            hom_[i][j] = hom_dim(modules_[i], modules_[j]);
            ext_[i][j] = ext1_dim(modules_[i], modules_[j]);
        }

    for (int i = 0; i < m; ++i) presentations_.push_back(minimal_presentation(modules_[i]));

    tau_.assign(m, {0, 0});
    for (int i = 0; i < m; ++i) {
        if (is_projective(i)) {
            tau_[i] = {inj_of_vertex_[proj_vertex_of_[i] - 1], -1};
        } else {
            auto t = ar_translate(modules_[i]);
            if (!t) throw std::logic_error("non-projective module with empty translate");
            tau_[i] = {index_of_dims(t->dims), 0};
        }
    }
    tau_inv_.assign(m, {0, 0});
    std::vector<bool> hit(m, false);
    for (int i = 0; i < m; ++i) {
        auto [j, d] = tau_[i];
        if (hit[j]) throw std::logic_error("translate is not a bijection on labels");
        hit[j] = true;
        tau_inv_[j] = {i, -d};
    }

    coxeter_ = coxeter_matrix(q);
}

int DerivedModel::interval_index(Interval iv) const {
    for (int i = 0; i < module_count(); ++i)
        if (intervals_[i] == iv) return i;
    throw std::invalid_argument("unknown interval");
}

int DerivedModel::index_of_dims(const DimVector& dims) const {
    for (int i = 0; i < module_count(); ++i)
        if (modules_[i].dims == dims) return i;
    throw std::invalid_argument("dimension vector is not an interval indicator");
}

int DerivedModel::db_hom_dim(DbIndec x, DbIndec y) const {
    int d = y.shift - x.shift;
    if (d == 0) return hom_[x.module][y.module];
    if (d == 1) return ext_[x.module][y.module];
    return 0;
}

int DerivedModel::db_hom_dim(const DbObject& x, const DbObject& y) const {
    int total = 0;
    for (const auto& a : x.summands)
        for (const auto& b : y.summands) total += a.mult * b.mult * db_hom_dim(a.indec, b.indec);
    return total;
}

DbIndec DerivedModel::translate(DbIndec x) const {
    auto [j, d] = tau_[x.module];
    return {j, x.shift + d};
}

DbIndec DerivedModel::translate_inv(DbIndec x) const {
    auto [j, d] = tau_inv_[x.module];
    return {j, x.shift + d};
}

bool DerivedModel::verify_serre_duality(DbIndec x, DbIndec y) const {
    return db_hom_dim(x, y) == db_hom_dim(y, serre(x));
}

Complex DerivedModel::realize(DbIndec x) const {
    const Presentation& pres = presentations_.at(x.module);
    Complex base;
    if (pres.p1.is_zero()) {
        base = stalk_complex(modules_[x.module], 0);
    } else {
        std::map<int, Rep> terms;
        terms.emplace(0, pres.p0);
        terms.emplace(1, pres.p1);
        std::map<int, RepMap> diffs;
        diffs.emplace(1, pres.incl);
        base = make_complex(q_, f_, std::move(terms), std::move(diffs));
    }
    return shift_complex(base, x.shift);
}

Complex DerivedModel::realize(const DbObject& x) const {
    Complex acc = zero_complex(q_, f_);
    for (const auto& s : x.summands) {
        if (s.mult < 1) throw std::invalid_argument("multiplicities must be at least 1");
        Complex r = realize(s.indec);
        for (int i = 0; i < s.mult; ++i) acc = complex_direct_sum(acc, r);
    }
    return acc;
}

std::string DerivedModel::label_name(DbIndec x) const {
    auto order = path_order(q_);
    Interval iv = intervals_.at(x.module);
    std::string s = "M[" + std::to_string(order[iv.a]) + "," + std::to_string(order[iv.b]) + "]";
    if (x.shift != 0) s += "<" + std::to_string(x.shift) + ">";
    return s;
}

}  // namespace orbcat
