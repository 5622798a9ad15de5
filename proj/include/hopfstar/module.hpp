#pragma once

#include "hopfstar/hopf.hpp"

namespace hopfstar {

struct AlgebraMismatch : Error {
    using Error::Error;
};
struct NotModuleMap : Error {
    using Error::Error;
};
struct NotInner : Error {
    using Error::Error;
};

/// Left H-module as a family of action matrices, one per algebra basis element.
struct HModule {
    HopfPtr algebra;
    std::string name;
    size_t dim = 0;
    std::vector<Matrix> action;

    Matrix act(const Vec& a) const {
        if (a.size() != action.size()) throw DimensionMismatch("act expects one coordinate per algebra basis element");
        Matrix r(dim, dim);
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) r = r + a[i] * action[i];
        return r;
    }

    void check_shape() const {
        if (!algebra) throw Error("module '" + name + "' has no algebra");
        if (action.size() != algebra->dim)
            throw DimensionMismatch("module '" + name + "': need one action matrix per algebra basis element");
        for (const auto& m : action)
            if (m.rows() != dim || m.cols() != dim)
                throw DimensionMismatch("module '" + name + "': action matrix of wrong shape");
    }
};

inline bool same_algebra(const HModule& v, const HModule& w) { return v.algebra.get() == w.algebra.get(); }

inline void require_same_algebra(const HModule& v, const HModule& w) {
    if (!same_algebra(v, w))
        throw AlgebraMismatch("modules '" + v.name + "' and '" + w.name + "' live over different algebras");
}

/// Typed linear map between modules; not assumed to intertwine until checked.
struct ModuleMap {
    HModule domain, codomain;
    Matrix matrix;
};

inline bool is_module_map(const ModuleMap& t) {
    require_same_algebra(t.domain, t.codomain);
    if (t.matrix.rows() != t.codomain.dim || t.matrix.cols() != t.domain.dim)
        throw DimensionMismatch("map matrix shape does not match domain/codomain");
    const auto& H = *t.domain.algebra;
    for (size_t i = 0; i < H.dim; ++i)
        if (t.matrix * t.domain.action[i] != t.codomain.action[i] * t.matrix) return false;
    return true;
}

inline ModuleMap checked_module_map(HModule dom, HModule cod, Matrix m, const std::string& what) {
    ModuleMap t{std::move(dom), std::move(cod), std::move(m)};
    if (!is_module_map(t)) throw NotModuleMap(what + " failed to intertwine");
    return t;
}

inline ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    // f after g
    return {g.domain, f.codomain, f.matrix * g.matrix};
}

inline Report verify_module(const HModule& v) {
    v.check_shape();
    Report rep("module axioms: " + v.name);
    const auto& H = *v.algebra;
    rep.require("unit-acts-as-identity", v.act(H.unit).is_identity(),
                diff_witness("rho(1)", v.act(H.unit), Matrix::identity(v.dim)));
    bool ok = true;
    std::string w;
    for (size_t i = 0; i < H.dim && ok; ++i)
        for (size_t j = 0; j < H.dim && ok; ++j) {
            Matrix lhs = v.act(H.mult[i * H.dim + j]);
            Matrix rhs = v.action[i] * v.action[j];
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("rho(e" + std::to_string(i) + " e" + std::to_string(j) + ") vs product", lhs, rhs);
            }
        }
    rep.require("multiplicative", ok, w);
    return rep;
}

inline HModule trivial_module(HopfPtr H) {
    HModule v{H, "trivial", 1, {}};
    for (size_t i = 0; i < H->dim; ++i) v.action.push_back(Matrix{{H->counit[i]}});
    return v;
}

/// tensor product action through the coproduct; basis b_p (x) b'_q at p*dim(W)+q
inline HModule tensor_module(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    const auto& H = *v.algebra;
    HModule t{v.algebra, v.name + "(x)" + w.name, v.dim * w.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix m(t.dim, t.dim);
        for (const auto& term : H.coprod[i]) m = m + term.coeff * kron(v.action[term.left], w.action[term.right]);
        t.action.push_back(std::move(m));
    }
    return t;
}

inline HModule direct_sum_module(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    const auto& H = *v.algebra;
    HModule s{v.algebra, v.name + "(+)" + w.name, v.dim + w.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix m(s.dim, s.dim);
        for (size_t r = 0; r < v.dim; ++r)
            for (size_t c = 0; c < v.dim; ++c) m(r, c) = v.action[i](r, c);
        for (size_t r = 0; r < w.dim; ++r)
            for (size_t c = 0; c < w.dim; ++c) m(v.dim + r, v.dim + c) = w.action[i](r, c);
        s.action.push_back(std::move(m));
    }
    return s;
}

/// left dual: action through the antipode, transposed
inline HModule left_dual(const HModule& v) {
    const auto& H = *v.algebra;
    HModule d{v.algebra, v.name + "^*", v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) d.action.push_back(v.act(H.antipode.column(i)).transpose());
    return d;
}

/// right dual: action through the inverse antipode, transposed
inline HModule right_dual(const HModule& v) {
    const auto& H = *v.algebra;
    Matrix sinv = antipode_inverse(H);
    HModule d{v.algebra, "*^" + v.name, v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) d.action.push_back(v.act(sinv.column(i)).transpose());
    return d;
}

/// evaluation pairings V^* (x) V -> C and V (x) *V -> C, both checked
inline std::pair<ModuleMap, ModuleMap> evaluation_maps(const HModule& v) {
    HModule triv = trivial_module(v.algebra);
    HModule vd = left_dual(v), dv = right_dual(v);
    size_t n = v.dim;
    Matrix ev(1, n * n), ev2(1, n * n);
    for (size_t p = 0; p < n; ++p) {
        ev(0, p * n + p) = Scalar(1);   // phi_p (x) b_p -> 1
        ev2(0, p * n + p) = Scalar(1);  // b_p (x) phi_p -> 1
    }
    ModuleMap left = checked_module_map(tensor_module(vd, v), triv, ev, "evaluation on V^*(x)V");
    ModuleMap right = checked_module_map(tensor_module(v, dv), triv, ev2, "evaluation on V(x)*V");
    return {left, right};
}

/// evaluation of operators on vectors: Hom_l(V,W) (x) V -> W and
/// V (x) Hom_r(V,W) -> W, both checked to intertwine
inline std::pair<ModuleMap, ModuleMap> hom_evaluation_maps(const HModule& v, const HModule& w);

/// v -> delta_v into *(V^*) and (*V)^*; identity matrices under dual-basis
/// identification, checked to intertwine
inline std::pair<ModuleMap, ModuleMap> double_dual_embedding(const HModule& v) {
    ModuleMap a = checked_module_map(v, right_dual(left_dual(v)), Matrix::identity(v.dim), "V -> *(V^*)");
    ModuleMap b = checked_module_map(v, left_dual(right_dual(v)), Matrix::identity(v.dim), "V -> (*V)^*");
    return {a, b};
}

/// Hom(V,W) with a |> T = a_(1) T S(a_(2)); basis = elementary matrices E_pq,
/// row-major index p*dim(V)+q
inline HModule hom_left(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    const auto& H = *v.algebra;
    HModule h{v.algebra, "Hom_l(" + v.name + "," + w.name + ")", w.dim * v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix m(h.dim, h.dim);
        for (const auto& term : H.coprod[i]) {
            Matrix right = v.act(H.antipode.column(term.right));
            m = m + term.coeff * kron(w.action[term.left], right.transpose());
        }
        h.action.push_back(std::move(m));
    }
    return h;
}

/// Hom(V,W) with a |>> T = a_(2) T S^{-1}(a_(1))
inline HModule hom_right(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    const auto& H = *v.algebra;
    Matrix sinv = antipode_inverse(H);
    HModule h{v.algebra, "Hom_r(" + v.name + "," + w.name + ")", w.dim * v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix m(h.dim, h.dim);
        for (const auto& term : H.coprod[i]) {
            Matrix right = v.act(sinv.column(term.left));
            m = m + term.coeff * kron(w.action[term.right], right.transpose());
        }
        h.action.push_back(std::move(m));
    }
    return h;
}

inline std::pair<ModuleMap, ModuleMap> hom_evaluation_maps(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    HModule hl = hom_left(v, w), hr = hom_right(v, w);
    size_t nv = v.dim, nw = w.dim;
    Matrix left(nw, nw * nv * nv);
    for (size_t p = 0; p < nw; ++p)
        for (size_t q = 0; q < nv; ++q) left(p, (p * nv + q) * nv + q) = Scalar(1);
    Matrix right(nw, nv * nw * nv);
    for (size_t p = 0; p < nw; ++p)
        for (size_t q = 0; q < nv; ++q) right(p, q * (nw * nv) + (p * nv + q)) = Scalar(1);
    ModuleMap l = checked_module_map(tensor_module(hl, v), w, left, "evaluation on Hom_l(V,W)(x)V");
    ModuleMap r = checked_module_map(tensor_module(v, hr), w, right, "evaluation on V(x)Hom_r(V,W)");
    return {l, r};
}

/// exact kernel basis of the stacked system (rho(e_i) - eps_i id) over all i
inline std::vector<Vec> invariants(const HModule& v) {
    const auto& H = *v.algebra;
    Matrix stacked(H.dim * v.dim, v.dim);
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix block = v.action[i] - H.counit[i] * Matrix::identity(v.dim);
        for (size_t r = 0; r < v.dim; ++r)
            for (size_t c = 0; c < v.dim; ++c) stacked(i * v.dim + r, c) = block(r, c);
    }
    return kernel_basis(stacked);
}

/// exact solution basis of T rho_V(e_i) = rho_W(e_i) T
inline std::vector<Matrix> intertwiners(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    const auto& H = *v.algebra;
    size_t nv = v.dim, nw = w.dim;
    Matrix sys(H.dim * nw * nv, nw * nv);
    for (size_t i = 0; i < H.dim; ++i) {
        // vec(T rho_V) = (I (x) rho_V^T) vec T, vec(rho_W T) = (rho_W (x) I) vec T
        Matrix block = kron(Matrix::identity(nw), v.action[i].transpose()) - kron(w.action[i], Matrix::identity(nv));
        for (size_t r = 0; r < nw * nv; ++r)
            for (size_t c = 0; c < nw * nv; ++c) sys(i * nw * nv + r, c) = block(r, c);
    }
    std::vector<Matrix> basis;
    for (const auto& k : kernel_basis(sys)) basis.push_back(unvec_rowmajor(k, nw, nv));
    return basis;
}

/// Hom_l(V,W)^H = Hom_H(V,W) = Hom_r(V,W)^H, compared as subspaces
inline Report check_hom_invariants(const HModule& v, const HModule& w) {
    Report rep("hom invariants: " + v.name + " -> " + w.name);
    std::vector<Vec> left = invariants(hom_left(v, w));
    std::vector<Vec> right = invariants(hom_right(v, w));
    std::vector<Vec> inter;
    for (const auto& t : intertwiners(v, w)) inter.push_back(vec_rowmajor(t));
    rep.notes.push_back("dims: Hom_l^H = " + std::to_string(left.size()) + ", Hom_H = " + std::to_string(inter.size()) +
                        ", Hom_r^H = " + std::to_string(right.size()));
    rep.require("left-invariants-equal-intertwiners", subspace_equal(left, inter),
                "Hom_l(V,W)^H and Hom_H(V,W) differ as subspaces");
    rep.require("right-invariants-equal-intertwiners", subspace_equal(right, inter),
                "Hom_r(V,W)^H and Hom_H(V,W) differ as subspaces");
    return rep;
}

/// W (x) V^* -> Hom_l(V,W) and *V (x) W -> Hom_r(V,W); module isomorphisms
inline std::pair<ModuleMap, ModuleMap> hom_tensor_decomposition(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    size_t nv = v.dim, nw = w.dim;
    // b'_p (x) phi_q -> E_pq: identity under our index conventions
    ModuleMap left = checked_module_map(tensor_module(w, left_dual(v)), hom_left(v, w),
                                        Matrix::identity(nw * nv), "W(x)V^* -> Hom_l");
    // phi_q (x) b'_p -> E_pq: permutation q*nw+p -> p*nv+q
    std::vector<size_t> perm(nv * nw);
    for (size_t q = 0; q < nv; ++q)
        for (size_t p = 0; p < nw; ++p) perm[q * nw + p] = p * nv + q;
    ModuleMap right = checked_module_map(tensor_module(right_dual(v), w), hom_right(v, w),
                                         Matrix::permutation(perm), "*V(x)W -> Hom_r");
    return {left, right};
}

/// Given u in H with S^2 = conj by u: *V -> V^* via f -> u |> f, and
/// V -> V^** via v -> delta_{u |> v}; also the a u |> f = u a |>> f identity.
inline std::pair<ModuleMap, ModuleMap> ssquared_inner_isos(const HopfStarAlgebra& H, const Vec& u, const HModule& v) {
    // u must be invertible: solve via left-multiplication operator
    Matrix lu(H.dim, H.dim);
    for (size_t j = 0; j < H.dim; ++j) {
        Vec col = H.mul(u, unit_vec(H.dim, j));
        for (size_t k = 0; k < H.dim; ++k) lu(k, j) = col[k];
    }
    Matrix lu_inv;
    try {
        lu_inv = lu.inverse();
    } catch (const NotInvertible&) {
        throw NotInner("u is not invertible in H");
    }
    Vec uinv = lu_inv.apply(H.unit);
    for (size_t i = 0; i < H.dim; ++i) {
        Vec lhs = H.apply_antipode(H.apply_antipode(unit_vec(H.dim, i)));
        Vec rhs = H.mul(u, H.mul(unit_vec(H.dim, i), uinv));
        if (lhs != rhs) throw NotInner("S^2 is not conjugation by u at basis index " + std::to_string(i));
    }
    // part (a): a u |> f = u a |>> f on Hom(V, C), i.e. on V^* vs *V actions
    HModule vd = left_dual(v), dv = right_dual(v);
    Matrix sinv = antipode_inverse(H);
    for (size_t i = 0; i < H.dim; ++i) {
        Vec au = H.mul(unit_vec(H.dim, i), u);
        Vec ua = H.mul(u, unit_vec(H.dim, i));
        Matrix lhs = v.act(H.apply_antipode(au)).transpose();
        Matrix rhs = v.act(sinv.apply(ua)).transpose();
        if (lhs != rhs) throw NotInner("au |> f = ua |>> f fails at basis index " + std::to_string(i));
    }
    Matrix on_dual = v.act(H.apply_antipode(u)).transpose();  // action of u on V^*
    ModuleMap dual_iso = checked_module_map(dv, vd, on_dual, "*V -> V^* via u");
    HModule vdd = left_dual(left_dual(v));
    ModuleMap double_dual_iso = checked_module_map(v, vdd, v.act(u), "V -> V^** via u");
    try {
        dual_iso.matrix.inverse();
        double_dual_iso.matrix.inverse();
    } catch (const NotInvertible&) {
        throw NotInner("u-induced comparison map is not invertible");
    }
    return {dual_iso, double_dual_iso};
}

}  // namespace hopfstar
