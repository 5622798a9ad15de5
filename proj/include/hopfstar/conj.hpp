#pragma once

#include "hopfstar/module.hpp"

namespace hopfstar {

struct NotAntimodule : Error {
    using Error::Error;
};

// Coordinate convention, fixed once and globally: coords of c_V(v) are the
// entrywise conjugates of the coords of v. Under it the double-conjugate,
// unit and direct-sum comparison maps are identity matrices and the tensor
// comparison is a permutation.

/// (S e_i)^* as coordinates, the twist appearing in all antimodule identities
inline Vec antipode_star_twist(const HopfStarAlgebra& H, size_t i) {
    return H.apply_star(H.antipode.column(i));
}

/// conjugate module: action rho_bar(e_i) = conj(rho((S e_i)^*))
inline HModule conjugate_module(const HModule& v) {
    const auto& H = *v.algebra;
    HModule c{v.algebra, "conj(" + v.name + ")", v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) c.action.push_back(v.act(antipode_star_twist(H, i)).conj_entries());
    return c;
}

/// Antilinear map v -> M . conj(coords v), typed between modules.
/// The antimodule identity is M conj(rho_V(e_i)) = rho_W((S e_i)^*) M.
struct AntimoduleMap {
    HModule domain, codomain;
    Matrix matrix;
};

inline bool is_antimodule_map(const AntimoduleMap& t) {
    require_same_algebra(t.domain, t.codomain);
    if (t.matrix.rows() != t.codomain.dim || t.matrix.cols() != t.domain.dim)
        throw DimensionMismatch("antimodule map matrix shape");
    const auto& H = *t.domain.algebra;
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix lhs = t.matrix * t.domain.action[i].conj_entries();
        Matrix rhs = t.codomain.act(antipode_star_twist(H, i)) * t.matrix;
        if (lhs != rhs) return false;
    }
    return true;
}

/// entrywise conjugate of a module map, typed conj(V) -> conj(W)
inline ModuleMap conjugate_map(const ModuleMap& t) {
    if (!is_module_map(t)) throw NotModuleMap("conjugate_map input is not a module map");
    return checked_module_map(conjugate_module(t.domain), conjugate_module(t.codomain), t.matrix.conj_entries(),
                              "conjugate of a module map");
}

/// representability: an antimodule map V -> W, reinterpreted (same matrix)
/// as a linear map conj(V) -> W
inline ModuleMap linearize(const AntimoduleMap& t) {
    if (!is_antimodule_map(t)) throw NotAntimodule("linearize input violates the antimodule identity");
    return checked_module_map(conjugate_module(t.domain), t.codomain, t.matrix, "linearized antimodule map");
}

/// inverse direction: a module map conj(V) -> W as an antimodule map V -> W;
/// V is recovered from conj(V) by undoing the action twist
inline AntimoduleMap delinearize(const ModuleMap& t) {
    if (!is_module_map(t)) throw NotModuleMap("delinearize input is not a module map");
    const auto& H = *t.domain.algebra;
    Matrix sinv = antipode_inverse(H);
    HModule v{t.domain.algebra, t.domain.name, t.domain.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Vec w = sinv.apply(H.apply_star(unit_vec(H.dim, i)));
        v.action.push_back(t.domain.act(w).conj_entries());
    }
    AntimoduleMap a{std::move(v), t.codomain, t.matrix};
    if (!is_antimodule_map(a)) throw NotAntimodule("delinearized map violates the antimodule identity");
    return a;
}

/// the permutation realizing conj(V (x) W) -> conj(W) (x) conj(V)
inline Matrix tensor_swap_matrix(size_t nv, size_t nw) {
    std::vector<size_t> perm(nv * nw);
    for (size_t p = 0; p < nv; ++p)
        for (size_t q = 0; q < nw; ++q) perm[p * nw + q] = q * nv + p;
    return Matrix::permutation(perm);
}

/// The six comparison isomorphisms of the conjugation functor, all verified
/// to intertwine on construction.
struct ConjIsoBundle {
    ModuleMap conj_unit;    // conj(C) -> C, matrix (1)
    ModuleMap double_conj;  // conj(conj(V)) -> V, identity
    ModuleMap sum_split;    // conj(V (+) W) -> conj(V) (+) conj(W), identity
    ModuleMap tensor_swap;  // conj(V (x) W) -> conj(W) (x) conj(V), permutation
    ModuleMap dual_swap;    // conj(V^*) -> *(conj V), identity
    ModuleMap hom_swap;     // conj(Hom_l(V,W)) -> Hom_r(conj V, conj W), identity
};

inline ConjIsoBundle natural_isos(const HModule& v, const HModule& w) {
    require_same_algebra(v, w);
    HModule triv = trivial_module(v.algebra);
    HModule cv = conjugate_module(v), cw = conjugate_module(w);
    return ConjIsoBundle{
        checked_module_map(conjugate_module(triv), triv, Matrix::identity(1), "conj(C) -> C"),
        checked_module_map(conjugate_module(cv), v, Matrix::identity(v.dim), "conj(conj V) -> V"),
        checked_module_map(conjugate_module(direct_sum_module(v, w)), direct_sum_module(cv, cw),
                           Matrix::identity(v.dim + w.dim), "conj(V(+)W) -> conj(V)(+)conj(W)"),
        checked_module_map(conjugate_module(tensor_module(v, w)), tensor_module(cw, cv),
                           tensor_swap_matrix(v.dim, w.dim), "conj(V(x)W) -> conj(W)(x)conj(V)"),
        checked_module_map(conjugate_module(left_dual(v)), right_dual(cv), Matrix::identity(v.dim),
                           "conj(V^*) -> *(conj V)"),
        checked_module_map(conjugate_module(hom_left(v, w)), hom_right(cv, cw), Matrix::identity(v.dim * w.dim),
                           "conj(Hom_l(V,W)) -> Hom_r(conj V, conj W)"),
    };
}

/// coherence of the tensor swap (the two routes through a triple product
/// agree) plus naturality squares for supplied maps f : V -> V', g : W -> W'
inline Report check_conj_coherence(const HModule& u, const HModule& v, const HModule& w, const ModuleMap* f = nullptr,
                                   const ModuleMap* g = nullptr) {
    Report rep("conjugation coherence: " + u.name + ", " + v.name + ", " + w.name);
    size_t nu = u.dim, nv = v.dim, nw = w.dim;
    {
        Matrix route1 = kron(tensor_swap_matrix(nv, nw), Matrix::identity(nu)) * tensor_swap_matrix(nu, nv * nw);
        Matrix route2 = kron(Matrix::identity(nw), tensor_swap_matrix(nu, nv)) * tensor_swap_matrix(nu * nv, nw);
        rep.require("tensor-swap-associativity", route1 == route2, diff_witness("two swap routes", route1, route2));
    }
    if (f && g) {
        ModuleMap cf = conjugate_map(*f), cg = conjugate_map(*g);
        {
            Matrix lhs = kron(cg.matrix, cf.matrix) * tensor_swap_matrix(f->domain.dim, g->domain.dim);
            Matrix rhs =
                tensor_swap_matrix(f->codomain.dim, g->codomain.dim) * kron(f->matrix, g->matrix).conj_entries();
            rep.require("tensor-swap-naturality", lhs == rhs, diff_witness("swap naturality", lhs, rhs));
        }
        {
            // sigma_cod conj(conj(f)) = f sigma_dom, both sigmas the identity
            Matrix ccf = conjugate_map(cf).matrix;
            rep.require("double-conj-naturality", ccf == f->matrix, diff_witness("sigma naturality", ccf, f->matrix));
        }
        {
            // the transposed map intertwines the duals, its conjugate the
            // conjugate duals; the comparison square is then matrix equality
            ModuleMap ftr =
                checked_module_map(left_dual(f->codomain), left_dual(f->domain), f->matrix.transpose(), "f^tr");
            ModuleMap cftr = conjugate_map(ftr);
            ModuleMap cf_tr = checked_module_map(right_dual(conjugate_module(f->codomain)),
                                                 right_dual(conjugate_module(f->domain)), cf.matrix.transpose(),
                                                 "(conj f)^tr");
            rep.require("dual-swap-naturality", cftr.matrix == cf_tr.matrix,
                        diff_witness("beta naturality", cftr.matrix, cf_tr.matrix));
        }
    }
    return rep;
}

/// alternative conjugation with the antipode and star swapped:
/// action conj(rho(S(e_i^*)))
inline HModule swapped_conjugate_module(const HModule& v) {
    const auto& H = *v.algebra;
    HModule c{v.algebra, "tconj(" + v.name + ")", v.dim, {}};
    for (size_t i = 0; i < H.dim; ++i) {
        Vec w = H.apply_antipode(H.apply_star(unit_vec(H.dim, i)));
        c.action.push_back(v.act(w).conj_entries());
    }
    return c;
}

/// relations between the two conjugations: (tconj V)^* = *(conj V) as literal
/// action matrices, and the two mixed double conjugates differ by S^4
inline Report check_tilde_relations(const HModule& v) {
    Report rep("swapped-conjugation relations: " + v.name);
    const auto& H = *v.algebra;
    {
        HModule lhs = left_dual(swapped_conjugate_module(v));
        HModule rhs = right_dual(conjugate_module(v));
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < H.dim && ok; ++i)
            if (lhs.action[i] != rhs.action[i]) {
                ok = false;
                w = diff_witness("actions at e" + std::to_string(i), lhs.action[i], rhs.action[i]);
            }
        rep.require("dual-of-swapped-equals-right-dual-of-conj", ok, w);
    }
    {
        HModule bar_tilde = conjugate_module(swapped_conjugate_module(v));
        HModule tilde_bar = swapped_conjugate_module(conjugate_module(v));
        Matrix s2 = H.antipode * H.antipode;
        Matrix s4 = s2 * s2;
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < H.dim && ok; ++i) {
            Matrix lhs = bar_tilde.action[i];
            Matrix rhs = tilde_bar.act(s4.column(i));
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("S^4 twist at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("mixed-doubles-differ-by-s4", ok, w);
    }
    return rep;
}

}  // namespace hopfstar
