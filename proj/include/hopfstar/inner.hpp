#pragma once

#include "hopfstar/staralg.hpp"

namespace hopfstar {

struct NotInnerProduct : Error {
    using Error::Error;
};
struct Inconsistent : Error {
    using Error::Error;
};

/// Sesquilinear inner product as a Gram matrix, conjugate-linear first slot:
/// <v, w> = conj(v)^T G w.
struct InnerProduct {
    HModule module;
    Matrix gram;
};

inline Scalar pair_with(const Matrix& g, const Vec& v, const Vec& w) {
    Vec gw = g.apply(w);
    Scalar r(0);
    for (size_t i = 0; i < v.size(); ++i) r += v[i].conj() * gw[i];
    return r;
}

/// conjugate symmetry, Sylvester positivity via exact leading minors,
/// H-invariance conj(rho(e_i))^T G = G rho(e_i^*)
inline Report verify_inner_product(const HModule& v, const Matrix& g, unsigned sign_cap) {
    Report rep("inner product on " + v.name);
    if (g.rows() != v.dim || g.cols() != v.dim) throw DimensionMismatch("gram matrix shape");
    rep.require("conjugate-symmetric", g.conj_entries().transpose() == g,
                diff_witness("conj(G)^T vs G", g.conj_entries().transpose(), g));
    {
        bool ok = true;
        std::string w;
        for (size_t k = 1; k <= v.dim && ok; ++k) {
            Scalar minor = g.leading_block(k).determinant();
            Sign s;
            try {
                s = scalar_sign(minor, sign_cap);
            } catch (const NotReal&) {
                ok = false;
                w = "leading minor " + std::to_string(k) + " is not conjugation-fixed: " + minor.to_string();
                break;
            }
            if (s != Sign::positive) {
                ok = false;
                w = "leading minor " + std::to_string(k) + " = " + minor.to_string() + " is not positive";
            }
        }
        rep.require("positive-definite", ok, w);
    }
    {
        const auto& H = *v.algebra;
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < H.dim && ok; ++i) {
            Matrix lhs = v.action[i].conj_entries().transpose() * g;
            Matrix rhs = g * v.act(H.star.column(i));
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("invariance at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("h-invariant", ok, w);
    }
    return rep;
}

inline Report verify_inner_product(const HModule& v, const Matrix& g) {
    return verify_inner_product(v, g, sign_refinement_cap());
}

inline Report verify_inner_product(const InnerProduct& ip) { return verify_inner_product(ip.module, ip.gram); }

namespace detail {

// rational realification: a scalar of order n becomes a phi(n) x phi(n)
// rational block acting on coefficient columns
inline Matrix realify_scalar(const Scalar& s, unsigned n) {
    unsigned deg = cyclotomic_degree(n);
    Matrix block(deg, deg);
    Scalar sl = s.lift(n);
    for (unsigned t = 0; t < deg; ++t) {
        Scalar prod = sl * Scalar::root_of_unity_power(n, t);
        for (unsigned r = 0; r < deg; ++r) block(r, t) = Scalar(prod.coeffs()[r]);
    }
    return block;
}

inline Matrix realify_conj(unsigned n) {
    unsigned deg = cyclotomic_degree(n);
    Matrix block(deg, deg);
    for (unsigned t = 0; t < deg; ++t) {
        Scalar c = Scalar::root_of_unity_power(n, t).conj();
        for (unsigned r = 0; r < deg; ++r) block(r, t) = Scalar(c.coeffs()[r]);
    }
    return block;
}

inline unsigned common_order(const HModule& v) {
    unsigned n = v.algebra->scalar_order;
    auto fold = [&n](const Matrix& m) {
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) n = std::lcm(n, m(r, c).order());
    };
    for (const auto& m : v.action) fold(m);
    fold(v.algebra->star);
    return n;
}

}  // namespace detail

/// exact basis (over Q) of the Hermitian solutions of the invariance system,
/// with entries in Q(zeta_order); positivity is left to the caller
inline std::vector<Matrix> solve_invariant_grams(const HModule& v, unsigned order) {
    const auto& H = *v.algebra;
    const size_t n = v.dim;
    const unsigned ord = std::lcm(order, detail::common_order(v));
    const unsigned deg = cyclotomic_degree(ord);
    const size_t unknowns = n * n * deg;  // rational coordinates of G entries

    std::vector<Matrix> rows;  // each row block: 1 x unknowns rational rows
    Matrix sys(0, 0);
    std::vector<Vec> sys_rows;

    auto entry_block = [&](const Scalar& coeff, bool conjugated) {
        Matrix b = detail::realify_scalar(coeff, ord);
        if (conjugated) b = b * detail::realify_conj(ord);
        return b;
    };

    // invariance: sum_pq conj(rho_i)^T_{rp} G_{pc} - G_{rq} rho(star e_i)_{qc} = 0
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix at = v.action[i].conj_entries().transpose();
        Matrix rs = v.act(H.star.column(i));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                // equation block row: deg rational equations
                std::vector<Vec> eq(deg, Vec(unknowns, Scalar(0)));
                for (size_t p = 0; p < n; ++p) {
                    if (!at(r, p).is_zero()) {
                        Matrix b = entry_block(at(r, p), false);
                        for (unsigned er = 0; er < deg; ++er)
                            for (unsigned t = 0; t < deg; ++t) eq[er][(p * n + c) * deg + t] += b(er, t);
                    }
                    if (!rs(p, c).is_zero()) {
                        Matrix b = entry_block(rs(p, c), false);
                        for (unsigned er = 0; er < deg; ++er)
                            for (unsigned t = 0; t < deg; ++t) eq[er][(r * n + p) * deg + t] -= b(er, t);
                    }
                }
                for (auto& e : eq) sys_rows.push_back(std::move(e));
            }
    }
    // Hermitian: G_{rc} - conj(G_{cr}) = 0
    Matrix cj = detail::realify_conj(ord);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            std::vector<Vec> eq(deg, Vec(unknowns, Scalar(0)));
            for (unsigned er = 0; er < deg; ++er) {
                eq[er][(r * n + c) * deg + er] += Scalar(1);
                for (unsigned t = 0; t < deg; ++t) eq[er][(c * n + r) * deg + t] -= cj(er, t);
            }
            for (auto& e : eq) sys_rows.push_back(std::move(e));
        }

    std::vector<Matrix> basis;
    for (const auto& k : kernel_basis(Matrix::from_rows(sys_rows))) {
        Matrix g(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                std::vector<Rational> coeffs(deg);
                for (unsigned t = 0; t < deg; ++t) coeffs[t] = k[(r * n + c) * deg + t].rational_value();
                g(r, c) = Scalar::from_coeffs(ord, coeffs);
            }
        basis.push_back(std::move(g));
    }
    return basis;
}

inline std::vector<Matrix> solve_invariant_grams(const HModule& v) { return solve_invariant_grams(v, 1); }

/// mu : conj(V) -> V^*, v-bar -> <v-bar, ->; matrix G^T, verified isomorphism
inline ModuleMap gram_dual_iso(const HModule& v, const Matrix& g) {
    if (!verify_inner_product(v, g).all_pass()) throw NotInnerProduct("gram matrix fails inner product axioms");
    ModuleMap mu = checked_module_map(conjugate_module(v), left_dual(v), g.transpose(), "mu");
    mu.matrix.inverse();  // finite dimensional + positive definite: must hold
    return mu;
}

/// naturality square of mu for an isometry T: T^tr mu_W conj(T) = mu_V
inline Report check_gram_dual_naturality(const ModuleMap& t, const Matrix& g_v, const Matrix& g_w) {
    Report rep("mu naturality for " + t.domain.name + " -> " + t.codomain.name);
    Matrix lhs = t.matrix.transpose() * g_w.transpose() * t.matrix.conj_entries();
    rep.require("isometry", t.matrix.conj_entries().transpose() * g_w * t.matrix == g_v,
                "T is not an isometry for the given grams");
    rep.require("square-commutes", lhs == g_v.transpose(), diff_witness("T^tr mu_W conj(T) vs mu_V", lhs, g_v.transpose()));
    return rep;
}

/// adjoint via the defining relation <T^dag w, v> = <w, T v>; the coordinate
/// realization is G_V^{-1} conj(T)^T G_W, re-verified exactly
inline Matrix adjoint(const Matrix& t, const Matrix& g_v, const Matrix& g_w) {
    Matrix adj = g_v.inverse() * t.conj_entries().transpose() * g_w;
    // defining relation: conj(T^dag)^T G_V = G_W T
    if (adj.conj_entries().transpose() * g_v != g_w * t) throw Error("adjoint defining relation failed");
    return adj;
}

/// module-map equivalence, the dagger antimodule identity on Hom spaces, and
/// the sigma/mu/transpose composite characterization
inline Report check_adjoint_module_props(const HModule& v, const HModule& w, const Matrix& t, const Matrix& g_v,
                                         const Matrix& g_w) {
    Report rep("adjoint module properties");
    const auto& H = *v.algebra;
    Matrix adj = adjoint(t, g_v, g_w);
    {
        ModuleMap tf{v, w, t}, af{w, v, adj};
        rep.require("module-map-iff", is_module_map(tf) == is_module_map(af),
                    "T and T^dagger disagree about being module maps");
    }
    {
        // (a |> T)^dagger = S(a)^* |> T^dagger, via the left Hom actions
        HModule hvw = hom_left(v, w), hwv = hom_left(w, v);
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < H.dim && ok; ++i) {
            Vec moved = hvw.action[i].apply(vec_rowmajor(t));
            Matrix lhs = adjoint(unvec_rowmajor(moved, w.dim, v.dim), g_v, g_w);
            Vec twisted = hwv.act(antipode_star_twist(H, i)).apply(vec_rowmajor(adj));
            Matrix rhs = unvec_rowmajor(twisted, v.dim, w.dim);
            if (lhs != rhs) {
                ok = false;
                wit = diff_witness("dagger antimodule identity at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("dagger-antimodule-identity", ok, wit);
    }
    {
        // T^dagger = sigma_V conj(mu_V^{-1}) conj(T^tr) conj(mu_W) sigma_W^{-1}
        Matrix composite =
            (g_v.transpose().inverse() * t.transpose() * g_w.transpose()).conj_entries();
        rep.require("composite-formula", composite == adj, diff_witness("composite vs adjoint", composite, adj));
    }
    {
        Matrix dd = adjoint(adj, g_w, g_v);
        rep.require("involutive", dd == t, diff_witness("(T^dag)^dag vs T", dd, t));
    }
    return rep;
}

/// End_l(V) with composition product and the adjoint star
inline std::pair<ModuleAlgebra, StarStructure> end_left_star_algebra(const HModule& v, const Matrix& g) {
    if (!verify_inner_product(v, g).all_pass()) throw NotInnerProduct("gram matrix fails inner product axioms");
    size_t n = v.dim;
    HModule carrier = hom_left(v, v);
    std::vector<Vec> mult(carrier.dim * carrier.dim, Vec(carrier.dim, Scalar(0)));
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r)
                for (size_t s = 0; s < n; ++s) {
                    // E_pq E_rs = delta_qr E_ps
                    if (q == r) mult[(p * n + q) * carrier.dim + (r * n + s)][p * n + s] = Scalar(1);
                }
    ModuleAlgebra alg{carrier, std::move(mult), vec_rowmajor(Matrix::identity(n))};
    // dagger on vec(T): vec(G^{-1} conj(T)^T G) = (G^{-1} (x) G^T) K conj(vec T)
    std::vector<size_t> transpose_perm(n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) transpose_perm[p * n + q] = q * n + p;
    Matrix dagger = kron(g.inverse(), g.transpose()) * Matrix::permutation(transpose_perm);
    StarStructure star{carrier, std::move(dagger)};
    verify_star_algebra(alg, star.dagger).throw_if_failed();
    return {alg, star};
}

/// the G-induced identification V (x) conj(V) -> End_l(V) carries the
/// enveloping star to the adjoint star
inline Report check_end_enveloping_correspondence(const HModule& v, const Matrix& g) {
    Report rep("End_l(V) vs V(x)conj(V) star correspondence: " + v.name);
    size_t n = v.dim;
    HModule cv = conjugate_module(v);
    auto [alg, star] = end_left_star_algebra(v, g);
    StarStructure env = enveloping_star(v).second;  // on V (x) conj(V)
    // Phi(b_p (x) bbar_q) = b_p <bbar_q, -> : matrix row p, entries G_{q,s}
    Matrix phi(n * n, n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t s = 0; s < n; ++s) phi(p * n + s, p * n + q) = g(q, s);
    ModuleMap phi_map = checked_module_map(env.module, alg.carrier, phi, "V(x)conj(V) -> End_l(V)");
    Matrix lhs = phi_map.matrix * env.dagger;
    Matrix rhs = star.dagger * phi_map.matrix.conj_entries();
    rep.require("stars-correspond", lhs == rhs, diff_witness("Phi env-star vs adjoint-star Phi", lhs, rhs));
    return rep;
}

/// two-out-of-three between a *-structure D, an inner product G, and a
/// bilinear form h, tied together by G = D^T H
struct TwoOutOfThree {
    Matrix star, gram, form;
    Report report{"two-out-of-three"};
};

inline TwoOutOfThree two_out_of_three(const HModule& v, const Matrix* d, const Matrix* g, const Matrix* h,
                                      unsigned sign_cap = sign_refinement_cap()) {
    int given = (d ? 1 : 0) + (g ? 1 : 0) + (h ? 1 : 0);
    if (given != 2) throw Error("two_out_of_three needs exactly two of {star, gram, form}");
    TwoOutOfThree res;
    if (d && g) {
        res.star = *d;
        res.gram = *g;
        Matrix dt = d->transpose();
        try {
            res.form = dt.inverse() * (*g);
        } catch (const NotInvertible&) {
            throw Inconsistent("star matrix is singular");
        }
    } else if (d && h) {
        res.star = *d;
        res.form = *h;
        res.gram = d->transpose() * (*h);
    } else {
        res.gram = *g;
        res.form = *h;
        try {
            // from G = D^T H: D = (H^T)^{-1} G^T
            res.star = h->transpose().inverse() * g->transpose();
        } catch (const NotInvertible&) {
            throw Inconsistent("bilinear form is degenerate");
        }
    }
    // shared constraint: G = D^T H
    if (res.gram != res.star.transpose() * res.form)
        throw Inconsistent("commuting triangle G = D^T H fails for the supplied pair");

    Report& rep = res.report;
    const auto& H = *v.algebra;
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < H.dim && ok; ++i) {
            // h is a module map iff rho(e_i)^T H = H rho(S e_i)
            Matrix lhs = v.action[i].transpose() * res.form;
            Matrix rhs = res.form * v.act(H.antipode.column(i));
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("form invariance at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("form-is-module-map", ok, w);
    }
    {
        // pentagon: h(w-bar^*, v-bar^*) = conj(h(v,w)), i.e. D^T H D = conj(H)^T
        Matrix lhs = res.star.transpose() * res.form * res.star;
        Matrix rhs = res.form.conj_entries().transpose();
        rep.require("form-star-symmetry", lhs == rhs, diff_witness("D^T H D vs conj(H)^T", lhs, rhs));
    }
    {
        Report sm = verify_star_module(v, res.star);
        rep.require("star-involutive", sm.passed("involutive"), "derived/given D is not involutive");
        rep.require("star-antimodule", sm.passed("antimodule-identity"), "derived/given D violates the antimodule identity");
    }
    {
        Report ip = verify_inner_product(v, res.gram, sign_cap);
        rep.require("gram-conjugate-symmetric", ip.passed("conjugate-symmetric"), "derived/given G not conj-symmetric");
        rep.require("gram-positive-definite", ip.passed("positive-definite"), "derived/given G not positive definite");
        rep.require("gram-h-invariant", ip.passed("h-invariant"), "derived/given G not H-invariant");
    }
    return res;
}

}  // namespace hopfstar
