#pragma once

#include <optional>

#include "hopfstar/conj.hpp"

namespace hopfstar {

struct NotSubmodule : Error {
    using Error::Error;
};
struct NotStarClosed : Error {
    using Error::Error;
};
struct NotStarMap : Error {
    using Error::Error;
};

/// Algebra object in HMod: structure constants over a module carrier.
struct ModuleAlgebra {
    HModule carrier;
    std::vector<Vec> mult;  // mult[p * n + q] = coords of b_p b_q
    Vec unit;

    Vec mul(const Vec& x, const Vec& y) const {
        size_t n = carrier.dim;
        Vec r(n, Scalar(0));
        for (size_t p = 0; p < n; ++p) {
            if (x[p].is_zero()) continue;
            for (size_t q = 0; q < n; ++q) {
                if (y[q].is_zero()) continue;
                Scalar c = x[p] * y[q];
                const Vec& m = mult[p * n + q];
                for (size_t k = 0; k < n; ++k) r[k] += c * m[k];
            }
        }
        return r;
    }

    void check_shape() const {
        carrier.check_shape();
        size_t n = carrier.dim;
        if (mult.size() != n * n) throw DimensionMismatch("module algebra needs n^2 mult entries");
        for (const auto& v : mult)
            if (v.size() != n) throw DimensionMismatch("module algebra mult entry of wrong length");
        if (unit.size() != n) throw DimensionMismatch("module algebra unit of wrong length");
    }
};

inline Report verify_module_algebra(const ModuleAlgebra& a) {
    a.check_shape();
    Report rep("module algebra: " + a.carrier.name);
    rep.merge(verify_module(a.carrier));
    size_t n = a.carrier.dim;
    {
        bool ok = true;
        std::string w;
        for (size_t p = 0; p < n && ok; ++p)
            for (size_t q = 0; q < n && ok; ++q)
                for (size_t r = 0; r < n && ok; ++r) {
                    Vec lhs = a.mul(a.mult[p * n + q], unit_vec(n, r));
                    Vec rhs = a.mul(unit_vec(n, p), a.mult[q * n + r]);
                    if (lhs != rhs) {
                        ok = false;
                        w = diff_witness("assoc at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                                             std::to_string(r) + ")",
                                         lhs, rhs);
                    }
                }
        rep.require("assoc", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t p = 0; p < n && ok; ++p) {
            Vec bp = unit_vec(n, p);
            Vec l = a.mul(a.unit, bp), r = a.mul(bp, a.unit);
            if (l != bp || r != bp) {
                ok = false;
                w = diff_witness("unit law at b" + std::to_string(p), l, r);
            }
        }
        rep.require("unit", ok, w);
    }
    {
        // a |> (xy) = (a_(1) |> x)(a_(2) |> y) and a |> 1 = eps(a) 1
        const auto& H = *a.carrier.algebra;
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < H.dim && ok; ++i) {
            for (size_t p = 0; p < n && ok; ++p)
                for (size_t q = 0; q < n && ok; ++q) {
                    Vec lhs = a.carrier.action[i].apply(a.mult[p * n + q]);
                    Vec rhs(n, Scalar(0));
                    for (const auto& term : H.coprod[i]) {
                        Vec xp = a.carrier.action[term.left].apply(unit_vec(n, p));
                        Vec yq = a.carrier.action[term.right].apply(unit_vec(n, q));
                        Vec prod = a.mul(xp, yq);
                        for (size_t k = 0; k < n; ++k) rhs[k] += term.coeff * prod[k];
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = diff_witness("action vs product at (e" + std::to_string(i) + ", b" + std::to_string(p) +
                                             ", b" + std::to_string(q) + ")",
                                         lhs, rhs);
                    }
                }
            if (ok) {
                Vec lhs = a.carrier.action[i].apply(a.unit);
                Vec rhs = vec_scale(H.counit[i], a.unit);
                if (lhs != rhs) {
                    ok = false;
                    w = diff_witness("action on unit at e" + std::to_string(i), lhs, rhs);
                }
            }
        }
        rep.require("module-algebra-compat", ok, w);
    }
    return rep;
}

/// conjugate algebra: carrier conj(A), product conj-of(ba), unit conj(1)
inline ModuleAlgebra conjugate_algebra(const ModuleAlgebra& a) {
    size_t n = a.carrier.dim;
    ModuleAlgebra c{conjugate_module(a.carrier), std::vector<Vec>(n * n), vec_conj(a.unit)};
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) c.mult[p * n + q] = vec_conj(a.mult[q * n + p]);
    return c;
}

inline bool is_algebra_morphism(const ModuleAlgebra& a, const ModuleAlgebra& b, const Matrix& f) {
    size_t n = a.carrier.dim;
    if (f.apply(a.unit) != b.unit) return false;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            if (f.apply(a.mult[p * n + q]) != b.mul(f.column(p), f.column(q))) return false;
    return true;
}

/// sigma as an isomorphism of module-algebras conj(conj(A)) -> A
inline Report check_double_conjugate_algebra(const ModuleAlgebra& a) {
    Report rep("double conjugate algebra: " + a.carrier.name);
    ModuleAlgebra cc = conjugate_algebra(conjugate_algebra(a));
    bool mult_eq = true;
    for (size_t k = 0; k < cc.mult.size() && mult_eq; ++k) mult_eq = cc.mult[k] == a.mult[k];
    rep.require("structure-constants-return", mult_eq && cc.unit == a.unit, "conj(conj(A)) structure differs from A");
    ModuleMap sigma = checked_module_map(cc.carrier, a.carrier, Matrix::identity(a.carrier.dim), "sigma_A");
    rep.require("sigma-is-algebra-morphism", is_algebra_morphism(cc, a, sigma.matrix),
                "sigma fails to be an algebra morphism");
    return rep;
}

// --- *-structures on modules ---------------------------------------------------

/// *-structure as the matrix D of the module map conj(V) -> V; the induced
/// antilinear dagger on V is v -> D conj(v)
struct StarStructure {
    HModule module;
    Matrix dagger;
};

inline Report verify_star_module(const HModule& v, const Matrix& d) {
    Report rep("star module: " + v.name);
    if (d.rows() != v.dim || d.cols() != v.dim) throw DimensionMismatch("star matrix shape");
    {
        Matrix m = d * d.conj_entries();
        rep.require("involutive", m.is_identity(), diff_witness("D conj(D)", m, Matrix::identity(v.dim)));
    }
    {
        AntimoduleMap am{v, v, d};
        rep.require("antimodule-identity", is_antimodule_map(am), "D conj(rho(e_i)) = rho((S e_i)^*) D fails");
    }
    return rep;
}

inline Report verify_star_module(const StarStructure& s) { return verify_star_module(s.module, s.dagger); }

/// T(v^dagger) = (Tv)^dagger, i.e. T D_V = D_W conj(T)
inline bool is_star_morphism(const Matrix& t, const Matrix& d_v, const Matrix& d_w) {
    return t * d_v == d_w * t.conj_entries();
}

/// the canonical stars on conj(V) (x) V and V (x) conj(V): swap with conjugation
inline std::pair<StarStructure, StarStructure> enveloping_star(const HModule& v) {
    verify_module(v).throw_if_failed();
    HModule cv = conjugate_module(v);
    StarStructure left{tensor_module(cv, v), tensor_swap_matrix(v.dim, v.dim)};
    StarStructure right{tensor_module(v, cv), tensor_swap_matrix(v.dim, v.dim)};
    verify_star_module(left).throw_if_failed();
    verify_star_module(right).throw_if_failed();
    return {left, right};
}

inline StarStructure direct_sum_star(const std::vector<StarStructure>& parts) {
    if (parts.empty()) throw Error("direct_sum_star needs at least one summand");
    StarStructure acc = parts[0];
    for (size_t j = 1; j < parts.size(); ++j) {
        HModule sum = direct_sum_module(acc.module, parts[j].module);
        Matrix d(sum.dim, sum.dim);
        for (size_t r = 0; r < acc.module.dim; ++r)
            for (size_t c = 0; c < acc.module.dim; ++c) d(r, c) = acc.dagger(r, c);
        for (size_t r = 0; r < parts[j].module.dim; ++r)
            for (size_t c = 0; c < parts[j].module.dim; ++c)
                d(acc.module.dim + r, acc.module.dim + c) = parts[j].dagger(r, c);
        acc = StarStructure{std::move(sum), std::move(d)};
    }
    verify_star_module(acc).throw_if_failed();
    return acc;
}

/// full reversal permutation on n tensor legs of dimension dim each
inline Matrix reversal_permutation(size_t dim, unsigned legs) {
    size_t total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= dim;
    std::vector<size_t> perm(total);
    for (size_t p = 0; p < total; ++p) {
        size_t q = 0, pp = p;
        for (unsigned l = 0; l < legs; ++l) {
            q = q * dim + pp % dim;
            pp /= dim;
        }
        perm[p] = q;
    }
    return Matrix::permutation(perm);
}

/// (v_1 (x) ... (x) v_n)^dagger = v_n^dagger (x) ... (x) v_1^dagger
inline StarStructure tensor_power_star(const HModule& v, const Matrix& d, unsigned n) {
    if (n == 0) throw Error("tensor_power_star needs n >= 1");
    verify_star_module(v, d).throw_if_failed();
    HModule power = v;
    Matrix dn = d;
    for (unsigned k = 1; k < n; ++k) {
        power = tensor_module(power, v);
        dn = kron(dn, d);
    }
    StarStructure s{std::move(power), reversal_permutation(v.dim, n) * dn};
    verify_star_module(s).throw_if_failed();
    return s;
}

// --- submodules, quotients -------------------------------------------------------

inline bool is_submodule(const HModule& v, const std::vector<Vec>& w_basis) {
    std::vector<Vec> span = row_space_basis(Matrix::from_rows(w_basis));
    for (size_t i = 0; i < v.algebra->dim; ++i)
        for (const auto& w : w_basis)
            if (!in_span(span, v.action[i].apply(w))) return false;
    return true;
}

/// is W closed under the dagger v -> D conj(v)?
inline bool star_submodule_check(const HModule& v, const Matrix& d, const std::vector<Vec>& w_basis) {
    if (w_basis.empty()) return true;
    if (!is_submodule(v, w_basis)) throw NotSubmodule("basis does not span a submodule of " + v.name);
    std::vector<Vec> span = row_space_basis(Matrix::from_rows(w_basis));
    for (const auto& w : w_basis)
        if (!in_span(span, d.apply(vec_conj(w)))) return false;
    return true;
}

/// quotient data: complement basis via echelon pivoting
struct QuotientSpace {
    std::vector<size_t> pivot_cols;      // pivots of W (dropped coordinates)
    std::vector<size_t> complement;      // standard basis indices spanning the complement
    std::vector<Vec> echelon;            // reduced echelon basis of W
    Matrix projection;                   // dim(V/W) x dim(V), reduce-mod-W in complement coords
};

inline QuotientSpace quotient_space(size_t dim, const std::vector<Vec>& w_basis) {
    QuotientSpace q;
    if (!w_basis.empty()) {
        Matrix m = Matrix::from_rows(w_basis);
        q.pivot_cols = rref_in_place(m);
        for (size_t i = 0; i < q.pivot_cols.size(); ++i) q.echelon.push_back(m.row(i));
    }
    std::vector<bool> is_pivot(dim, false);
    for (size_t p : q.pivot_cols) is_pivot[p] = true;
    for (size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) q.complement.push_back(c);
    q.projection = Matrix(q.complement.size(), dim);
    for (size_t c = 0; c < dim; ++c) {
        // reduce e_c modulo W, read off complement coordinates
        Vec r = unit_vec(dim, c);
        for (size_t i = 0; i < q.pivot_cols.size(); ++i) {
            Scalar f = r[q.pivot_cols[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) r[j] -= f * q.echelon[i][j];
        }
        for (size_t k = 0; k < q.complement.size(); ++k) q.projection(k, c) = r[q.complement[k]];
    }
    return q;
}

struct StarQuotient {
    HModule module;
    StarStructure star;
    ModuleMap projection;
};

/// quotient of a *-module by a star-closed submodule, with the unique star
/// making the projection a *-map
inline StarQuotient quotient_star(const HModule& v, const Matrix& d, const std::vector<Vec>& w_basis) {
    if (!star_submodule_check(v, d, w_basis))
        throw NotStarClosed("submodule of " + v.name + " is not closed under the star");
    QuotientSpace q = quotient_space(v.dim, w_basis);
    const auto& H = *v.algebra;
    HModule quot{v.algebra, v.name + "/W", q.complement.size(), {}};
    Matrix lift(v.dim, q.complement.size());  // complement coords -> representative in V
    for (size_t k = 0; k < q.complement.size(); ++k) lift(q.complement[k], k) = Scalar(1);
    for (size_t i = 0; i < H.dim; ++i) quot.action.push_back(q.projection * v.action[i] * lift);
    ModuleMap proj = checked_module_map(v, quot, q.projection, "quotient projection");
    Matrix dq = q.projection * d * lift.conj_entries();
    verify_star_module(quot, dq).throw_if_failed();
    // projection must be a *-map: proj D = Dq conj(proj)
    if (!is_star_morphism(q.projection, d, dq)) throw NotStarClosed("projection fails to be a *-morphism");
    return {quot, StarStructure{quot, dq}, proj};
}

/// kernel and image of a *-map are *-submodules; checked exactly
inline Report kernel_image_star(const ModuleMap& t, const Matrix& d_v, const Matrix& d_w) {
    Report rep("kernel/image star closure: " + t.domain.name + " -> " + t.codomain.name);
    if (!is_module_map(t)) throw NotModuleMap("kernel_image_star input is not a module map");
    rep.require("input-is-star-morphism", is_star_morphism(t.matrix, d_v, d_w), "T D_V != D_W conj(T)");
    std::vector<Vec> ker = kernel_basis(t.matrix);
    bool ker_ok = ker.empty() || star_submodule_check(t.domain, d_v, ker);
    rep.require("kernel-star-closed", ker_ok, "kernel is not closed under the star");
    std::vector<Vec> img;
    for (size_t c = 0; c < t.matrix.cols(); ++c) img.push_back(t.matrix.column(c));
    std::vector<Vec> img_basis = row_space_basis(Matrix::from_rows(img));
    bool img_ok = img_basis.empty() || star_submodule_check(t.codomain, d_w, img_basis);
    rep.require("image-star-closed", img_ok, "image is not closed under the star");
    return rep;
}

// --- *-algebras -------------------------------------------------------------------

inline Report verify_star_algebra(const ModuleAlgebra& a, const Matrix& d) {
    Report rep("star algebra: " + a.carrier.name);
    rep.merge(verify_star_module(a.carrier, d));
    size_t n = a.carrier.dim;
    {
        bool ok = true;
        std::string w;
        for (size_t p = 0; p < n && ok; ++p)
            for (size_t q = 0; q < n && ok; ++q) {
                Vec lhs = d.apply(vec_conj(a.mult[p * n + q]));
                Vec rhs = a.mul(d.column(q), d.column(p));
                if (lhs != rhs) {
                    ok = false;
                    w = diff_witness("(b" + std::to_string(p) + " b" + std::to_string(q) + ")^dagger vs reversed", lhs,
                                     rhs);
                }
            }
        rep.require("antimultiplicative", ok, w);
    }
    rep.require("unital", d.apply(vec_conj(a.unit)) == a.unit,
                diff_witness("1^dagger", d.apply(vec_conj(a.unit)), a.unit));
    return rep;
}

// --- degree-truncated tensor algebra ------------------------------------------------

/// T(V) truncated at degree N: degrees 0..N are honest tensor powers with the
/// tensor action; products of total degree > N are zero.
struct TruncatedTensorAlgebra {
    HModule generators;
    unsigned max_degree = 0;
    ModuleAlgebra algebra;
    std::vector<size_t> offset;  // offset[k] = first index of degree k; offset[N+1] = total

    size_t degree_dim(unsigned k) const { return offset[k + 1] - offset[k]; }
    unsigned degree_of(size_t index) const {
        for (unsigned k = 0; k + 1 < offset.size(); ++k)
            if (index < offset[k + 1]) return k;
        throw Error("index out of range in truncated tensor algebra");
    }
};

inline TruncatedTensorAlgebra truncated_tensor_algebra(const HModule& v, unsigned n) {
    verify_module(v).throw_if_failed();
    const auto& H = *v.algebra;
    TruncatedTensorAlgebra t;
    t.generators = v;
    t.max_degree = n;
    t.offset.assign(n + 2, 0);
    size_t pw = 1;
    for (unsigned k = 0; k <= n; ++k) {
        t.offset[k + 1] = t.offset[k] + pw;
        pw *= v.dim;
    }
    size_t total = t.offset[n + 1];

    HModule carrier{v.algebra, "T<=" + std::to_string(n) + "(" + v.name + ")", total, {}};
    std::vector<HModule> powers;  // degree-k tensor power, degree 0 = trivial
    powers.push_back(trivial_module(v.algebra));
    for (unsigned k = 1; k <= n; ++k) powers.push_back(k == 1 ? v : tensor_module(powers[k - 1], v));
    for (size_t i = 0; i < H.dim; ++i) {
        Matrix m(total, total);
        for (unsigned k = 0; k <= n; ++k) {
            const Matrix& block = powers[k].action[i];
            for (size_t r = 0; r < block.rows(); ++r)
                for (size_t c = 0; c < block.cols(); ++c) m(t.offset[k] + r, t.offset[k] + c) = block(r, c);
        }
        carrier.action.push_back(std::move(m));
    }

    std::vector<Vec> mult(total * total, Vec(total, Scalar(0)));
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l <= n; ++l) {
            size_t dk = t.degree_dim(k), dl_ = t.offset[l + 1] - t.offset[l];
            for (size_t p = 0; p < dk; ++p)
                for (size_t q = 0; q < dl_; ++q) {
                    size_t gp = t.offset[k] + p, gq = t.offset[l] + q;
                    if (k + l <= n) {
                        // concatenation: index p*dim^l + q within degree k+l
                        size_t target = t.offset[k + l] + p * dl_ + q;
                        mult[gp * total + gq][target] = Scalar(1);
                    }
                }
        }
    t.algebra = ModuleAlgebra{std::move(carrier), std::move(mult), unit_vec(total, 0)};
    return t;
}

/// embed a degree-1 element of V into the truncated algebra
inline Vec tensor_algebra_inclusion(const TruncatedTensorAlgebra& t, const Vec& v) {
    Vec r(t.offset[t.max_degree + 1], Scalar(0));
    for (size_t j = 0; j < v.size(); ++j) r[t.offset[1] + j] = v[j];
    return r;
}

/// multi-index digits of a degree-k basis element, most significant leg first
inline std::vector<size_t> tensor_word(const TruncatedTensorAlgebra& t, unsigned k, size_t p) {
    std::vector<size_t> w(k);
    for (unsigned l = k; l-- > 0;) {
        w[l] = p % t.generators.dim;
        p /= t.generators.dim;
    }
    return w;
}

/// algebra morphism T<=N(V) -> A determined by a module map f : V -> A;
/// degree-k basis words map to products f(b_{i1}) ... f(b_{ik})
inline ModuleMap lift_module_map(const TruncatedTensorAlgebra& t, const ModuleMap& f, const ModuleAlgebra& a) {
    if (f.domain.dim != t.generators.dim || !same_algebra(f.domain, t.generators))
        throw DimensionMismatch("lift_module_map: f must start from the generator module");
    if (!is_module_map(f)) throw NotModuleMap("lift_module_map needs a module map V -> A");
    size_t total = t.offset[t.max_degree + 1];
    Matrix m(a.carrier.dim, total);
    for (unsigned k = 0; k <= t.max_degree; ++k)
        for (size_t p = 0; p < t.degree_dim(k); ++p) {
            Vec acc = a.unit;
            for (size_t i : tensor_word(t, k, p)) acc = a.mul(acc, f.matrix.column(i));
            for (size_t r = 0; r < a.carrier.dim; ++r) m(r, t.offset[k] + p) = acc[r];
        }
    return checked_module_map(t.algebra.carrier, a.carrier, m, "lifted algebra morphism");
}

/// antimodule-algebra morphism T<=N(V) -> A determined by an antimodule map
/// f : V -> A; words map to reversed products
inline AntimoduleMap lift_antimodule_map(const TruncatedTensorAlgebra& t, const AntimoduleMap& f,
                                         const ModuleAlgebra& a) {
    if (f.domain.dim != t.generators.dim || !same_algebra(f.domain, t.generators))
        throw DimensionMismatch("lift_antimodule_map: f must start from the generator module");
    if (!is_antimodule_map(f)) throw NotAntimodule("lift_antimodule_map needs an antimodule map V -> A");
    size_t total = t.offset[t.max_degree + 1];
    Matrix m(a.carrier.dim, total);
    for (unsigned k = 0; k <= t.max_degree; ++k)
        for (size_t p = 0; p < t.degree_dim(k); ++p) {
            std::vector<size_t> word = tensor_word(t, k, p);
            Vec acc = a.unit;
            for (size_t l = word.size(); l-- > 0;) acc = a.mul(acc, f.matrix.column(word[l]));
            for (size_t r = 0; r < a.carrier.dim; ++r) m(r, t.offset[k] + p) = acc[r];
        }
    AntimoduleMap lifted{t.algebra.carrier, a.carrier, m};
    if (!is_antimodule_map(lifted)) throw NotAntimodule("lifted map violates the antimodule identity");
    return lifted;
}

/// multiplicativity of a lift on all pairs whose product stays within degree N
inline Report check_lift_multiplicative(const TruncatedTensorAlgebra& t, const ModuleAlgebra& a, const Matrix& lift,
                                        bool reversed) {
    Report rep(std::string(reversed ? "antialgebra" : "algebra") + " morphism on T<=" +
               std::to_string(t.max_degree) + "(" + t.generators.name + ")");
    rep.notes.push_back("products with total degree > " + std::to_string(t.max_degree) +
                        " are truncated to zero and excluded");
    size_t total = t.offset[t.max_degree + 1];
    bool ok = true;
    std::string w;
    for (size_t p = 0; p < total && ok; ++p)
        for (size_t q = 0; q < total && ok; ++q) {
            if (t.degree_of(p) + t.degree_of(q) > t.max_degree) continue;
            Vec prod = t.algebra.mul(unit_vec(total, p), unit_vec(total, q));
            Vec lhs = lift.apply(reversed ? vec_conj(prod) : prod);
            Vec rhs = reversed ? a.mul(lift.column(q), lift.column(p)) : a.mul(lift.column(p), lift.column(q));
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("at basis pair (" + std::to_string(p) + "," + std::to_string(q) + ")", lhs, rhs);
            }
        }
    rep.require("multiplicative-within-truncation", ok, w);
    rep.require("unital", lift.apply(t.algebra.unit) == a.unit,
                diff_witness("lift(1)", lift.apply(t.algebra.unit), a.unit));
    return rep;
}

/// the reversal isomorphism T<=N(conj V) -> conj(T<=N V), per-degree
inline ModuleMap conj_tensor_algebra_iso(const HModule& v, unsigned n) {
    TruncatedTensorAlgebra tbar = truncated_tensor_algebra(conjugate_module(v), n);
    TruncatedTensorAlgebra tv = truncated_tensor_algebra(v, n);
    size_t total = tv.offset[n + 1];
    std::vector<size_t> perm(total);
    for (unsigned k = 0; k <= n; ++k) {
        size_t dk = tv.degree_dim(k);
        for (size_t p = 0; p < dk; ++p) {
            size_t q = p;
            if (k >= 2) {
                std::vector<size_t> word = tensor_word(tv, k, p);
                std::reverse(word.begin(), word.end());
                q = 0;
                for (size_t i : word) q = q * v.dim + i;
            }
            perm[tv.offset[k] + p] = tv.offset[k] + q;
        }
    }
    return checked_module_map(tbar.algebra.carrier, conjugate_algebra(tv.algebra).carrier, Matrix::permutation(perm),
                              "T(conj V) -> conj(T(V))");
}

/// Report wrapper: the iso is a module-algebra isomorphism within truncation
inline Report check_conj_tensor_algebra_iso(const HModule& v, unsigned n) {
    Report rep("tensor algebra conjugation iso: " + v.name + ", N = " + std::to_string(n));
    TruncatedTensorAlgebra tbar = truncated_tensor_algebra(conjugate_module(v), n);
    TruncatedTensorAlgebra tv = truncated_tensor_algebra(v, n);
    ModuleMap kappa{tbar.algebra.carrier, tbar.algebra.carrier, Matrix::identity(tv.offset[n + 1])};
    try {
        kappa = conj_tensor_algebra_iso(v, n);
        rep.require("intertwines", true, "");
    } catch (const NotModuleMap& e) {
        rep.require("intertwines", false, e.what());
        return rep;
    }
    ModuleAlgebra target = conjugate_algebra(tv.algebra);
    bool ok = true;
    std::string w;
    size_t total = tv.offset[n + 1];
    for (size_t p = 0; p < total && ok; ++p)
        for (size_t q = 0; q < total && ok; ++q) {
            if (tbar.degree_of(p) + tbar.degree_of(q) > n) continue;
            Vec lhs = kappa.matrix.apply(tbar.algebra.mul(unit_vec(total, p), unit_vec(total, q)));
            Vec rhs = target.mul(kappa.matrix.column(p), kappa.matrix.column(q));
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("algebra morphism at (" + std::to_string(p) + "," + std::to_string(q) + ")", lhs, rhs);
            }
        }
    rep.require("algebra-morphism-within-truncation", ok, w);
    rep.require("bijective", [&] {
        try {
            kappa.matrix.inverse();
            return true;
        } catch (const NotInvertible&) {
            return false;
        }
    }(), "kappa matrix is singular");
    rep.notes.push_back("products with total degree > " + std::to_string(n) + " are truncated to zero and excluded");
    return rep;
}

/// graded star on T<=N(V): per-degree tensor-power star (degree 0: conjugation)
inline StarStructure tensor_algebra_star(const HModule& v, const Matrix& d, unsigned n) {
    verify_star_module(v, d).throw_if_failed();
    TruncatedTensorAlgebra t = truncated_tensor_algebra(v, n);
    size_t total = t.offset[n + 1];
    Matrix big(total, total);
    big(0, 0) = Scalar(1);
    for (unsigned k = 1; k <= n; ++k) {
        Matrix dk = d;
        for (unsigned l = 1; l < k; ++l) dk = kron(dk, d);
        Matrix block = reversal_permutation(v.dim, k) * dk;
        for (size_t r = 0; r < block.rows(); ++r)
            for (size_t c = 0; c < block.cols(); ++c) big(t.offset[k] + r, t.offset[k] + c) = block(r, c);
    }
    StarStructure s{t.algebra.carrier, std::move(big)};
    verify_star_module(s).throw_if_failed();
    verify_star_algebra(t.algebra, s.dagger).throw_if_failed();
    return s;
}

/// lift of a *-module map V -> A to a verified *-algebra morphism T<=N(V) -> A
inline ModuleMap star_universal_lift(const TruncatedTensorAlgebra& t, const ModuleMap& f, const ModuleAlgebra& a,
                                     const Matrix& d_v, const Matrix& d_a) {
    if (!is_star_morphism(f.matrix, d_v, d_a)) throw NotStarMap("f is not a *-module map");
    ModuleMap lift = lift_module_map(t, f, a);
    StarStructure tstar = tensor_algebra_star(t.generators, d_v, t.max_degree);
    if (!is_star_morphism(lift.matrix, tstar.dagger, d_a)) throw NotStarMap("lift fails to be a *-morphism");
    return lift;
}

/// two-sided ideal generated by a relation subspace inside T<=N(V), with
/// star-closedness flag and the quotient algebra
struct IdealResult {
    std::vector<Vec> basis;
    bool star_closed = false;
    ModuleAlgebra quotient;
    std::optional<StarStructure> quotient_star;
    Matrix projection;
};

inline IdealResult ideal_generated(const TruncatedTensorAlgebra& t, const std::vector<Vec>& relations,
                                   const Matrix* tstar) {
    size_t total = t.offset[t.max_degree + 1];
    for (const auto& w : relations)
        if (w.size() != total) throw DimensionMismatch("relation vector of wrong length");
    // close the relations under the H-action first: the two-sided ideal of a
    // module-algebra is generated by the submodule the relations span
    std::vector<Vec> closed;
    for (const auto& w : relations)
        if (!vec_is_zero(w)) closed.push_back(w);
    const auto& H = *t.generators.algebra;
    for (size_t done = 0; done < closed.size(); ++done)
        for (size_t i = 0; i < H.dim; ++i) {
            Vec moved = t.algebra.carrier.action[i].apply(closed[done]);
            if (!vec_is_zero(moved) && !in_span(closed, moved)) closed.push_back(std::move(moved));
        }
    std::vector<Vec> span;
    for (const auto& w : closed) {
        for (size_t p = 0; p < total; ++p)
            for (size_t q = 0; q < total; ++q) {
                Vec awb = t.algebra.mul(unit_vec(total, p), t.algebra.mul(w, unit_vec(total, q)));
                if (!vec_is_zero(awb)) span.push_back(std::move(awb));
            }
    }
    IdealResult res;
    res.basis = span.empty() ? std::vector<Vec>{} : row_space_basis(Matrix::from_rows(span));

    res.star_closed = true;
    if (tstar && !res.basis.empty()) {
        for (const auto& w : res.basis)
            if (!in_span(res.basis, tstar->apply(vec_conj(w)))) {
                res.star_closed = false;
                break;
            }
    }

    QuotientSpace q = quotient_space(total, res.basis);
    HModule quot{t.generators.algebra, t.algebra.carrier.name + "/J", q.complement.size(), {}};
    Matrix lift(total, q.complement.size());
    for (size_t k = 0; k < q.complement.size(); ++k) lift(q.complement[k], k) = Scalar(1);
    for (size_t i = 0; i < H.dim; ++i) quot.action.push_back(q.projection * t.algebra.carrier.action[i] * lift);
    std::vector<Vec> qmult(quot.dim * quot.dim);
    for (size_t p = 0; p < quot.dim; ++p)
        for (size_t r = 0; r < quot.dim; ++r) {
            Vec prod = t.algebra.mul(lift.column(p), lift.column(r));
            qmult[p * quot.dim + r] = q.projection.apply(prod);
        }
    res.quotient = ModuleAlgebra{quot, std::move(qmult), q.projection.apply(t.algebra.unit)};
    res.projection = q.projection;
    if (tstar && res.star_closed) {
        Matrix dq = q.projection * (*tstar) * lift.conj_entries();
        res.quotient_star = StarStructure{res.quotient.carrier, dq};
    }
    return res;
}

}  // namespace hopfstar
