#pragma once

#include <memory>

#include "hopfstar/report.hpp"

namespace hopfstar {

struct CoprodTerm {
    Scalar coeff;
    size_t left = 0, right = 0;
};

/// Structure-constant presentation of a finite-dimensional Hopf *-algebra.
///
/// mult[i*dim+j]   coordinates of e_i e_j
/// coprod[i]       terms of Delta(e_i) = sum c * e_left (x) e_right
/// antipode        column i = coordinates of S(e_i)
/// star            column i = coordinates of (e_i)*; on general input the
///                 star conjugates coordinates first (antilinearity)
struct HopfStarAlgebra {
    std::string name;
    unsigned scalar_order = 1;
    size_t dim = 0;
    std::vector<Vec> mult;
    Vec unit;
    std::vector<std::vector<CoprodTerm>> coprod;
    Vec counit;
    Matrix antipode;
    Matrix star;

    void check_shape() const {
        auto bad = [&](const std::string& what) {
            throw DimensionMismatch("algebra '" + name + "': " + what);
        };
        if (dim == 0) bad("dim must be positive");
        if (mult.size() != dim * dim) bad("mult table needs dim^2 entries");
        for (const auto& v : mult)
            if (v.size() != dim) bad("mult entry of wrong length");
        if (unit.size() != dim) bad("unit vector of wrong length");
        if (coprod.size() != dim) bad("coprod needs dim rows");
        for (const auto& terms : coprod)
            for (const auto& t : terms)
                if (t.left >= dim || t.right >= dim) bad("coprod index out of range");
        if (counit.size() != dim) bad("counit vector of wrong length");
        if (antipode.rows() != dim || antipode.cols() != dim) bad("antipode matrix of wrong shape");
        if (star.rows() != dim || star.cols() != dim) bad("star matrix of wrong shape");
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec r(dim, Scalar(0));
        for (size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                Scalar c = a[i] * b[j];
                const Vec& m = mult[i * dim + j];
                for (size_t k = 0; k < dim; ++k) r[k] += c * m[k];
            }
        }
        return r;
    }

    Vec apply_antipode(const Vec& a) const { return antipode.apply(a); }
    Vec apply_star(const Vec& a) const { return star.apply(vec_conj(a)); }

    Scalar counit_of(const Vec& a) const {
        Scalar r(0);
        for (size_t i = 0; i < dim; ++i) r += counit[i] * a[i];
        return r;
    }

    /// Delta(a) as a dim^2 coordinate vector, index (j,k) -> j*dim + k
    Vec delta(const Vec& a) const {
        Vec r(dim * dim, Scalar(0));
        for (size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& t : coprod[i]) r[t.left * dim + t.right] += a[i] * t.coeff;
        }
        return r;
    }

    Vec delta_basis(size_t i) const { return delta(unit_vec(dim, i)); }
};

// --- arithmetic in H^{(x)k} as d^k coordinate vectors ------------------------

inline Vec tensor_unit(const HopfStarAlgebra& H, unsigned legs) {
    Vec r = H.unit;
    for (unsigned l = 1; l < legs; ++l) r = kron_vec(r, H.unit);
    return r;
}

inline Vec tensor_mul(const HopfStarAlgebra& H, unsigned legs, const Vec& x, const Vec& y) {
    size_t total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= H.dim;
    if (x.size() != total || y.size() != total) throw DimensionMismatch("tensor_mul shape");
    Vec r(total, Scalar(0));
    std::vector<size_t> xi(legs), yi(legs);
    for (size_t p = 0; p < total; ++p) {
        if (x[p].is_zero()) continue;
        size_t pp = p;
        for (unsigned l = legs; l-- > 0;) {
            xi[l] = pp % H.dim;
            pp /= H.dim;
        }
        for (size_t q = 0; q < total; ++q) {
            if (y[q].is_zero()) continue;
            size_t qq = q;
            for (unsigned l = legs; l-- > 0;) {
                yi[l] = qq % H.dim;
                qq /= H.dim;
            }
            // product of basis tensors, leg by leg
            Vec acc(1, x[p] * y[q]);
            for (unsigned l = 0; l < legs; ++l) acc = kron_vec(acc, H.mult[xi[l] * H.dim + yi[l]]);
            for (size_t k = 0; k < total; ++k) r[k] += acc[k];
        }
    }
    return r;
}

/// apply a linear map M on one leg of a d^k tensor: id (x) .. (x) M (x) .. (x) id
inline Vec apply_on_leg(const HopfStarAlgebra& H, unsigned legs, unsigned leg, const Matrix& M, const Vec& x) {
    size_t d = H.dim, total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= d;
    if (x.size() != total) throw DimensionMismatch("apply_on_leg shape");
    size_t stride = 1;
    for (unsigned l = legs - 1; l > leg; --l) stride *= d;
    Vec r(total, Scalar(0));
    for (size_t p = 0; p < total; ++p) {
        if (x[p].is_zero()) continue;
        size_t idx = (p / stride) % d;
        size_t base = p - idx * stride;
        for (size_t i = 0; i < d; ++i)
            if (!M(i, idx).is_zero()) r[base + i * stride] += M(i, idx) * x[p];
    }
    return r;
}

/// expand leg `leg` of a d^k tensor by Delta, giving a d^(k+1) tensor
inline Vec coproduct_on_leg(const HopfStarAlgebra& H, unsigned legs, unsigned leg, const Vec& x) {
    size_t d = H.dim, total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= d;
    if (x.size() != total) throw DimensionMismatch("coproduct_on_leg shape");
    size_t stride = 1;  // stride of the chosen leg in the input
    for (unsigned l = legs - 1; l > leg; --l) stride *= d;
    Vec r(total * d, Scalar(0));
    for (size_t p = 0; p < total; ++p) {
        if (x[p].is_zero()) continue;
        size_t idx = (p / stride) % d;
        size_t high = p / (stride * d);   // legs before `leg`
        size_t low = p % stride;          // legs after `leg`
        for (const auto& t : H.coprod[idx]) {
            // leg expands into two adjacent legs (t.left, t.right)
            size_t q = ((high * d + t.left) * d + t.right) * stride + low;
            r[q] += x[p] * t.coeff;
        }
    }
    return r;
}

/// apply counit on one leg, giving a d^(k-1) tensor
inline Vec counit_on_leg(const HopfStarAlgebra& H, unsigned legs, unsigned leg, const Vec& x) {
    size_t d = H.dim, total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= d;
    if (x.size() != total) throw DimensionMismatch("counit_on_leg shape");
    size_t stride = 1;
    for (unsigned l = legs - 1; l > leg; --l) stride *= d;
    Vec r(total / d, Scalar(0));
    for (size_t p = 0; p < total; ++p) {
        if (x[p].is_zero()) continue;
        size_t idx = (p / stride) % d;
        size_t high = p / (stride * d);
        size_t low = p % stride;
        r[high * stride + low] += H.counit[idx] * x[p];
    }
    return r;
}

/// multiply two adjacent legs together, giving a d^(k-1) tensor
inline Vec multiply_legs(const HopfStarAlgebra& H, unsigned legs, unsigned leg, const Vec& x) {
    size_t d = H.dim, total = 1;
    for (unsigned l = 0; l < legs; ++l) total *= d;
    if (x.size() != total) throw DimensionMismatch("multiply_legs shape");
    size_t stride = 1;  // stride of leg+1
    for (unsigned l = legs - 1; l > leg + 1; --l) stride *= d;
    Vec r(total / d, Scalar(0));
    for (size_t p = 0; p < total; ++p) {
        if (x[p].is_zero()) continue;
        size_t j = (p / stride) % d;
        size_t i = (p / (stride * d)) % d;
        size_t high = p / (stride * d * d);
        size_t low = p % stride;
        const Vec& m = H.mult[i * d + j];
        for (size_t k = 0; k < d; ++k)
            if (!m[k].is_zero()) r[(high * d + k) * stride + low] += x[p] * m[k];
    }
    return r;
}

/// Sweedler legs a_(1) (x) ... (x) a_(k) as a d^k coordinate vector
inline Vec iterated_coproduct(const HopfStarAlgebra& H, const Vec& a, unsigned k) {
    if (k < 1) throw Error("iterated_coproduct needs k >= 1");
    Vec t = a;
    for (unsigned legs = 1; legs < k; ++legs) t = coproduct_on_leg(H, legs, legs - 1, t);
    return t;
}

// --- axioms -------------------------------------------------------------------

/// Full Hopf *-algebra axiom check, itemized, plus the derived identities
/// eps(a^*) = conj(eps(a)) and * S * S = id.
inline Report verify_hopf_star(const HopfStarAlgebra& H) {
    H.check_shape();
    Report rep("hopf-star axioms: " + H.name);
    const size_t d = H.dim;

    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i)
            for (size_t j = 0; j < d && ok; ++j)
                for (size_t k = 0; k < d && ok; ++k) {
                    Vec lhs = H.mul(H.mult[i * d + j], unit_vec(d, k));
                    Vec rhs = H.mul(unit_vec(d, i), H.mult[j * d + k]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) + " " +
                            diff_witness("vs nested", lhs, rhs);
                    }
                }
        rep.require("assoc", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Vec ei = unit_vec(d, i);
            Vec l = H.mul(H.unit, ei), r = H.mul(ei, H.unit);
            if (l != ei || r != ei) {
                ok = false;
                w = diff_witness("unit law at e" + std::to_string(i), l, r);
            }
        }
        rep.require("unit", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Vec di = H.delta_basis(i);
            Vec lhs = coproduct_on_leg(H, 2, 0, di);
            Vec rhs = coproduct_on_leg(H, 2, 1, di);
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("coassoc at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("coassoc", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Vec di = H.delta_basis(i);
            Vec l = counit_on_leg(H, 2, 0, di);
            Vec r = counit_on_leg(H, 2, 1, di);
            Vec ei = unit_vec(d, i);
            if (l != ei || r != ei) {
                ok = false;
                w = diff_witness("counit law at e" + std::to_string(i), l, r);
            }
        }
        rep.require("counit", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i)
            for (size_t j = 0; j < d && ok; ++j) {
                Vec lhs = H.delta(H.mult[i * d + j]);
                Vec rhs = tensor_mul(H, 2, H.delta_basis(i), H.delta_basis(j));
                if (lhs != rhs) {
                    ok = false;
                    w = diff_witness("Delta multiplicative at (e" + std::to_string(i) + ", e" + std::to_string(j) + ")",
                                     lhs, rhs);
                    break;
                }
                Scalar le = H.counit_of(H.mult[i * d + j]);
                Scalar re = H.counit[i] * H.counit[j];
                if (le != re) {
                    ok = false;
                    w = diff_witness("eps multiplicative at (e" + std::to_string(i) + ", e" + std::to_string(j) + ")",
                                     le, re);
                }
            }
        if (ok) {
            Vec du = H.delta(H.unit);
            Vec uu = kron_vec(H.unit, H.unit);
            if (du != uu) {
                ok = false;
                w = diff_witness("Delta(1) vs 1(x)1", du, uu);
            } else if (H.counit_of(H.unit) != Scalar(1)) {
                ok = false;
                w = diff_witness("eps(1)", H.counit_of(H.unit), Scalar(1));
            }
        }
        rep.require("bialgebra", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Vec di = H.delta_basis(i);
            Vec lhs = multiply_legs(H, 2, 0, apply_on_leg(H, 2, 0, H.antipode, di));
            Vec rhs = multiply_legs(H, 2, 0, apply_on_leg(H, 2, 1, H.antipode, di));
            Vec expect = vec_scale(H.counit[i], H.unit);
            if (lhs != expect || rhs != expect) {
                ok = false;
                w = diff_witness("antipode law at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("antipode", ok, w);
    }
    {
        Matrix m = H.star * H.star.conj_entries();
        rep.require("star-involution", m.is_identity(), diff_witness("P conj(P)", m, Matrix::identity(d)));
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i)
            for (size_t j = 0; j < d && ok; ++j) {
                Vec lhs = H.apply_star(H.mult[i * d + j]);
                Vec rhs = H.mul(H.star.column(j), H.star.column(i));
                if (lhs != rhs) {
                    ok = false;
                    w = diff_witness("(e" + std::to_string(i) + " e" + std::to_string(j) + ")* vs e_j* e_i*", lhs, rhs);
                }
            }
        rep.require("star-antimult", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Vec lhs = H.delta(H.star.column(i));
            Vec rhs(d * d, Scalar(0));
            for (const auto& t : H.coprod[i]) {
                Vec term = kron_vec(H.star.column(t.left), H.star.column(t.right));
                for (size_t k = 0; k < rhs.size(); ++k) rhs[k] += t.coeff.conj() * term[k];
            }
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("Delta(e" + std::to_string(i) + "*) vs (*(x)*)Delta", lhs, rhs);
            }
        }
        rep.require("star-coprod", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < d && ok; ++i) {
            Scalar lhs = H.counit_of(H.star.column(i));
            Scalar rhs = H.counit[i].conj();
            if (lhs != rhs) {
                ok = false;
                w = diff_witness("eps(e" + std::to_string(i) + "*)", lhs, rhs);
            }
        }
        rep.require("counit-star", ok, w);
    }
    {
        // * S * S = id; as a linear map this is P conj(S) conj(P) S
        Matrix m = H.star * H.antipode.conj_entries() * H.star.conj_entries() * H.antipode;
        rep.require("antipode-star", m.is_identity(), diff_witness("*S*S", m, Matrix::identity(d)));
    }
    return rep;
}

/// matrix of S^{-1} = * S *, i.e. a -> (S(a*))*; verified against S
inline Matrix antipode_inverse(const HopfStarAlgebra& H) {
    Matrix sinv = H.star * H.antipode.conj_entries() * H.star.conj_entries();
    if (!(H.antipode * sinv).is_identity() || !(sinv * H.antipode).is_identity())
        throw NotInvertible("algebra '" + H.name + "': * S * is not inverse to S");
    return sinv;
}

using HopfPtr = std::shared_ptr<const HopfStarAlgebra>;

}  // namespace hopfstar
