#pragma once

#include "hopfstar/braid.hpp"
#include "hopfstar/inner.hpp"

namespace hopfstar {

struct UnknownFixture : Error {
    using Error::Error;
};

/// Everything a named fixture ships: algebra, curated modules, star
/// structures, Gram matrices, R-matrices. All re-verified on construction.
struct FixtureBundle {
    HopfPtr algebra;
    std::vector<HModule> modules;
    std::vector<StarStructure> stars;
    std::vector<InnerProduct> grams;
    std::vector<RMatrix> rmatrices;

    const HModule& module(const std::string& name) const {
        for (const auto& m : modules)
            if (m.name == name) return m;
        throw Error("fixture has no module '" + name + "'");
    }
    const RMatrix& rmatrix(const std::string& name) const {
        for (const auto& r : rmatrices)
            if (r.name == name) return r;
        throw Error("fixture has no R-matrix '" + name + "'");
    }
    const StarStructure& star_on(const std::string& module_name) const {
        for (const auto& s : stars)
            if (s.module.name == module_name) return s;
        throw Error("fixture has no star structure on '" + module_name + "'");
    }
    const InnerProduct& gram_on(const std::string& module_name) const {
        for (const auto& g : grams)
            if (g.module.name == module_name) return g;
        throw Error("fixture has no gram on '" + module_name + "'");
    }
};

namespace detail {

inline Vec basis_vec(size_t d, size_t i, const Scalar& c = Scalar(1)) {
    Vec v(d, Scalar(0));
    v[i] = c;
    return v;
}

inline HModule named(HModule m, const std::string& n) {
    m.name = n;
    return m;
}

inline HModule character_module(HopfPtr H, const std::string& name, const std::vector<Scalar>& values) {
    HModule m{H, name, 1, {}};
    for (const auto& v : values) m.action.push_back(Matrix{{v}});
    verify_module(m).throw_if_failed();
    return m;
}

}  // namespace detail

/// one-dimensional Hopf *-algebra (the ground field), over Q(zeta_order)
inline FixtureBundle fixture_trivial(unsigned scalar_order = 1) {
    auto H = std::make_shared<HopfStarAlgebra>();
    H->name = "trivial";
    H->scalar_order = scalar_order;
    H->dim = 1;
    H->mult = {Vec{Scalar(1)}};
    H->unit = {Scalar(1)};
    H->coprod = {{CoprodTerm{Scalar(1), 0, 0}}};
    H->counit = {Scalar(1)};
    H->antipode = Matrix::identity(1);
    H->star = Matrix::identity(1);
    verify_hopf_star(*H).throw_if_failed();

    FixtureBundle b;
    b.algebra = H;
    b.modules.push_back(trivial_module(H));
    b.stars.push_back({b.modules[0], Matrix::identity(1)});
    verify_star_module(b.stars[0]).throw_if_failed();
    b.grams.push_back({b.modules[0], Matrix::identity(1)});
    verify_inner_product(b.grams[0]).throw_if_failed();
    b.rmatrices.push_back({H, "R_unit", Matrix::identity(1), Matrix::identity(1)});
    verify_quasitriangular(*H, b.rmatrices[0]).throw_if_failed();
    return b;
}

/// group algebra of Z/n with g^k* = g^{-k}; characters as modules
inline FixtureBundle fixture_group_zn(unsigned n) {
    if (n == 0) throw UnknownFixture("group_zn needs n >= 1");
    auto H = std::make_shared<HopfStarAlgebra>();
    H->name = "group_z" + std::to_string(n);
    H->scalar_order = n == 1 ? 1 : n;
    H->dim = n;
    H->mult.assign(n * n, Vec());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) H->mult[i * n + j] = detail::basis_vec(n, (i + j) % n);
    H->unit = detail::basis_vec(n, 0);
    H->coprod.resize(n);
    for (size_t i = 0; i < n; ++i) H->coprod[i] = {CoprodTerm{Scalar(1), i, i}};
    H->counit = Vec(n, Scalar(1));
    H->antipode = Matrix(n, n);
    H->star = Matrix(n, n);
    for (size_t i = 0; i < n; ++i) {
        H->antipode((n - i) % n, i) = Scalar(1);
        H->star((n - i) % n, i) = Scalar(1);
    }
    verify_hopf_star(*H).throw_if_failed();

    FixtureBundle b;
    b.algebra = H;
    b.modules.push_back(trivial_module(H));
    for (unsigned j = 1; j < std::min(n, 3u); ++j) {
        std::vector<Scalar> vals;
        for (unsigned k = 0; k < n; ++k) vals.push_back(Scalar::root_of_unity_power(n, (j * k) % n));
        b.modules.push_back(detail::character_module(H, "chi" + std::to_string(j), vals));
    }
    if (n >= 3) {
        HModule pair = detail::named(direct_sum_module(b.module("chi1"), b.module("chi2")), "chi1+chi2");
        verify_module(pair).throw_if_failed();
        b.modules.push_back(pair);
    } else if (n == 2) {
        b.modules.back().name = "sign";
        HModule pair = detail::named(direct_sum_module(b.module("sign"), b.module("trivial")), "sign+trivial");
        verify_module(pair).throw_if_failed();
        b.modules.push_back(pair);
    }

    for (const auto& m : b.modules) {
        if (m.dim == 1) {
            StarStructure s{m, Matrix::identity(1)};
            if (verify_star_module(s).all_pass()) b.stars.push_back(std::move(s));
            InnerProduct g{m, Matrix::identity(1)};
            if (verify_inner_product(g).all_pass()) b.grams.push_back(std::move(g));
        }
    }
    if (n == 2) {
        const HModule& pair = b.module("sign+trivial");
        StarStructure s{pair, Matrix::identity(2)};
        verify_star_module(s).throw_if_failed();
        b.stars.push_back(std::move(s));
        InnerProduct g{pair, Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}}};
        verify_inner_product(g).throw_if_failed();
        b.grams.push_back(std::move(g));
    }
    if (n >= 3) {
        const HModule& pair = b.module("chi1+chi2");
        // conj(chi_j) = chi_{-j}, so the star exchanges the two summands
        StarStructure s{pair, Matrix{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}};
        if (verify_star_module(s).all_pass()) b.stars.push_back(std::move(s));
        InnerProduct g{pair, Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(3)}}};
        verify_inner_product(g).throw_if_failed();
        b.grams.push_back(std::move(g));
    }

    {
        Matrix unit_grid(n, n);
        unit_grid(0, 0) = Scalar(1);
        b.rmatrices.push_back({H, "R_unit", unit_grid, unit_grid});
        verify_quasitriangular(*H, b.rmatrices.back()).throw_if_failed();
    }
    if (n == 2) {
        // R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g); self-inverse
        Scalar half(Rational(1, 2));
        Matrix grid(2, 2);
        grid(0, 0) = half;
        grid(0, 1) = half;
        grid(1, 0) = half;
        grid(1, 1) = -half;
        b.rmatrices.push_back({H, "R_z2", grid, r_matrix_generic_inverse(*H, grid)});
        verify_quasitriangular(*H, b.rmatrices.back()).throw_if_failed();
    }
    if (n >= 3) {
        // Fourier R-matrix (1/n) sum zeta^{-jk} g^j (x) g^k; braids chi_a (x) chi_b
        // by zeta^{ab}. Inverse real but not real for n >= 3.
        Matrix grid(n, n);
        Rational inv_n(1, n);
        inv_n.canonicalize();
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                grid(j, k) = Scalar(inv_n) * Scalar::root_of_unity_power(n, (n - (j * k) % n) % n);
        b.rmatrices.push_back({H, "R_fourier", grid, r_matrix_generic_inverse(*H, grid)});
        verify_quasitriangular(*H, b.rmatrices.back()).throw_if_failed();
    }
    return b;
}

/// Sweedler's four-dimensional Hopf *-algebra, basis {1, g, x, gx}, with the
/// one-parameter family of R-matrices R_lambda; everything validated on build
inline FixtureBundle fixture_sweedler(const Rational& lambda) {
    const size_t d = 4;
    auto H = std::make_shared<HopfStarAlgebra>();
    H->name = "sweedler";
    H->scalar_order = 1;
    H->dim = d;
    // indices: 0 = 1, 1 = g, 2 = x, 3 = gx; relations g^2 = 1, x^2 = 0, xg = -gx
    auto mul_basis = [&](size_t i, size_t j) -> Vec {
        // write each basis element as (eps, k): g^eps x^k with k in {0,1}
        auto split = [](size_t b) { return std::pair<int, int>{(b == 1 || b == 3) ? 1 : 0, (b >= 2) ? 1 : 0}; };
        auto [e1, k1] = split(i);
        auto [e2, k2] = split(j);
        if (k1 + k2 == 2) return Vec(4, Scalar(0));  // x^2 = 0
        // g^e1 x^k1 g^e2 x^k2 = (-1)^(k1 e2) g^(e1+e2) x^(k1+k2)
        int sign = (k1 == 1 && e2 == 1) ? -1 : 1;
        int e = (e1 + e2) % 2, k = k1 + k2;
        size_t idx = static_cast<size_t>(k == 0 ? e : 2 + e);
        return detail::basis_vec(4, idx, Scalar(sign));
    };
    H->mult.assign(d * d, Vec());
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) H->mult[i * d + j] = mul_basis(i, j);
    H->unit = detail::basis_vec(d, 0);
    H->coprod.resize(d);
    H->coprod[0] = {CoprodTerm{Scalar(1), 0, 0}};
    H->coprod[1] = {CoprodTerm{Scalar(1), 1, 1}};
    // Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(x)gx
    H->coprod[2] = {CoprodTerm{Scalar(1), 2, 0}, CoprodTerm{Scalar(1), 1, 2}};
    H->coprod[3] = {CoprodTerm{Scalar(1), 3, 1}, CoprodTerm{Scalar(1), 0, 3}};
    H->counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    H->antipode = Matrix(d, d);
    H->antipode(0, 0) = Scalar(1);
    H->antipode(1, 1) = Scalar(1);
    H->antipode(3, 2) = Scalar(-1);
    H->antipode(2, 3) = Scalar(1);
    // 1* = 1, g* = g, x* = x, (gx)* = -gx
    H->star = Matrix(d, d);
    H->star(0, 0) = Scalar(1);
    H->star(1, 1) = Scalar(1);
    H->star(2, 2) = Scalar(1);
    H->star(3, 3) = Scalar(-1);
    verify_hopf_star(*H).throw_if_failed();

    FixtureBundle b;
    b.algebra = H;
    b.modules.push_back(trivial_module(H));
    b.modules.push_back(detail::character_module(H, "chi", {Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}));
    {
        // two-dimensional module: g -> diag(1,-1), x -> E_{01}
        HModule v2{H, "V2", 2, {}};
        v2.action.push_back(Matrix::identity(2));
        v2.action.push_back(Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
        v2.action.push_back(Matrix{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}});
        Matrix gx = v2.action[1] * v2.action[2];
        v2.action.push_back(gx);
        verify_module(v2).throw_if_failed();
        b.modules.push_back(std::move(v2));
    }
    {
        HModule pair = detail::named(direct_sum_module(b.module("chi"), b.module("trivial")), "chi+trivial");
        verify_module(pair).throw_if_failed();
        b.modules.push_back(pair);
    }

    for (const char* nm : {"trivial", "chi"}) {
        StarStructure s{b.module(nm), Matrix::identity(1)};
        verify_star_module(s).throw_if_failed();
        b.stars.push_back(std::move(s));
        InnerProduct g{b.module(nm), Matrix::identity(1)};
        verify_inner_product(g).throw_if_failed();
        b.grams.push_back(std::move(g));
    }
    {
        StarStructure s{b.module("V2"), Matrix::identity(2)};
        verify_star_module(s).throw_if_failed();
        b.stars.push_back(std::move(s));
    }
    {
        StarStructure s{b.module("chi+trivial"), Matrix::identity(2)};
        verify_star_module(s).throw_if_failed();
        b.stars.push_back(std::move(s));
        InnerProduct g{b.module("chi+trivial"), Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}}};
        verify_inner_product(g).throw_if_failed();
        b.grams.push_back(std::move(g));
    }
    {
        // a genuinely complex Hermitian gram over Q(i)
        HModule cc = detail::named(direct_sum_module(b.module("chi"), b.module("chi")), "chi+chi");
        verify_module(cc).throw_if_failed();
        b.modules.push_back(cc);
        StarStructure s{b.module("chi+chi"), Matrix::identity(2)};
        verify_star_module(s).throw_if_failed();
        b.stars.push_back(std::move(s));
        Scalar im = Scalar::root_of_unity(4);
        InnerProduct g{b.module("chi+chi"), Matrix{{Scalar(2), im}, {-im, Scalar(2)}}};
        verify_inner_product(g).throw_if_failed();
        b.grams.push_back(std::move(g));
    }

    {
        // R_lambda = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g)
        //          + lambda/2 (x(x)x - x(x)gx + gx(x)x + gx(x)gx)
        Scalar half(Rational(1, 2));
        Scalar lh = Scalar(lambda) * half;
        Matrix grid(d, d);
        grid(0, 0) = half;
        grid(0, 1) = half;
        grid(1, 0) = half;
        grid(1, 1) = -half;
        grid(2, 2) = lh;
        grid(2, 3) = -lh;
        grid(3, 2) = lh;
        grid(3, 3) = lh;
        std::string nm = "R_" + lambda.get_num().get_str();
        if (lambda.get_den() != 1) nm += "_" + lambda.get_den().get_str();
        b.rmatrices.push_back({H, nm, grid, r_matrix_generic_inverse(*H, grid)});
        verify_quasitriangular(*H, b.rmatrices.back()).throw_if_failed();
    }
    return b;
}

/// fixture registry: trivial | group_z2 | group_z3 | group_zn:<n> | sweedler(<rational>)
inline FixtureBundle fixture(const std::string& name) {
    if (name == "trivial") return fixture_trivial();
    if (name.rfind("group_zn:", 0) == 0) {
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(name.substr(9)));
        } catch (...) {
            throw UnknownFixture("bad group order in '" + name + "'");
        }
        return fixture_group_zn(n);
    }
    if (name.rfind("group_z", 0) == 0) {
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(name.substr(7)));
        } catch (...) {
            throw UnknownFixture("bad group order in '" + name + "'");
        }
        return fixture_group_zn(n);
    }
    if (name.rfind("sweedler(", 0) == 0 && name.back() == ')') {
        Rational lambda;
        try {
            lambda = rational_from_string(name.substr(9, name.size() - 10));
        } catch (...) {
            throw UnknownFixture("bad lambda in '" + name + "'");
        }
        return fixture_sweedler(lambda);
    }
    throw UnknownFixture("unknown fixture '" + name + "'");
}

}  // namespace hopfstar
