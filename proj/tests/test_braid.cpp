#include <catch2/catch_amalgamated.hpp>

#include "hopfstar/fixtures.hpp"

using namespace hopfstar;

namespace {

RMatrix unit_rmatrix(const FixtureBundle& b) { return b.rmatrix("R_unit"); }

}  // namespace

TEST_CASE("R = 1(x)1 is quasitriangular on cocommutative fixtures") {
    for (const char* fx : {"trivial", "group_z2", "group_z3"}) {
        FixtureBundle b = fixture(fx);
        CHECK(verify_quasitriangular(*b.algebra, unit_rmatrix(b)).all_pass());
    }
}

TEST_CASE("the Z/2 R-matrix squares to the identity and verifies") {
    FixtureBundle b = fixture("group_z2");
    const RMatrix& r = b.rmatrix("R_z2");
    CHECK(verify_quasitriangular(*b.algebra, r).all_pass());
    CHECK(r.inverse == r.coeffs);  // R^2 = 1(x)1, hand expansion
}

TEST_CASE("sweedler R_lambda passes the whole suite for several lambdas") {
    for (const char* fx : {"sweedler(0)", "sweedler(1)", "sweedler(-2)"}) {
        FixtureBundle b = fixture(fx);
        CHECK(verify_quasitriangular(*b.algebra, b.rmatrices[0]).all_pass());
    }
}

TEST_CASE("a sign flip on the 1(x)g coefficient breaks coproduct reversal") {
    FixtureBundle b = fixture("sweedler(1)");
    RMatrix r = b.rmatrices[0];
    r.coeffs(0, 1) = -r.coeffs(0, 1);
    try {
        r.inverse = r_matrix_generic_inverse(*b.algebra, r.coeffs);
        Report rep = verify_quasitriangular(*b.algebra, r);
        CHECK(rep.failed("coproduct-reversal"));
    } catch (const NoInverse&) {
        SUCCEED("mutated grid lost invertibility, also a detection");
    }
}

TEST_CASE("generic inverse fallback matches the stored inverse") {
    FixtureBundle b = fixture("sweedler(-2)");
    const RMatrix& r = b.rmatrices[0];
    CHECK(r_matrix_generic_inverse(*b.algebra, r.coeffs) == r.inverse);
    Matrix zero(4, 4);
    CHECK_THROWS_AS(r_matrix_generic_inverse(*b.algebra, zero), NoInverse);
}

TEST_CASE("drinfeld element of the unit R-matrix is the unit") {
    FixtureBundle b = fixture("group_z2");
    auto [u, rep] = drinfeld_element(*b.algebra, unit_rmatrix(b));
    CHECK(u == b.algebra->unit);
    CHECK(rep.all_pass());
}

TEST_CASE("drinfeld element implements S^2 by conjugation on sweedler") {
    for (const char* fx : {"sweedler(0)", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        auto [u, rep] = drinfeld_element(*b.algebra, b.rmatrices[0]);
        CHECK(rep.all_pass());
        // u feeds the inner-iso comparison maps of the module layer
        for (const auto& v : b.modules) CHECK_NOTHROW(ssquared_inner_isos(*b.algebra, u, v));
    }
}

TEST_CASE("braiding for R = 1(x)1 is the tensor swap") {
    FixtureBundle b = fixture("group_z2");
    const HModule& s = b.module("sign");
    const HModule& t = b.module("trivial");
    CHECK(braiding(unit_rmatrix(b), s, t).matrix == swap_matrix(1, 1));
    HModule pair = b.module("sign+trivial");
    CHECK(braiding(unit_rmatrix(b), pair, pair).matrix == swap_matrix(2, 2));
}

TEST_CASE("braidings are intertwiners on 2-dim sweedler modules") {
    FixtureBundle b = fixture("sweedler(1)");
    ModuleMap psi = braiding(b.rmatrices[0], b.module("V2"), b.module("V2"));
    CHECK(psi.matrix.rows() == 4);
    CHECK(is_module_map(psi));
}

TEST_CASE("hexagons and naturality hold for fixture braidings") {
    for (const char* fx : {"group_z2", "sweedler(1)", "sweedler(-2)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& r : b.rmatrices) {
            std::vector<HModule> mods;
            for (const auto& m : b.modules)
                if (m.dim <= 2 && mods.size() < 3) mods.push_back(m);
            for (const auto& u : mods)
                for (const auto& v : mods)
                    for (const auto& w : mods) CHECK(check_braiding_coherence(r, u, v, w).all_pass());
            auto basis = intertwiners(mods[0], mods[0]);
            if (!basis.empty()) {
                ModuleMap f{mods[0], mods[0], basis[0]};
                CHECK(check_braiding_coherence(r, mods[0], mods[0], mods[0], &f, &f).all_pass());
            }
        }
    }
}

TEST_CASE("a perturbed braiding candidate fails a hexagon") {
    FixtureBundle b = fixture("sweedler(1)");
    const RMatrix& r = b.rmatrices[0];
    BraidingProvider wrong = [&r](const HModule& v, const HModule& w) {
        Matrix grid = r.coeffs;
        grid(0, 1) = grid(0, 1) + Scalar(1);  // R + 1 (x) g perturbation
        return swap_matrix(v.dim, w.dim) * tensor_action(grid, v, w);
    };
    Report rep = check_braiding_coherence(wrong, b.module("V2"), b.module("V2"), b.module("V2"));
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("conjugate braiding: both routes agree; swap case is the swap") {
    FixtureBundle z2 = fixture("group_z2");
    ModuleMap cb = conjugate_braiding(unit_rmatrix(z2), z2.module("sign"), z2.module("trivial"));
    CHECK(cb.matrix == swap_matrix(1, 1));
    const RMatrix& rnt = z2.rmatrix("R_z2");
    const HModule& s = z2.module("sign");
    CHECK_NOTHROW(conjugate_braiding(rnt, s, s));
    FixtureBundle sw = fixture("sweedler(1)");
    CHECK_NOTHROW(conjugate_braiding(sw.rmatrices[0], sw.module("V2"), sw.module("V2")));
    CHECK_NOTHROW(conjugate_braiding(sw.rmatrices[0], sw.module("V2"), sw.module("chi")));
}

TEST_CASE("the conjugate braiding is a braiding") {
    for (const char* fx : {"group_z2", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& r : b.rmatrices) {
            std::vector<HModule> mods;
            for (const auto& m : b.modules)
                if (m.dim <= 2 && mods.size() < 2) mods.push_back(m);
            const HModule& v = mods.back();
            auto basis = intertwiners(v, v);
            if (!basis.empty()) {
                ModuleMap f{v, v, basis[0]};
                CHECK(check_conjugate_braiding_is_braiding(r, mods, &f, &f).all_pass());
            } else {
                CHECK(check_conjugate_braiding_is_braiding(r, mods).all_pass());
            }
        }
    }
}

TEST_CASE("reality classification") {
    FixtureBundle z2 = fixture("group_z2");
    CHECK(classify_reality(*z2.algebra, unit_rmatrix(z2)) == RReality::both);
    // R_z2 is symmetric, star-fixed, and self-inverse: both as well
    CHECK(classify_reality(*z2.algebra, z2.rmatrix("R_z2")) == RReality::both);
    for (const char* fx : {"sweedler(0)", "sweedler(1)", "sweedler(-2)"}) {
        FixtureBundle b = fixture(fx);
        RReality cls = classify_reality(*b.algebra, b.rmatrices[0]);
        CHECK((cls == RReality::real || cls == RReality::both));
    }
    // the sweedler family is triangular (R21 = R^{-1}), so real implies both
    FixtureBundle sw = fixture("sweedler(1)");
    CHECK(classify_reality(*sw.algebra, sw.rmatrices[0]) == RReality::both);
    Vec lhs = tensor_mul(*sw.algebra, 2, grid_to_tensor(sw.rmatrices[0].coeffs.transpose()),
                         grid_to_tensor(sw.rmatrices[0].coeffs));
    CHECK(lhs == tensor_unit(*sw.algebra, 2));
}

TEST_CASE("reality consequences across fixture module pairs") {
    for (const char* fx : {"group_z2", "sweedler(1)", "sweedler(-2)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& r : b.rmatrices)
            for (const auto& v : b.modules)
                for (const auto& w : b.modules) {
                    if (v.dim > 2 || w.dim > 2) continue;
                    const StarStructure* s = nullptr;
                    if (v.name == w.name)
                        for (const auto& st : b.stars)
                            if (st.module.name == v.name) s = &st;
                    CHECK(check_reality_consequences(r, v, w, s).all_pass());
                }
    }
}

TEST_CASE("psi_VV is a star morphism for real R and fixture star modules") {
    FixtureBundle b = fixture("sweedler(1)");
    const auto& s = b.star_on("V2");
    Report rep = check_reality_consequences(b.rmatrices[0], s.module, s.module, &s);
    CHECK(rep.passed("psi-vv-star-morphism"));
    CHECK(rep.passed("proof-identity-r21"));
    CHECK(rep.passed("proof-identity-rstar"));
}

TEST_CASE("the cyclic Fourier R-matrix is inverse real but not real") {
    FixtureBundle b = fixture("group_z3");
    const RMatrix& r = b.rmatrix("R_fourier");
    CHECK(verify_quasitriangular(*b.algebra, r).all_pass());
    CHECK(classify_reality(*b.algebra, r) == RReality::inverse_real);
    // conj braiding is the inverse braiding on every pair
    for (const auto& v : b.modules)
        for (const auto& w : b.modules) {
            if (v.dim > 2 || w.dim > 2) continue;
            CHECK(conjugate_braiding(r, v, w).matrix == braiding(r, w, v).matrix.inverse());
        }
    // it braids characters by the pairing zeta^{ab}
    Matrix psi = braiding(r, b.module("chi1"), b.module("chi2")).matrix;
    CHECK(psi == Matrix{{Scalar::root_of_unity_power(3, 2)}});
}

TEST_CASE("neither-real R-matrices raise NotApplicable") {
    FixtureBundle b = fixture("group_z3");
    // 2 zeta_3 (1 (x) 1): the star sends it to 2 zeta_3^2, which is neither
    // the flip (2 zeta_3) nor the inverse (zeta_3^2 / 2)
    RMatrix r = unit_rmatrix(b);
    r.coeffs(0, 0) = Scalar(2) * Scalar::root_of_unity(3);
    r.inverse(0, 0) = Scalar(Rational(1, 2)) * Scalar::root_of_unity_power(3, 2);
    CHECK(classify_reality(*b.algebra, r) == RReality::neither);
    CHECK_THROWS_AS(check_reality_consequences(r, b.module("trivial"), b.module("trivial"), nullptr), NotApplicable);
}

TEST_CASE("qybe holds both in H(x)3 and as 3-leg operator matrices") {
    FixtureBundle b = fixture("sweedler(-2)");
    const RMatrix& r = b.rmatrices[0];
    const HModule& v = b.module("V2");
    Matrix act = tensor_action(r.coeffs, v, v);
    Matrix r12 = kron(act, Matrix::identity(2));
    Matrix r23 = kron(Matrix::identity(2), act);
    Matrix r13(8, 8);
    {
        // R13 = (swap (x) id)(id (x) R)(swap (x) id) on V (x) V (x) V
        Matrix swap12 = kron(swap_matrix(2, 2), Matrix::identity(2));
        r13 = swap12 * r23 * swap12;
    }
    CHECK(r12 * r13 * r23 == r23 * r13 * r12);
}
