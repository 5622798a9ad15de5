#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfstar/fixtures.hpp"

using namespace hopfstar;

namespace {

Matrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, unsigned order) {
    std::uniform_int_distribution<int> entry(-3, 3);
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Scalar s(entry(rng));
            if (order > 1) s = s + Scalar(entry(rng)) * Scalar::root_of_unity(order);
            m(r, c) = s;
        }
    return m;
}

}  // namespace

TEST_CASE("identity gram on the trivial and sign modules") {
    FixtureBundle b = fixture("group_z2");
    CHECK(verify_inner_product(b.module("trivial"), Matrix::identity(1)).all_pass());
    CHECK(verify_inner_product(b.module("sign"), Matrix::identity(1)).all_pass());
}

TEST_CASE("diag(1,-1) fails positivity with a minor witness") {
    FixtureBundle b = fixture("group_z2");
    Matrix g{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
    Report rep = verify_inner_product(b.module("sign+trivial"), g);
    CHECK(rep.failed("positive-definite"));
    CHECK(rep.passed("conjugate-symmetric"));
    const Check* c = rep.find("positive-definite");
    REQUIRE(c != nullptr);
    CHECK(c->witness.find("minor 2") != std::string::npos);
}

TEST_CASE("a non-invariant gram is flagged") {
    FixtureBundle b = fixture("group_z3");
    Matrix g{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(3)}};
    Report rep = verify_inner_product(b.module("chi1+chi2"), g);
    CHECK(rep.failed("h-invariant"));
}

TEST_CASE("the complex fixture gram is Hermitian, positive, invariant") {
    FixtureBundle b = fixture("sweedler(1)");
    const auto& g = b.gram_on("chi+chi");
    Report rep = verify_inner_product(g);
    CHECK(rep.all_pass());
}

TEST_CASE("solved gram spaces: trivial, sign, V2") {
    FixtureBundle z2 = fixture("group_z2");
    CHECK(solve_invariant_grams(z2.module("trivial")).size() == 1);
    CHECK(solve_invariant_grams(z2.module("sign")).size() == 1);
    FixtureBundle sw = fixture("sweedler(1)");
    auto v2 = solve_invariant_grams(sw.module("V2"));
    // invariance forces G = diag(0, d): a 1-dim space with no positive member
    REQUIRE(v2.size() == 1);
    CHECK(v2[0](0, 0).is_zero());
    CHECK(v2[0](0, 1).is_zero());
    CHECK(v2[0](1, 0).is_zero());
    CHECK_FALSE(verify_inner_product(sw.module("V2"), v2[0]).all_pass());
}

TEST_CASE("solved gram space over Q(i) is Hermitian") {
    FixtureBundle sw = fixture("sweedler(1)");
    auto basis = solve_invariant_grams(sw.module("chi+chi"), 4);
    CHECK(basis.size() == 4);  // hermitian 2x2 over Q(i): rationally 4-dimensional
    for (const auto& g : basis) CHECK(g.conj_entries().transpose() == g);
    // the fixture gram lies in the solved space
    std::vector<Vec> rows;
    for (const auto& g : basis) rows.push_back(vec_rowmajor(g));
    CHECK(in_span(row_space_basis(Matrix::from_rows(rows)), vec_rowmajor(sw.gram_on("chi+chi").gram)));
}

TEST_CASE("mu is a module isomorphism and satisfies naturality for isometries") {
    for (const char* fx : {"group_z2", "group_z3", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& g : b.grams) {
            ModuleMap mu = gram_dual_iso(g.module, g.gram);
            CHECK(mu.matrix == g.gram.transpose());
            // identity is an isometry; naturality square is exact
            ModuleMap id{g.module, g.module, Matrix::identity(g.module.dim)};
            CHECK(check_gram_dual_naturality(id, g.gram, g.gram).all_pass());
        }
    }
}

TEST_CASE("mu rejects a non-inner-product") {
    FixtureBundle b = fixture("group_z2");
    Matrix g{{Scalar(-1)}};
    CHECK_THROWS_AS(gram_dual_iso(b.module("sign"), g), NotInnerProduct);
}

TEST_CASE("a nontrivial isometry: the swap on chi+chi") {
    FixtureBundle sw = fixture("sweedler(1)");
    const auto& g = sw.gram_on("chi+chi");
    // swap is a module map; it is an isometry iff it preserves G
    Matrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    Matrix moved = swap.conj_entries().transpose() * g.gram * swap;
    ModuleMap t{g.module, g.module, swap};
    Report rep = check_gram_dual_naturality(t, moved, g.gram);
    CHECK(rep.all_pass());
}

TEST_CASE("adjoint of the identity and of a scalar map") {
    FixtureBundle b = fixture("trivial");
    Matrix g = Matrix::identity(1);
    CHECK(adjoint(Matrix::identity(1), g, g).is_identity());
    Scalar im = Scalar::root_of_unity(4);
    CHECK(adjoint(Matrix{{im}}, g, g) == Matrix{{-im}});
}

TEST_CASE("adjoint defining relation and involutivity on random maps") {
    std::mt19937 rng(2024);
    FixtureBundle sw = fixture("sweedler(1)");
    const auto& g = sw.gram_on("chi+chi");
    for (int trial = 0; trial < 20; ++trial) {
        Matrix t = random_matrix(rng, 2, 2, 4);
        Matrix adj = adjoint(t, g.gram, g.gram);
        CHECK(adj.conj_entries().transpose() * g.gram == g.gram * t);
        CHECK(adjoint(adj, g.gram, g.gram) == t);
    }
}

TEST_CASE("adjoint is contravariant: (UT)^dag = T^dag U^dag") {
    std::mt19937 rng(2025);
    FixtureBundle b = fixture("group_z2");
    const auto& g = b.gram_on("sign+trivial");
    for (int trial = 0; trial < 10; ++trial) {
        Matrix t = random_matrix(rng, 2, 2, 1), u = random_matrix(rng, 2, 2, 1);
        CHECK(adjoint(u * t, g.gram, g.gram) == adjoint(t, g.gram, g.gram) * adjoint(u, g.gram, g.gram));
    }
}

TEST_CASE("adjoint module properties hold for fixture Hermitian modules") {
    std::mt19937 rng(2026);
    for (const char* fx : {"group_z2", "group_z3", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& g : b.grams) {
            Matrix t = random_matrix(rng, g.module.dim, g.module.dim, 1);
            CHECK(check_adjoint_module_props(g.module, g.module, t, g.gram, g.gram).all_pass());
            CHECK(check_adjoint_module_props(g.module, g.module, Matrix(g.module.dim, g.module.dim), g.gram, g.gram)
                      .all_pass());
        }
    }
}

TEST_CASE("adjoints of module maps are module maps, and conversely") {
    FixtureBundle b = fixture("group_z2");
    const auto& g = b.gram_on("sign+trivial");
    // a map mixing the two characters is not a module map; its adjoint is not either
    Matrix mix(2, 2);
    mix(0, 1) = Scalar(1);
    ModuleMap tf{g.module, g.module, mix};
    CHECK_FALSE(is_module_map(tf));
    ModuleMap af{g.module, g.module, adjoint(mix, g.gram, g.gram)};
    CHECK_FALSE(is_module_map(af));
    // diagonal maps are module maps, and so are their adjoints
    Matrix diag{{Scalar(3), Scalar(0)}, {Scalar(0), Scalar(5)}};
    CHECK(is_module_map({g.module, g.module, diag}));
    CHECK(is_module_map({g.module, g.module, adjoint(diag, g.gram, g.gram)}));
}

TEST_CASE("End_l(V) star algebras verify across fixtures") {
    for (const char* fx : {"trivial", "group_z2", "group_z3", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& g : b.grams) {
            auto [alg, star] = end_left_star_algebra(g.module, g.gram);
            CHECK(verify_module_algebra(alg).all_pass());
            CHECK(verify_star_algebra(alg, star.dagger).all_pass());
            CHECK(check_end_enveloping_correspondence(g.module, g.gram).all_pass());
        }
    }
}

TEST_CASE("End star on a 1-dim module is the identity") {
    FixtureBundle b = fixture("group_z2");
    auto [alg, star] = end_left_star_algebra(b.module("sign"), Matrix::identity(1));
    CHECK(alg.carrier.dim == 1);
    CHECK(star.dagger.is_identity());
}

TEST_CASE("(a |> T)^dagger twists by S(a)^* for every basis element") {
    FixtureBundle b = fixture("sweedler(1)");
    const auto& g = b.gram_on("chi+chi");
    std::mt19937 rng(7);
    Matrix t = random_matrix(rng, 2, 2, 4);
    Report rep = check_adjoint_module_props(g.module, g.module, t, g.gram, g.gram);
    CHECK(rep.passed("dagger-antimodule-identity"));
    CHECK(rep.passed("composite-formula"));
}

TEST_CASE("two out of three: trivial module round trip") {
    FixtureBundle b = fixture("trivial");
    Matrix d = Matrix::identity(1), g = Matrix::identity(1);
    TwoOutOfThree r = two_out_of_three(b.module("trivial"), &d, &g, nullptr);
    CHECK(r.form == Matrix::identity(1));
    CHECK(r.report.all_pass());
}

TEST_CASE("two out of three: derive then reproduce, exactly") {
    for (const char* fx : {"group_z2", "sweedler(1)"}) {
        FixtureBundle b = fixture(fx);
        for (const auto& g : b.grams) {
            const StarStructure* s = nullptr;
            for (const auto& st : b.stars)
                if (st.module.name == g.module.name) s = &st;
            if (!s) continue;
            TwoOutOfThree forward = two_out_of_three(g.module, &s->dagger, &g.gram, nullptr);
            CHECK(forward.report.all_pass());
            TwoOutOfThree from_form = two_out_of_three(g.module, &s->dagger, nullptr, &forward.form);
            CHECK(from_form.gram == g.gram);
            TwoOutOfThree from_gf = two_out_of_three(g.module, nullptr, &g.gram, &forward.form);
            CHECK(from_gf.star == s->dagger);
        }
    }
}

TEST_CASE("two out of three flags a non-involutive star through the form symmetry") {
    FixtureBundle b = fixture("sweedler(1)");
    const auto& g = b.gram_on("chi+chi");
    Matrix bad = Scalar(2) * Matrix::identity(2);  // not involutive
    TwoOutOfThree r = two_out_of_three(g.module, &bad, &g.gram, nullptr);
    CHECK(r.report.failed("form-star-symmetry"));
    CHECK(r.report.failed("star-involutive"));
    CHECK(r.report.passed("gram-positive-definite"));
}

TEST_CASE("two out of three input validation") {
    FixtureBundle b = fixture("group_z2");
    Matrix d = Matrix::identity(1);
    CHECK_THROWS_AS(two_out_of_three(b.module("sign"), &d, nullptr, nullptr), Error);
    Matrix zero(1, 1);
    CHECK_THROWS_AS(two_out_of_three(b.module("sign"), nullptr, &d, &zero), Inconsistent);
}
