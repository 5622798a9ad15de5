// hopfstar CLI: validate definition files, run named proposition suites,
// construct derived objects, emit machine-readable reports.
//
// exit codes: 0 all checks pass, 1 a check failed, 2 input error

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "hopfstar/hopfstar.hpp"

namespace hs = hopfstar;
using hs::io::json;

namespace {

const std::vector<std::string> kDefaultFixtures = {"trivial",     "group_z2",    "group_z3",
                                                   "sweedler(0)", "sweedler(1)", "sweedler(-2)"};

struct SuiteContext {
    std::vector<std::pair<std::string, hs::FixtureBundle>> fixtures;
};

SuiteContext make_context(const std::vector<std::string>& names) {
    SuiteContext ctx;
    for (const auto& n : names) ctx.fixtures.emplace_back(n, hs::fixture(n));
    return ctx;
}

SuiteContext make_context_from_workspace(const std::string& dir) {
    hs::Workspace ws;
    ws.load_directory(dir);
    SuiteContext ctx;
    for (auto& b : ws.bundles()) {
        std::string name = b.algebra->name;
        ctx.fixtures.emplace_back(name, std::move(b));
    }
    if (ctx.fixtures.empty()) throw hs::ParseError("workspace '" + dir + "' contains no algebras");
    return ctx;
}

// deterministic small random scalars for the randomized suites
struct ScalarGen {
    std::mt19937 rng{20240911u};
    hs::Scalar small_rational() {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 3);
        hs::Rational q(num(rng), den(rng));
        q.canonicalize();
        return hs::Scalar(q);
    }
    hs::Matrix matrix(size_t rows, size_t cols, unsigned order = 1) {
        hs::Matrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                hs::Scalar s = small_rational();
                if (order > 1) s = s + small_rational() * hs::Scalar::root_of_unity(order);
                m(r, c) = s;
            }
        return m;
    }
};

hs::Report suite_hopf_axioms(const SuiteContext& ctx) {
    hs::Report rep("suite hopf-axioms");
    for (const auto& [name, b] : ctx.fixtures) rep.merge(hs::verify_hopf_star(*b.algebra));
    return rep;
}

hs::Report suite_antipode_inverse(const SuiteContext& ctx) {
    hs::Report rep("suite antipode-inverse");
    for (const auto& [name, b] : ctx.fixtures) {
        const auto& H = *b.algebra;
        hs::Matrix sinv = hs::antipode_inverse(H);
        rep.require(name + ": S Sinv = id", (H.antipode * sinv).is_identity() && (sinv * H.antipode).is_identity(),
                    "composite is not the identity");
        hs::Matrix ssss = H.star * H.antipode.conj_entries() * H.star.conj_entries() * H.antipode;
        rep.require(name + ": *S*S = id", ssss.is_identity(), ssss.to_string());
    }
    return rep;
}

hs::Report suite_dual_double(const SuiteContext& ctx) {
    hs::Report rep("suite dual-double");
    for (const auto& [name, b] : ctx.fixtures) {
        for (const auto& v : b.modules) {
            try {
                hs::evaluation_maps(v);
                hs::double_dual_embedding(v);
                rep.require(name + "/" + v.name + ": eval + double dual", true, "");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + v.name + ": eval + double dual", false, e.what());
            }
        }
        for (const auto& v : b.modules)
            for (const auto& w : b.modules) {
                if (v.dim * w.dim > 4) continue;
                try {
                    hs::hom_evaluation_maps(v, w);
                    rep.require(name + ": operator evaluation " + v.name + ", " + w.name, true, "");
                } catch (const hs::Error& e) {
                    rep.require(name + ": operator evaluation " + v.name + ", " + w.name, false, e.what());
                }
            }
    }
    return rep;
}

hs::Report suite_hom_invariants(const SuiteContext& ctx) {
    hs::Report rep("suite hom-invariants");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& v : b.modules)
            for (const auto& w : b.modules) {
                if (v.dim > 4 || w.dim > 4) continue;
                rep.merge(hs::check_hom_invariants(v, w));
            }
    return rep;
}

hs::Report suite_conjugation_coherence(const SuiteContext& ctx) {
    hs::Report rep("suite conjugation-coherence");
    for (const auto& [name, b] : ctx.fixtures) {
        for (const auto& v : b.modules)
            for (const auto& w : b.modules) {
                try {
                    hs::natural_isos(v, w);
                    rep.require(name + ": isos " + v.name + ", " + w.name, true, "");
                } catch (const hs::Error& e) {
                    rep.require(name + ": isos " + v.name + ", " + w.name, false, e.what());
                }
            }
        const auto& mods = b.modules;
        for (size_t i = 0; i < mods.size() && i < 3; ++i)
            for (size_t j = 0; j < mods.size() && j < 3; ++j)
                for (size_t k = 0; k < mods.size() && k < 3; ++k)
                    rep.merge(hs::check_conj_coherence(mods[i], mods[j], mods[k]));
        // naturality squares with intertwiner pairs where available
        for (const auto& v : mods)
            for (const auto& w : mods) {
                auto basis = hs::intertwiners(v, w);
                if (basis.empty()) continue;
                hs::ModuleMap f{v, w, basis[0]};
                rep.merge(hs::check_conj_coherence(v, v, w, &f, &f));
                break;
            }
    }
    return rep;
}

hs::Report suite_tilde_relations(const SuiteContext& ctx) {
    hs::Report rep("suite tilde-relations");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& v : b.modules) rep.merge(hs::check_tilde_relations(v));
    return rep;
}

hs::Report suite_conjugate_algebra(const SuiteContext& ctx) {
    hs::Report rep("suite conjugate-algebra");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& g : b.grams) {
            auto [alg, star] = hs::end_left_star_algebra(g.module, g.gram);
            rep.merge(hs::verify_module_algebra(hs::conjugate_algebra(alg)));
            rep.merge(hs::check_double_conjugate_algebra(alg));
        }
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& v : b.modules)
            if (v.dim == 2) {
                hs::TruncatedTensorAlgebra t = hs::truncated_tensor_algebra(v, 2);
                rep.merge(hs::verify_module_algebra(t.algebra));
                rep.merge(hs::verify_module_algebra(hs::conjugate_algebra(t.algebra)));
                rep.merge(hs::check_double_conjugate_algebra(t.algebra));
                break;
            }
    return rep;
}

hs::Report suite_kappa(const SuiteContext& ctx) {
    hs::Report rep("suite kappa");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& v : b.modules) {
            if (v.dim != 2) continue;
            rep.merge(hs::check_conj_tensor_algebra_iso(v, 3));
            break;
        }
    return rep;
}

hs::Report suite_star_lift(const SuiteContext& ctx) {
    hs::Report rep("suite star-lift");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& s : b.stars) {
            if (s.module.dim > 2) continue;
            unsigned n = 3;
            hs::StarStructure big = hs::tensor_algebra_star(s.module, s.dagger, n);
            hs::TruncatedTensorAlgebra t = hs::truncated_tensor_algebra(s.module, n);
            bool blocks_match = true;
            for (unsigned k = 1; k <= n && blocks_match; ++k) {
                hs::StarStructure pk = hs::tensor_power_star(s.module, s.dagger, k);
                for (size_t r = 0; r < pk.module.dim && blocks_match; ++r)
                    for (size_t c = 0; c < pk.module.dim; ++c)
                        if (big.dagger(t.offset[k] + r, t.offset[k] + c) != pk.dagger(r, c)) {
                            blocks_match = false;
                            break;
                        }
            }
            rep.require(name + "/" + s.module.name + ": graded star matches tensor powers", blocks_match,
                        "per-degree blocks disagree with tensor_power_star");
            hs::ModuleMap incl{s.module, t.algebra.carrier, hs::Matrix(t.algebra.carrier.dim, s.module.dim)};
            for (size_t j = 0; j < s.module.dim; ++j) incl.matrix(t.offset[1] + j, j) = hs::Scalar(1);
            try {
                hs::star_universal_lift(t, incl, t.algebra, s.dagger, big.dagger);
                rep.require(name + "/" + s.module.name + ": universal lift is a *-morphism", true, "");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + s.module.name + ": universal lift is a *-morphism", false, e.what());
            }
        }
    return rep;
}

hs::Report suite_star_quotients(const SuiteContext& ctx) {
    hs::Report rep("suite star-quotients");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& s : b.stars) {
            if (s.module.dim < 2) continue;
            // quotient by the kernel of a *-module projection where available
            std::vector<hs::Vec> zero;
            try {
                hs::StarQuotient full = hs::quotient_star(s.module, s.dagger, zero);
                rep.require(name + "/" + s.module.name + ": quotient by 0 returns V",
                            full.module.dim == s.module.dim, "dimension changed");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + s.module.name + ": quotient by 0 returns V", false, e.what());
            }
            std::vector<hs::Vec> all;
            for (size_t i = 0; i < s.module.dim; ++i) all.push_back(hs::unit_vec(s.module.dim, i));
            try {
                hs::StarQuotient none = hs::quotient_star(s.module, s.dagger, all);
                rep.require(name + "/" + s.module.name + ": quotient by V is zero", none.module.dim == 0,
                            "dimension nonzero");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + s.module.name + ": quotient by V is zero", false, e.what());
            }
        }
    return rep;
}

hs::Report suite_inner_adjoint(const SuiteContext& ctx) {
    hs::Report rep("suite inner-adjoint");
    ScalarGen gen;
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& g : b.grams) {
            const hs::HModule& v = g.module;
            rep.merge(hs::verify_inner_product(v, g.gram));
            try {
                hs::gram_dual_iso(v, g.gram);
                rep.require(name + "/" + v.name + ": mu is an isomorphism", true, "");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + v.name + ": mu is an isomorphism", false, e.what());
            }
            bool defining = true, involutive = true;
            for (int trial = 0; trial < 20 && defining && involutive; ++trial) {
                hs::Matrix t = gen.matrix(v.dim, v.dim, trial % 2 ? 4u : 1u);
                hs::Matrix adj = hs::adjoint(t, g.gram, g.gram);
                if (adj.conj_entries().transpose() * g.gram != g.gram * t) defining = false;
                if (hs::adjoint(adj, g.gram, g.gram) != t) involutive = false;
            }
            rep.require(name + "/" + v.name + ": 20 random adjoints satisfy the defining relation", defining,
                        "defining relation violated");
            rep.require(name + "/" + v.name + ": dagger is involutive", involutive, "(T^dag)^dag != T");
            rep.merge(hs::check_adjoint_module_props(v, v, gen.matrix(v.dim, v.dim), g.gram, g.gram));
            try {
                auto [alg, star] = hs::end_left_star_algebra(v, g.gram);
                rep.require(name + "/" + v.name + ": End_l(V) is a *-algebra", true, "");
                rep.merge(hs::check_end_enveloping_correspondence(v, g.gram));
            } catch (const hs::Error& e) {
                rep.require(name + "/" + v.name + ": End_l(V) is a *-algebra", false, e.what());
            }
        }
    return rep;
}

hs::Report suite_two_out_of_three(const SuiteContext& ctx) {
    hs::Report rep("suite two-out-of-three");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& g : b.grams) {
            const hs::StarStructure* s = nullptr;
            for (const auto& st : b.stars)
                if (st.module.name == g.module.name) s = &st;
            if (!s) continue;
            try {
                hs::TwoOutOfThree from_dg = hs::two_out_of_three(g.module, &s->dagger, &g.gram, nullptr);
                rep.merge(from_dg.report);
                hs::TwoOutOfThree back = hs::two_out_of_three(g.module, &s->dagger, nullptr, &from_dg.form);
                rep.require(name + "/" + g.module.name + ": (D,h) reproduces G", back.gram == g.gram,
                            hs::diff_witness("gram round trip", back.gram, g.gram));
                hs::TwoOutOfThree third = hs::two_out_of_three(g.module, nullptr, &g.gram, &from_dg.form);
                rep.require(name + "/" + g.module.name + ": (G,h) reproduces D", third.star == s->dagger,
                            hs::diff_witness("star round trip", third.star, s->dagger));
            } catch (const hs::Error& e) {
                rep.require(name + "/" + g.module.name + ": two-out-of-three", false, e.what());
            }
        }
    return rep;
}

hs::Report suite_quasitriangular(const SuiteContext& ctx) {
    hs::Report rep("suite quasitriangular");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& r : b.rmatrices) {
            rep.merge(hs::verify_quasitriangular(*b.algebra, r));
            try {
                auto [u, drep] = hs::drinfeld_element(*b.algebra, r);
                rep.merge(drep);
                for (const auto& v : b.modules) {
                    if (v.dim > 2) continue;
                    hs::ssquared_inner_isos(*b.algebra, u, v);
                }
                rep.require(name + "/" + r.name + ": u induces the S^2 comparison isos", true, "");
            } catch (const hs::Error& e) {
                rep.require(name + "/" + r.name + ": u induces the S^2 comparison isos", false, e.what());
            }
        }
    return rep;
}

hs::Report suite_braiding_coherence(const SuiteContext& ctx) {
    hs::Report rep("suite braiding-coherence");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& r : b.rmatrices) {
            std::vector<hs::HModule> mods;
            for (const auto& m : b.modules)
                if (m.dim <= 2 && mods.size() < 3) mods.push_back(m);
            for (const auto& u : mods)
                for (const auto& v : mods)
                    for (const auto& w : mods) {
                        rep.merge(hs::check_braiding_coherence(r, u, v, w));
                        rep.merge(hs::check_braiding_coherence(hs::conjugate_braiding_of(r), u, v, w, nullptr,
                                                               nullptr, "conjugate braiding"));
                    }
            rep.merge(hs::check_conjugate_braiding_is_braiding(r, mods));
        }
    return rep;
}

hs::Report suite_reality(const SuiteContext& ctx) {
    hs::Report rep("suite reality");
    for (const auto& [name, b] : ctx.fixtures)
        for (const auto& r : b.rmatrices) {
            hs::RReality cls = hs::classify_reality(*b.algebra, r);
            rep.notes.push_back(name + "/" + r.name + " classified " + hs::to_cstring(cls));
            if (cls == hs::RReality::neither) continue;
            for (const auto& v : b.modules)
                for (const auto& w : b.modules) {
                    if (v.dim > 2 || w.dim > 2) continue;
                    const hs::StarStructure* s = nullptr;
                    for (const auto& st : b.stars)
                        if (st.module.name == v.name && v.name == w.name) s = &st;
                    rep.merge(hs::check_reality_consequences(r, v, w, s));
                }
        }
    return rep;
}

using SuiteFn = hs::Report (*)(const SuiteContext&);

const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
    {"hopf-axioms", suite_hopf_axioms},
    {"antipode-inverse", suite_antipode_inverse},
    {"dual-double", suite_dual_double},
    {"hom-invariants", suite_hom_invariants},
    {"conjugation-coherence", suite_conjugation_coherence},
    {"tilde-relations", suite_tilde_relations},
    {"conjugate-algebra", suite_conjugate_algebra},
    {"kappa", suite_kappa},
    {"star-lift", suite_star_lift},
    {"star-quotients", suite_star_quotients},
    {"inner-adjoint", suite_inner_adjoint},
    {"two-out-of-three", suite_two_out_of_three},
    {"quasitriangular", suite_quasitriangular},
    {"braiding-coherence", suite_braiding_coherence},
    {"reality", suite_reality},
};

void emit_report(const hs::Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << hs::io::dump(hs::io::report_to_json(rep));
    else
        std::cout << rep.to_text();
}

int run_validate(const std::string& path, const std::string& workspace, const std::string& format) {
    namespace fs = std::filesystem;
    hs::Workspace ws;
    fs::path p(path);
    if (!fs::is_regular_file(p)) throw hs::ParseError("no such file: '" + path + "'");
    fs::path dir = workspace.empty() ? p.parent_path() : fs::path(workspace);
    if (!dir.empty() && fs::is_directory(dir)) ws.load_directory(dir);
    json j = hs::io::parse_file(p);
    std::string kind = j.value("kind", "");
    ws.load_json(j);  // re-registering an object already seen in the scan is fine
    hs::Report rep;
    if (kind == "algebra") {
        rep = hs::verify_hopf_star(*ws.algebra(j.at("name").get<std::string>()));
    } else if (kind == "module") {
        rep = hs::verify_module(ws.module(j.at("name").get<std::string>()));
    } else if (kind == "map") {
        const hs::ModuleMap& t = ws.map(j.at("name").get<std::string>());
        rep = hs::Report("module map: " + j.at("name").get<std::string>());
        rep.require("intertwines", hs::is_module_map(t), "matrix does not intertwine the actions");
    } else if (kind == "star") {
        const hs::StarStructure& s = ws.star(j.at("name").get<std::string>());
        rep = hs::verify_star_module(s);
    } else if (kind == "gram") {
        const hs::InnerProduct& g = ws.gram(j.at("name").get<std::string>());
        rep = hs::verify_inner_product(g);
    } else if (kind == "form") {
        std::string nm = j.at("name").get<std::string>();
        const hs::HModule& m = ws.form_module(nm);
        const hs::Matrix& h = ws.form(nm);
        rep = hs::Report("bilinear form: " + nm);
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < m.algebra->dim && ok; ++i) {
            hs::Matrix lhs = m.action[i].transpose() * h;
            hs::Matrix rhs = h * m.act(m.algebra->antipode.column(i));
            if (lhs != rhs) {
                ok = false;
                wit = hs::diff_witness("invariance at e" + std::to_string(i), lhs, rhs);
            }
        }
        rep.require("module-map", ok, wit);
    } else if (kind == "rmatrix") {
        rep = hs::verify_quasitriangular(*ws.rmatrix(j.at("name").get<std::string>()).algebra,
                                         ws.rmatrix(j.at("name").get<std::string>()));
    } else if (kind == "module_algebra") {
        rep = hs::verify_module_algebra(ws.module_algebra(j.at("name").get<std::string>()));
    } else {
        throw hs::ParseError("unknown object kind '" + kind + "'");
    }
    emit_report(rep, format);
    return rep.all_pass() ? 0 : 1;
}

int run_check(const std::string& suite, const std::vector<std::string>& fixture_names, const std::string& workspace,
              const std::string& format) {
    SuiteContext ctx = workspace.empty() ? make_context(fixture_names.empty() ? kDefaultFixtures : fixture_names)
                                         : make_context_from_workspace(workspace);
    for (const auto& [name, fn] : kSuites)
        if (name == suite) {
            hs::Report rep = fn(ctx);
            emit_report(rep, format);
            return rep.all_pass() ? 0 : 1;
        }
    std::string known;
    for (const auto& [name, fn] : kSuites) known += " " + name;
    throw hs::ParseError("unknown suite '" + suite + "'; available:" + known);
}

int run_report(const std::string& format, const std::vector<std::string>& fixture_names) {
    SuiteContext ctx = make_context(fixture_names.empty() ? kDefaultFixtures : fixture_names);
    bool all = true;
    json array = json::array();
    for (const auto& [name, fn] : kSuites) {
        hs::Report rep = fn(ctx);
        all = all && rep.all_pass();
        if (format == "json")
            array.push_back(hs::io::report_to_json(rep));
        else
            std::cout << rep.to_text() << "\n";
    }
    if (format == "json") std::cout << hs::io::dump(array);
    return all ? 0 : 1;
}

int run_construct(const std::string& what, const std::vector<std::string>& inputs,
                  const std::vector<std::string>& fixture_names, const std::string& workspace,
                  const std::string& out, const std::string& out_name, unsigned degree) {
    hs::Workspace ws;
    for (const auto& f : fixture_names) ws.add_fixture(hs::fixture(f));
    if (!workspace.empty()) ws.load_directory(workspace);
    auto need = [&](size_t n) {
        if (inputs.size() != n)
            throw hs::ParseError("construction '" + what + "' needs " + std::to_string(n) + " input names");
    };
    json out_json;
    if (what == "conjugate") {
        need(1);
        hs::HModule c = hs::conjugate_module(ws.module(inputs[0]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "dual" || what == "dual-left") {
        need(1);
        hs::HModule c = hs::left_dual(ws.module(inputs[0]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "dual-right") {
        need(1);
        hs::HModule c = hs::right_dual(ws.module(inputs[0]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "tensor") {
        need(2);
        hs::HModule c = hs::tensor_module(ws.module(inputs[0]), ws.module(inputs[1]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "hom" || what == "hom-left") {
        need(2);
        hs::HModule c = hs::hom_left(ws.module(inputs[0]), ws.module(inputs[1]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "hom-right") {
        need(2);
        hs::HModule c = hs::hom_right(ws.module(inputs[0]), ws.module(inputs[1]));
        if (!out_name.empty()) c.name = out_name;
        out_json = hs::io::module_to_json(c);
    } else if (what == "tensor-algebra") {
        need(1);
        hs::TruncatedTensorAlgebra t = hs::truncated_tensor_algebra(ws.module(inputs[0]), degree);
        out_json = hs::io::module_algebra_to_json(t.algebra,
                                                  out_name.empty() ? t.algebra.carrier.name : out_name);
    } else if (what == "braiding") {
        need(3);
        hs::ModuleMap psi = hs::braiding(ws.rmatrix(inputs[0]), ws.module(inputs[1]), ws.module(inputs[2]));
        out_json = hs::io::map_to_json(psi, out_name.empty() ? "braiding" : out_name);
    } else if (what == "conjugate-braiding") {
        need(3);
        hs::ModuleMap psi = hs::conjugate_braiding(ws.rmatrix(inputs[0]), ws.module(inputs[1]), ws.module(inputs[2]));
        out_json = hs::io::map_to_json(psi, out_name.empty() ? "conjugate-braiding" : out_name);
    } else if (what == "adjoint") {
        need(3);
        const hs::ModuleMap& t = ws.map(inputs[0]);
        const hs::InnerProduct& gv = ws.gram(inputs[1]);
        const hs::InnerProduct& gw = ws.gram(inputs[2]);
        hs::Matrix adj = hs::adjoint(t.matrix, gv.gram, gw.gram);
        hs::ModuleMap amap{t.codomain, t.domain, adj};
        out_json = hs::io::map_to_json(amap, out_name.empty() ? "adjoint" : out_name);
    } else if (what == "two-out-of-three") {
        need(2);
        // inputs are names of any two of a star, a gram, and a form
        const hs::Matrix *d = nullptr, *g = nullptr, *h = nullptr;
        const hs::HModule* mod = nullptr;
        hs::Matrix dbuf, gbuf, hbuf;
        for (const auto& nm : inputs) {
            if (ws.has_star(nm)) {
                dbuf = ws.star(nm).dagger;
                d = &dbuf;
                mod = &ws.star(nm).module;
            } else if (ws.has_gram(nm)) {
                gbuf = ws.gram(nm).gram;
                g = &gbuf;
                mod = &ws.gram(nm).module;
            } else if (ws.has_form(nm)) {
                hbuf = ws.form(nm);
                h = &hbuf;
                mod = &ws.form_module(nm);
            } else {
                throw hs::ReferenceError("'" + nm + "' is not a loaded star, gram, or form");
            }
        }
        hs::TwoOutOfThree res = hs::two_out_of_three(*mod, d, g, h);
        std::string nm = out_name.empty() ? "derived" : out_name;
        if (!d)
            out_json = hs::io::star_to_json(hs::StarStructure{*mod, res.star}, nm);
        else if (!g)
            out_json = hs::io::gram_to_json(hs::InnerProduct{*mod, res.gram}, nm);
        else
            out_json = hs::io::form_to_json(*mod, res.form, nm);
    } else {
        throw hs::ParseError("unknown construction '" + what + "'");
    }
    if (out.empty())
        std::cout << hs::io::dump(out_json);
    else
        hs::io::write_file(out, out_json);
    return 0;
}

int run_fixture_export(const std::string& name, const std::string& out_dir) {
    namespace fs = std::filesystem;
    hs::FixtureBundle b = hs::fixture(name);
    fs::create_directories(out_dir);
    hs::io::write_file(fs::path(out_dir) / "algebra.json", hs::io::algebra_to_json(*b.algebra));
    for (const auto& m : b.modules)
        hs::io::write_file(fs::path(out_dir) / ("module_" + m.name + ".json"), hs::io::module_to_json(m));
    for (const auto& s : b.stars)
        hs::io::write_file(fs::path(out_dir) / ("star_" + s.module.name + ".json"),
                           hs::io::star_to_json(s, "star_" + s.module.name));
    for (const auto& g : b.grams)
        hs::io::write_file(fs::path(out_dir) / ("gram_" + g.module.name + ".json"),
                           hs::io::gram_to_json(g, "gram_" + g.module.name));
    for (const auto& r : b.rmatrices)
        hs::io::write_file(fs::path(out_dir) / ("rmatrix_" + r.name + ".json"), hs::io::rmatrix_to_json(r));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for Hopf *-algebra structure: modules, conjugation, stars, braidings"};
    app.require_subcommand(1);

    std::string path, workspace, format = "text", suite, construction, out, out_name, fixture_name, out_dir;
    std::vector<std::string> fixture_names, inputs;
    unsigned degree = 2;

    auto* validate = app.add_subcommand("validate", "verify a definition file against its axioms");
    validate->add_option("file", path, "JSON definition file")->required();
    validate->add_option("--workspace", workspace, "directory of referenced definitions");
    validate->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "run a named proposition suite");
    check->add_option("suite", suite, "suite name")->required();
    check->add_option("--fixture", fixture_names, "fixture names (default: the shipped set)");
    check->add_option("--workspace", workspace, "run the suite over a directory of definitions instead");
    check->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* report = app.add_subcommand("report", "run every suite and emit a transcript");
    report->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    report->add_option("--fixture", fixture_names, "fixture names (default: the shipped set)");

    auto* construct = app.add_subcommand("construct", "run a named construction on workspace objects");
    construct->add_option("construction", construction,
                          "conjugate|dual|dual-right|tensor|hom|hom-right|tensor-algebra|braiding|"
                          "conjugate-braiding|adjoint|two-out-of-three")
        ->required();
    construct->add_option("--in", inputs, "input object names")->required();
    construct->add_option("--fixture", fixture_names, "fixture bundles to preload");
    construct->add_option("--workspace", workspace, "directory of definitions to preload");
    construct->add_option("--out", out, "output file (default: stdout)");
    construct->add_option("--name", out_name, "name for the constructed object");
    construct->add_option("--degree", degree, "truncation degree for tensor-algebra");

    auto* fixtures = app.add_subcommand("fixtures", "write a fixture bundle as definition files");
    fixtures->add_option("--name", fixture_name, "fixture name")->required();
    fixtures->add_option("--out-dir", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return run_validate(path, workspace, format);
        if (*check) return run_check(suite, fixture_names, workspace, format);
        if (*report) return run_report(format, fixture_names);
        if (*construct) return run_construct(construction, inputs, fixture_names, workspace, out, out_name, degree);
        if (*fixtures) return run_fixture_export(fixture_name, out_dir);
    } catch (const hs::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hs::ReferenceError& e) {
        std::cerr << "reference error: " << e.what() << "\n";
        return 2;
    } catch (const hs::UnknownFixture& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hs::CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const hs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
