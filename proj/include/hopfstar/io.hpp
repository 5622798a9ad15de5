#pragma once

#include <filesystem>
#include <fstream>
#include <variant>

#include <json.hpp>

#include "hopfstar/fixtures.hpp"

namespace hopfstar {

struct ReferenceError : Error {
    using Error::Error;
};

namespace io {

using nlohmann::json;  // std::map-backed: keys serialize sorted, deterministically

inline json to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a scalar string, got " + j.dump());
    return Scalar::parse(j.get<std::string>());
}

inline json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

inline Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coordinate array, got " + j.dump());
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    return rows;
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix (array of rows), got " + j.dump());
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    return Matrix::from_rows(rows);
}

// --- file formats, one JSON object per file, dispatched on "kind" ---------------

inline json algebra_to_json(const HopfStarAlgebra& h) {
    json j;
    j["kind"] = "algebra";
    j["name"] = h.name;
    j["scalar_order"] = h.scalar_order;
    j["dim"] = h.dim;
    json mult = json::array();
    for (size_t i = 0; i < h.dim; ++i) {
        json row = json::array();
        for (size_t k = 0; k < h.dim; ++k) row.push_back(to_json(h.mult[i * h.dim + k]));
        mult.push_back(row);
    }
    j["mult"] = mult;
    j["unit"] = to_json(h.unit);
    json cop = json::array();
    for (const auto& terms : h.coprod) {
        json row = json::array();
        for (const auto& t : terms) row.push_back(json::array({to_json(t.coeff), t.left, t.right}));
        cop.push_back(row);
    }
    j["coprod"] = cop;
    j["counit"] = to_json(h.counit);
    j["antipode"] = to_json(h.antipode);
    j["star"] = to_json(h.star);
    return j;
}

inline HopfStarAlgebra algebra_from_json(const json& j) {
    HopfStarAlgebra h;
    try {
        h.name = j.at("name").get<std::string>();
        h.scalar_order = j.at("scalar_order").get<unsigned>();
        h.dim = j.at("dim").get<size_t>();
        for (const auto& row : j.at("mult"))
            for (const auto& cell : row) h.mult.push_back(vec_from_json(cell));
        h.unit = vec_from_json(j.at("unit"));
        for (const auto& row : j.at("coprod")) {
            std::vector<CoprodTerm> terms;
            for (const auto& t : row)
                terms.push_back(CoprodTerm{scalar_from_json(t.at(0)), t.at(1).get<size_t>(), t.at(2).get<size_t>()});
            h.coprod.push_back(std::move(terms));
        }
        h.counit = vec_from_json(j.at("counit"));
        h.antipode = matrix_from_json(j.at("antipode"));
        h.star = matrix_from_json(j.at("star"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra file: ") + e.what());
    }
    h.check_shape();
    return h;
}

inline json module_to_json(const HModule& m) {
    json j;
    j["kind"] = "module";
    j["name"] = m.name;
    j["algebra"] = m.algebra ? m.algebra->name : "";
    j["dim"] = m.dim;
    json act = json::array();
    for (const auto& a : m.action) act.push_back(to_json(a));
    j["action"] = act;
    return j;
}

inline json map_to_json(const ModuleMap& t, const std::string& name) {
    json j;
    j["kind"] = "map";
    j["name"] = name;
    j["domain"] = t.domain.name;
    j["codomain"] = t.codomain.name;
    j["algebra"] = t.domain.algebra ? t.domain.algebra->name : "";
    j["matrix"] = to_json(t.matrix);
    return j;
}

inline json star_to_json(const StarStructure& s, const std::string& name) {
    json j;
    j["kind"] = "star";
    j["name"] = name;
    j["module"] = s.module.name;
    j["algebra"] = s.module.algebra ? s.module.algebra->name : "";
    j["matrix"] = to_json(s.dagger);
    return j;
}

inline json gram_to_json(const InnerProduct& g, const std::string& name) {
    json j;
    j["kind"] = "gram";
    j["name"] = name;
    j["module"] = g.module.name;
    j["algebra"] = g.module.algebra ? g.module.algebra->name : "";
    j["matrix"] = to_json(g.gram);
    return j;
}

inline json form_to_json(const HModule& m, const Matrix& h, const std::string& name) {
    json j;
    j["kind"] = "form";
    j["name"] = name;
    j["module"] = m.name;
    j["algebra"] = m.algebra ? m.algebra->name : "";
    j["matrix"] = to_json(h);
    return j;
}

inline json rmatrix_to_json(const RMatrix& r) {
    json j;
    j["kind"] = "rmatrix";
    j["name"] = r.name;
    j["algebra"] = r.algebra ? r.algebra->name : "";
    j["coeffs"] = to_json(r.coeffs);
    j["inverse"] = to_json(r.inverse);
    return j;
}

inline json module_algebra_to_json(const ModuleAlgebra& a, const std::string& name) {
    json j;
    j["kind"] = "module_algebra";
    j["name"] = name;
    j["carrier"] = module_to_json(a.carrier);
    size_t n = a.carrier.dim;
    json mult = json::array();
    for (size_t p = 0; p < n; ++p) {
        json row = json::array();
        for (size_t q = 0; q < n; ++q) row.push_back(to_json(a.mult[p * n + q]));
        mult.push_back(row);
    }
    j["mult"] = mult;
    j["unit"] = to_json(a.unit);
    return j;
}

inline json report_to_json(const Report& r) {
    json j;
    j["kind"] = "report";
    j["subject"] = r.subject;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = to_cstring(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["notes"] = r.notes;
    j["all_pass"] = r.all_pass();
    return j;
}

inline Report report_from_json(const json& j) {
    Report r;
    try {
        r.subject = j.at("subject").get<std::string>();
        for (const auto& c : j.at("checks")) {
            Check k;
            k.name = c.at("name").get<std::string>();
            std::string st = c.at("status").get<std::string>();
            k.status = st == "pass" ? CheckStatus::pass : st == "fail" ? CheckStatus::fail : CheckStatus::skipped;
            if (c.contains("witness")) k.witness = c.at("witness").get<std::string>();
            r.checks.push_back(std::move(k));
        }
        for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return r;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("parse error in '" + path.string() + "': " + e.what());
    }
}

inline void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << dump(j);
}

}  // namespace io

/// Named registry of loaded objects; algebra references resolve by name.
class Workspace {
  public:
    void register_algebra(HopfPtr h) {
        if (!h) throw Error("null algebra");
        algebras_[h->name] = h;
    }

    void add_fixture(const FixtureBundle& b) {
        register_algebra(b.algebra);
        for (const auto& m : b.modules) modules_[m.name] = m;
        for (const auto& r : b.rmatrices) rmatrices_[r.name] = r;
        for (size_t i = 0; i < b.stars.size(); ++i) stars_["star_" + b.stars[i].module.name] = b.stars[i];
        for (size_t i = 0; i < b.grams.size(); ++i) grams_["gram_" + b.grams[i].module.name] = b.grams[i];
    }

    HopfPtr algebra(const std::string& name) const {
        auto it = algebras_.find(name);
        if (it == algebras_.end()) throw ReferenceError("unknown algebra '" + name + "'");
        return it->second;
    }
    const HModule& module(const std::string& name) const {
        auto it = modules_.find(name);
        if (it == modules_.end()) throw ReferenceError("unknown module '" + name + "'");
        return it->second;
    }
    const RMatrix& rmatrix(const std::string& name) const {
        auto it = rmatrices_.find(name);
        if (it == rmatrices_.end()) throw ReferenceError("unknown R-matrix '" + name + "'");
        return it->second;
    }
    const StarStructure& star(const std::string& name) const {
        auto it = stars_.find(name);
        if (it == stars_.end()) throw ReferenceError("unknown star structure '" + name + "'");
        return it->second;
    }
    const InnerProduct& gram(const std::string& name) const {
        auto it = grams_.find(name);
        if (it == grams_.end()) throw ReferenceError("unknown gram '" + name + "'");
        return it->second;
    }
    const Matrix& form(const std::string& name) const {
        auto it = forms_.find(name);
        if (it == forms_.end()) throw ReferenceError("unknown bilinear form '" + name + "'");
        return it->second.second;
    }
    const HModule& form_module(const std::string& name) const {
        auto it = forms_.find(name);
        if (it == forms_.end()) throw ReferenceError("unknown bilinear form '" + name + "'");
        return module(it->second.first);
    }
    const std::map<std::string, HModule>& modules() const { return modules_; }

    /// load one JSON object; returns its kind. Structural (dimension) checks
    /// run at load time; deep verification is the CLI's validate command.
    std::string load_json(const io::json& j) {
        std::string kind;
        try {
            kind = j.at("kind").get<std::string>();
        } catch (const io::json::exception&) {
            throw ParseError("object without a 'kind' field");
        }
        try {
            if (kind == "algebra") {
                auto h = std::make_shared<HopfStarAlgebra>(io::algebra_from_json(j));
                register_algebra(std::move(h));
            } else if (kind == "module") {
                HModule m;
                m.name = j.at("name").get<std::string>();
                m.algebra = algebra(j.at("algebra").get<std::string>());
                m.dim = j.at("dim").get<size_t>();
                for (const auto& a : j.at("action")) m.action.push_back(io::matrix_from_json(a));
                m.check_shape();
                modules_[m.name] = std::move(m);
            } else if (kind == "map") {
                ModuleMap t{module(j.at("domain").get<std::string>()), module(j.at("codomain").get<std::string>()),
                            io::matrix_from_json(j.at("matrix"))};
                if (t.matrix.rows() != t.codomain.dim || t.matrix.cols() != t.domain.dim)
                    throw DimensionMismatch("map matrix shape");
                maps_[j.at("name").get<std::string>()] = std::move(t);
            } else if (kind == "star") {
                StarStructure s{module(j.at("module").get<std::string>()), io::matrix_from_json(j.at("matrix"))};
                if (s.dagger.rows() != s.module.dim || s.dagger.cols() != s.module.dim)
                    throw DimensionMismatch("star matrix shape");
                stars_[j.at("name").get<std::string>()] = std::move(s);
            } else if (kind == "gram") {
                InnerProduct g{module(j.at("module").get<std::string>()), io::matrix_from_json(j.at("matrix"))};
                if (g.gram.rows() != g.module.dim || g.gram.cols() != g.module.dim)
                    throw DimensionMismatch("gram matrix shape");
                grams_[j.at("name").get<std::string>()] = std::move(g);
            } else if (kind == "form") {
                std::string mod = j.at("module").get<std::string>();
                Matrix m = io::matrix_from_json(j.at("matrix"));
                const HModule& carrier = module(mod);
                if (m.rows() != carrier.dim || m.cols() != carrier.dim)
                    throw DimensionMismatch("form matrix shape");
                forms_[j.at("name").get<std::string>()] = {mod, std::move(m)};
            } else if (kind == "rmatrix") {
                RMatrix r{algebra(j.at("algebra").get<std::string>()), j.at("name").get<std::string>(),
                          io::matrix_from_json(j.at("coeffs")), io::matrix_from_json(j.at("inverse"))};
                size_t d = r.algebra->dim;
                if (r.coeffs.rows() != d || r.coeffs.cols() != d || r.inverse.rows() != d || r.inverse.cols() != d)
                    throw DimensionMismatch("rmatrix grid shape");
                rmatrices_[r.name] = std::move(r);
            } else if (kind == "module_algebra") {
                const io::json& cj = j.at("carrier");
                HModule carrier;
                carrier.name = cj.at("name").get<std::string>();
                carrier.algebra = algebra(cj.at("algebra").get<std::string>());
                carrier.dim = cj.at("dim").get<size_t>();
                for (const auto& a : cj.at("action")) carrier.action.push_back(io::matrix_from_json(a));
                carrier.check_shape();
                modules_[carrier.name] = carrier;
                ModuleAlgebra alg{carrier, {}, io::vec_from_json(j.at("unit"))};
                for (const auto& row : j.at("mult"))
                    for (const auto& cell : row) alg.mult.push_back(io::vec_from_json(cell));
                alg.check_shape();
                module_algebras_[j.at("name").get<std::string>()] = std::move(alg);
            } else {
                throw ParseError("unknown object kind '" + kind + "'");
            }
        } catch (const io::json::exception& e) {
            throw ParseError("malformed " + kind + " object: " + e.what());
        }
        return kind;
    }

    const ModuleMap& map(const std::string& name) const {
        auto it = maps_.find(name);
        if (it == maps_.end()) throw ReferenceError("unknown map '" + name + "'");
        return it->second;
    }
    const ModuleAlgebra& module_algebra(const std::string& name) const {
        auto it = module_algebras_.find(name);
        if (it == module_algebras_.end()) throw ReferenceError("unknown module algebra '" + name + "'");
        return it->second;
    }
    bool has_star(const std::string& name) const { return stars_.count(name) != 0; }
    bool has_gram(const std::string& name) const { return grams_.count(name) != 0; }
    bool has_form(const std::string& name) const { return forms_.count(name) != 0; }

    /// regroup the registry into per-algebra bundles (suite drivers use this)
    std::vector<FixtureBundle> bundles() const {
        std::vector<FixtureBundle> out;
        for (const auto& [name, alg] : algebras_) {
            FixtureBundle b;
            b.algebra = alg;
            for (const auto& [mname, m] : modules_)
                if (m.algebra.get() == alg.get()) b.modules.push_back(m);
            for (const auto& [sname, s] : stars_)
                if (s.module.algebra.get() == alg.get()) b.stars.push_back(s);
            for (const auto& [gname, g] : grams_)
                if (g.module.algebra.get() == alg.get()) b.grams.push_back(g);
            for (const auto& [rname, r] : rmatrices_)
                if (r.algebra.get() == alg.get()) b.rmatrices.push_back(r);
            out.push_back(std::move(b));
        }
        return out;
    }

    /// load all .json files in a directory, algebras first
    void load_directory(const std::filesystem::path& dir) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir)) throw ParseError("'" + dir.string() + "' is not a directory");
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        auto load_with_context = [&](const io::json& j, const std::filesystem::path& f) {
            try {
                load_json(j);
            } catch (const ReferenceError& e) {
                throw ReferenceError("in '" + f.string() + "': " + e.what());
            } catch (const ParseError& e) {
                throw ParseError("in '" + f.string() + "': " + e.what());
            }
        };
        std::vector<std::pair<io::json, std::filesystem::path>> pending;
        for (const auto& f : files) {
            io::json j = io::parse_file(f);
            if (j.value("kind", "") == "algebra")
                load_with_context(j, f);
            else
                pending.emplace_back(std::move(j), f);
        }
        // modules next (maps/stars/grams reference them)
        for (auto& [j, f] : pending)
            if (j.value("kind", "") == "module" || j.value("kind", "") == "module_algebra") load_with_context(j, f);
        for (auto& [j, f] : pending)
            if (j.value("kind", "") != "module" && j.value("kind", "") != "module_algebra") load_with_context(j, f);
    }

  private:
    std::map<std::string, HopfPtr> algebras_;
    std::map<std::string, HModule> modules_;
    std::map<std::string, ModuleMap> maps_;
    std::map<std::string, StarStructure> stars_;
    std::map<std::string, InnerProduct> grams_;
    std::map<std::string, std::pair<std::string, Matrix>> forms_;
    std::map<std::string, RMatrix> rmatrices_;
    std::map<std::string, ModuleAlgebra> module_algebras_;
};

}  // namespace hopfstar
