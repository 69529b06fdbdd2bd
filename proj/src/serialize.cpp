#include "cobord/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cobord/errors.hpp"

namespace cobord::serialize {

namespace fs = std::filesystem;

Json imat_to_json(const IMat& m)
{
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c)
            row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["entries"] = std::move(rows);
    return j;
}

IMat imat_from_json(const Json& j)
{
    IMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const Json& rows = j.at("entries");
    if (int(rows.size()) != m.rows)
        fail(ErrorKind::cache_corruption, "matrix row count");
    for (int r = 0; r < m.rows; ++r) {
        const Json& row = rows.at(size_t(r));
        if (int(row.size()) != m.cols)
            fail(ErrorKind::cache_corruption, "matrix column count");
        for (int c = 0; c < m.cols; ++c)
            m.at(r, c) = Int(row.at(size_t(c)).get<std::string>());
    }
    return m;
}

Json table_to_json(const lazard::Table& table)
{
    Json j;
    j["version"] = kCacheVersion;
    j["maxCodegree"] = table.max_codegree();

    Json gens = Json::array();
    for (int d = 1; d <= table.max_codegree(); ++d)
        for (int i = d; i >= 1; --i) {
            Json g;
            g["i"] = i;
            g["j"] = d + 1 - i;
            g["codegree"] = d;
            gens.push_back(std::move(g));
        }
    j["generators"] = std::move(gens);

    Json bases = Json::array();
    for (int d = 0; d <= table.max_codegree(); ++d) {
        Json piece;
        piece["codegree"] = d;
        piece["rank"] = table.rank(d);
        Json vectors = Json::array();
        for (const lazard::APoly& b : table.basis(d)) {
            Json vec = Json::array();
            for (auto& [m, c] : b)
                vec.push_back(Json::array({lazard::amono_str(m), c.get_str()}));
            vectors.push_back(std::move(vec));
        }
        piece["vectors"] = std::move(vectors);
        bases.push_back(std::move(piece));
    }
    j["bases"] = std::move(bases);

    Json reduction = Json::array();
    for (int d = 0; d <= table.max_codegree(); ++d) {
        Json piece;
        piece["codegree"] = d;
        piece["relRank"] = table.relation_rank(d);
        piece["transform"] = imat_to_json(table.transform(d));
        reduction.push_back(std::move(piece));
    }
    j["reduction"] = std::move(reduction);
    return j;
}

lazard::TableHandle table_from_json(const Json& j)
{
    if (!j.contains("version") || j.at("version").get<int>() != kCacheVersion)
        fail(ErrorKind::cache_corruption, "unsupported cache version");
    int max_codegree = j.at("maxCodegree").get<int>();
    if (max_codegree < 0)
        fail(ErrorKind::cache_corruption, "negative maxCodegree");

    const Json& bases = j.at("bases");
    const Json& reduction = j.at("reduction");
    if (int(bases.size()) != max_codegree + 1 || int(reduction.size()) != max_codegree + 1)
        fail(ErrorKind::cache_corruption, "piece count");

    std::vector<lazard::Table::PieceData> parts;
    for (int d = 0; d <= max_codegree; ++d) {
        const Json& bp = bases.at(size_t(d));
        const Json& rp = reduction.at(size_t(d));
        if (bp.at("codegree").get<int>() != d || rp.at("codegree").get<int>() != d)
            fail(ErrorKind::cache_corruption, "codegree labels out of order");
        lazard::Table::PieceData part;
        part.v = imat_from_json(rp.at("transform"));
        part.rel_rank = rp.at("relRank").get<int>();
        for (const Json& vec : bp.at("vectors")) {
            lazard::APoly b;
            for (const Json& pair : vec) {
                lazard::AMono m = lazard::amono_parse(pair.at(0).get<std::string>());
                b[m] = Int(pair.at(1).get<std::string>());
            }
            part.basis.push_back(std::move(b));
        }
        if (int(part.basis.size()) != bp.at("rank").get<int>())
            fail(ErrorKind::cache_corruption, "rank vs stored vectors");
        parts.push_back(std::move(part));
    }
    return lazard::Table::from_parts(max_codegree, std::move(parts));
}

std::string cache_file_name(int max_codegree)
{
    return "lazard_basis_" + std::to_string(max_codegree) + ".json";
}

std::string resolve_cache_dir(const std::string& flag_value)
{
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("COBORD_CACHE_DIR"); env && *env)
        return env;
    return ".cobord-cache";
}

lazard::TableHandle load_or_build(int max_codegree, const std::string& cache_dir, bool rebuild)
{
    fs::path file = fs::path(cache_dir) / cache_file_name(max_codegree);
    if (!rebuild && fs::exists(file)) {
        std::ifstream in(file);
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            fail(ErrorKind::cache_corruption,
                 "unreadable cache file " + file.string() + ": " + e.what());
        }
        lazard::TableHandle table = table_from_json(j);
        if (table->max_codegree() != max_codegree)
            fail(ErrorKind::cache_corruption, "cache depth mismatch in " + file.string());
        return table;
    }
    lazard::TableHandle table = lazard::Table::build(max_codegree);
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (out)
        out << dump(table_to_json(*table));
    return table;
}

Json relem_to_json(const RElem& e)
{
    Json comps = Json::array();
    for (auto& [d, coords] : e.components()) {
        Json c;
        c["codegree"] = d;
        Json vals = Json::array();
        for (const Int& v : coords)
            vals.push_back(v.get_str());
        c["coords"] = std::move(vals);
        comps.push_back(std::move(c));
    }
    Json j;
    j["components"] = std::move(comps);
    return j;
}

RElem relem_from_json(const Json& j, const RingHandle& ring)
{
    RElem e(ring);
    for (const Json& c : j.at("components")) {
        int d = c.at("codegree").get<int>();
        std::vector<Int> coords;
        for (const Json& v : c.at("coords"))
            coords.emplace_back(v.get<std::string>());
        e.set_component(d, std::move(coords));
    }
    return e;
}

Json series_to_json(const gps::GradedSeries& s)
{
    Json j;
    Json vars = Json::array();
    for (const gps::Var& v : s.vars()->vars()) {
        Json jv;
        jv["name"] = v.name;
        jv["degree"] = v.degree;
        vars.push_back(std::move(jv));
    }
    j["vars"] = std::move(vars);
    j["trunc"] = s.trunc();
    Json terms = Json::array();
    for (auto& [mono, coeff] : s.terms()) {
        Json t;
        t["mono"] = mono;
        t["coeff"] = relem_to_json(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    if (s.truncated())
        j["truncated"] = true;
    return j;
}

gps::GradedSeries series_from_json(const Json& j, const RingHandle& ring)
{
    std::vector<gps::Var> vars;
    for (const Json& jv : j.at("vars"))
        vars.push_back(gps::Var{jv.at("name").get<std::string>(), jv.at("degree").get<int>()});
    gps::GradedSeries s(std::make_shared<gps::VarSet>(std::move(vars)),
                        j.at("trunc").get<int>(), ring);
    for (const Json& t : j.at("terms"))
        s.add_term(t.at("mono").get<std::vector<int>>(), relem_from_json(t.at("coeff"), ring));
    s.set_truncated(j.value("truncated", false));
    return s;
}

Json presentation_to_json(const classifying::RingPresentation& p,
                          const std::vector<int>& degrees)
{
    Json j;
    j["name"] = p.name;
    Json gens = Json::array();
    for (const gps::Var& v : p.vars->vars()) {
        Json g;
        g["name"] = v.name;
        g["degree"] = v.degree;
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const gps::GradedSeries& r : p.relations)
        rels.push_back(series_to_json(r));
    j["relations"] = std::move(rels);
    j["trunc"] = p.trunc;
    Json pieces = Json::array();
    for (int degree : degrees) {
        Json piece;
        piece["degree"] = degree;
        piece["rank"] = p.rank(degree);
        Json basis = Json::array();
        for (const classifying::BasisElement& b : p.graded_basis(degree)) {
            Json e;
            e["mono"] = b.mono;
            e["codegree"] = b.codegree;
            e["index"] = b.index;
            std::string coeff = p.ring->basis_label(b.codegree, b.index);
            std::string mono = gps::mono_str(*p.vars, b.mono);
            e["label"] = mono == "1" ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
            basis.push_back(std::move(e));
        }
        piece["basis"] = std::move(basis);
        pieces.push_back(std::move(piece));
    }
    j["graded_pieces"] = std::move(pieces);
    return j;
}

classifying::RingPresentation presentation_from_json(const Json& j, const RingHandle& ring)
{
    classifying::RingPresentation p;
    p.name = j.at("name").get<std::string>();
    std::vector<gps::Var> vars;
    for (const Json& g : j.at("generators"))
        vars.push_back(gps::Var{g.at("name").get<std::string>(), g.at("degree").get<int>()});
    p.vars = std::make_shared<gps::VarSet>(std::move(vars));
    for (const Json& r : j.at("relations"))
        p.relations.push_back(series_from_json(r, ring));
    p.trunc = j.at("trunc").get<int>();
    p.ring = ring;
    return p;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace cobord::serialize
