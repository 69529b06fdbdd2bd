#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobord/acceptance.hpp"
#include "cobord/classifying.hpp"
#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/lazard.hpp"
#include "cobord/serialize.hpp"
#include "cobord/specialize.hpp"

namespace {

using cobord::serialize::Json;

struct Options {
    std::string cache_dir;
    std::string format;  // json | text
    bool rebuild_cache = false;
};

cobord::lazard::TableHandle table_for(const Options& opt, int depth)
{
    return cobord::serialize::load_or_build(
        depth, cobord::serialize::resolve_cache_dir(opt.cache_dir), opt.rebuild_cache);
}

Json query_json(const std::string& command, std::initializer_list<std::pair<const char*, Json>> kv)
{
    Json q;
    q["command"] = command;
    for (auto& [k, v] : kv)
        q[k] = v;
    return q;
}

void emit(const Json& envelope)
{
    std::cout << cobord::serialize::dump(envelope);
}

Json envelope(const std::string& command,
              std::initializer_list<std::pair<const char*, Json>> query, Json result)
{
    Json j;
    j["version"] = cobord::serialize::kSchemaVersion;
    j["query"] = query_json(command, query);
    j["result"] = std::move(result);
    return j;
}

int cmd_lazard(const Options& opt, int max_codegree)
{
    cobord::lazard::TableHandle table = table_for(opt, max_codegree);
    if (opt.format == "text") {
        std::cout << "codegree:rank\n";
        for (int d = 0; d <= max_codegree; ++d)
            std::cout << d << ":" << table->rank(d) << "\n";
        return 0;
    }
    Json ranks = Json::array();
    for (int d = 0; d <= max_codegree; ++d)
        ranks.push_back(table->rank(d));
    emit(envelope("lazard", {{"maxCodegree", max_codegree}}, Json{{"ranks", ranks}}));
    return 0;
}

int cmd_fgl(const Options& opt, int order, const std::string& law, bool inverse, long nseries)
{
    cobord::fgl::FglTable f;
    if (law == "universal") {
        f = cobord::fgl::universal_fgl(order, table_for(opt, std::max(order - 1, 0)));
    } else if (law == "additive") {
        f = cobord::fgl::additive_fgl(order);
    } else if (law == "multiplicative") {
        f = cobord::fgl::multiplicative_fgl(order);
    } else {
        cobord::fail(cobord::ErrorKind::flag_validation, "unknown law: " + law);
    }

    std::string label;
    cobord::gps::GradedSeries out = cobord::fgl::uni_variable(f.ring, order);
    enum class What { law, inverse, nseries } what = What::law;
    if (inverse) {
        what = What::inverse;
        out = cobord::fgl::formal_inverse(f, order);
        label = "chi(u)";
    } else if (nseries != LONG_MIN) {
        what = What::nseries;
        out = cobord::fgl::n_series(f, cobord::Int(nseries), order);
        label = "[" + std::to_string(nseries) + "](u)";
    } else {
        label = "F(u,v)";
    }

    if (opt.format == "json") {
        Json result;
        result["law"] = f.name;
        result["order"] = order;
        if (what == What::law) {
            result["series"] = "F(u,v)";
            auto vars = std::make_shared<cobord::gps::VarSet>(
                std::vector<cobord::gps::Var>{{"u", 1}, {"v", 1}});
            cobord::gps::GradedSeries u =
                cobord::gps::GradedSeries::variable(vars, order, f.ring, 0);
            cobord::gps::GradedSeries v =
                cobord::gps::GradedSeries::variable(vars, order, f.ring, 1);
            result["value"] = cobord::serialize::series_to_json(cobord::fgl::fgl_sum(f, u, v));
        } else {
            result["series"] = label;
            result["value"] = cobord::serialize::series_to_json(out);
        }
        emit(envelope("fgl",
                      {{"order", order},
                       {"law", law},
                       {"inverse", inverse},
                       {"nSeries", nseries == LONG_MIN ? Json(nullptr) : Json(nseries)}},
                      std::move(result)));
        return 0;
    }
    if (what == What::law)
        std::cout << "F(u,v) = " << cobord::fgl::fgl_str(f) << "\n";
    else
        std::cout << label << " = " << out.str() << "\n";
    return 0;
}

int cmd_ring(const Options& opt, const std::string& group, int rank, int trunc,
             std::vector<int> degrees, const std::string& target)
{
    cobord::lazard::TableHandle table = table_for(opt, trunc);
    cobord::classifying::RingPresentation pres;
    if (group == "torus") {
        pres = cobord::classifying::ring_BT(rank, trunc, table).pres;
    } else if (group == "gl") {
        pres = cobord::classifying::ring_BGL(rank, trunc, table).pres;
    } else if (group == "sl") {
        pres = cobord::classifying::ring_BSL(rank, trunc, table).pres;
    } else {
        cobord::fail(cobord::ErrorKind::flag_validation, "unknown group: " + group);
    }

    if (target == "chow") {
        pres = cobord::specialize::chow_specialization(table).apply(pres);
    } else if (target == "ktheory") {
        pres = cobord::specialize::ktheory_specialization(table).apply(pres);
    } else if (target != "cobordism") {
        cobord::fail(cobord::ErrorKind::flag_validation, "unknown target: " + target);
    }

    if (degrees.empty())
        for (int i = -trunc; i <= trunc; ++i)
            degrees.push_back(i);

    if (opt.format == "text") {
        std::cout << pres.name << " (truncation " << pres.trunc << ")\n";
        std::cout << "generators:";
        for (const cobord::gps::Var& v : pres.vars->vars())
            std::cout << " " << v.name << "(deg " << v.degree << ")";
        if (pres.vars->count() == 0)
            std::cout << " (none)";
        std::cout << "\n";
        for (const cobord::gps::GradedSeries& rel : pres.relations)
            std::cout << "relation: " << rel.str() << " = 0\n";
        for (int i : degrees)
            std::cout << "degree " << i << ": rank " << pres.rank(i) << "\n";
        return 0;
    }
    emit(envelope("ring",
                  {{"group", group},
                   {"rank", rank},
                   {"tDegree", trunc},
                   {"specialize", target},
                   {"degrees", degrees}},
                  cobord::serialize::presentation_to_json(pres, degrees)));
    return 0;
}

int cmd_invariants(const Options& opt, int rank, int trunc, bool compare_gl)
{
    cobord::lazard::TableHandle table = table_for(opt, trunc);
    cobord::classifying::TorusRing bt = cobord::classifying::ring_BT(rank, trunc, table);
    auto gens = cobord::classifying::symmetric_group_gens(rank);
    auto slices =
        cobord::classifying::weyl_invariants(bt, gens, trunc, 0, table->max_codegree());

    Json jslices = Json::array();
    for (const auto& slice : slices) {
        Json js;
        js["tDegree"] = slice.t_degree;
        js["codegree"] = slice.codegree;
        js["rank"] = slice.rank();
        Json basis = Json::array();
        for (int r = 0; r < slice.monomial_basis.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < slice.monomial_basis.cols; ++c)
                row.push_back(slice.monomial_basis.at(r, c).get_str());
            basis.push_back(std::move(row));
        }
        js["monomialBasis"] = std::move(basis);
        jslices.push_back(std::move(js));
    }
    Json result;
    result["slices"] = std::move(jslices);

    bool all_rational = true;
    if (compare_gl) {
        Json jc = Json::array();
        for (const auto& cmp : cobord::classifying::compare_invariants_with_gl(rank, trunc)) {
            Json row;
            row["tDegree"] = cmp.t_degree;
            row["invariantDim"] = cmp.invariant_dim;
            row["imageDim"] = cmp.image_dim;
            row["rationalEqual"] = cmp.rational_equal;
            row["integralEqual"] = cmp.integral_equal;
            jc.push_back(std::move(row));
            all_rational = all_rational && cmp.rational_equal;
        }
        result["glComparison"] = std::move(jc);
    }

    if (opt.format == "text") {
        for (const auto& slice : slices)
            std::cout << "t-degree " << slice.t_degree << ", codegree " << slice.codegree
                      << ": rank " << slice.rank() << "\n";
        if (compare_gl)
            std::cout << (all_rational ? "gl image matches invariants rationally\n"
                                       : "gl image differs from invariants\n");
        return all_rational ? 0 : 3;
    }
    emit(envelope("invariants", {{"rank", rank}, {"tDegree", trunc}, {"compareGl", compare_gl}},
                  std::move(result)));
    return all_rational ? 0 : 3;
}

int cmd_check(const Options& opt)
{
    cobord::acceptance::Report report = cobord::acceptance::run_all();
    if (opt.format == "text") {
        for (const auto& c : report.criteria)
            std::cout << "criterion " << c.id << " " << (c.pass ? "PASS" : "FAIL") << " - "
                      << c.name << ": " << c.details << "\n";
        std::cout << (report.all_pass() ? "all criteria passed" : "some criteria FAILED")
                  << "\n";
    } else {
        emit(cobord::acceptance::report_json(report));
    }
    return report.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic kernel for formal group laws and cobordism rings of "
                 "classifying spaces"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--cache-dir", opt.cache_dir,
                   "basis cache directory (overrides COBORD_CACHE_DIR)");

    int max_codegree = 4;
    auto* lazard_cmd = app.add_subcommand("lazard", "build the coefficient-ring basis table");
    lazard_cmd->add_option("--max-codegree", max_codegree, "table depth")->required();
    lazard_cmd->add_flag("--rebuild-cache", opt.rebuild_cache, "ignore any cached table");
    std::string lazard_format = "json";
    lazard_cmd->add_option("--format", lazard_format, "json|text");

    int order = 2;
    std::string law = "universal";
    bool inverse = false;
    long nseries = LONG_MIN;
    auto* fgl_cmd = app.add_subcommand("fgl", "print a formal group law or derived series");
    fgl_cmd->add_option("--order", order, "series truncation order")->required();
    fgl_cmd->add_option("--law", law, "universal|additive|multiplicative");
    fgl_cmd->add_flag("--inverse", inverse, "print the formal inverse chi(u)");
    fgl_cmd->add_option("--n-series", nseries, "print the n-series for this n");
    std::string fgl_format = "text";
    fgl_cmd->add_option("--format", fgl_format, "json|text");

    std::string group = "torus";
    int rank = 1;
    int tdegree = 3;
    std::vector<int> degrees;
    std::string target = "cobordism";
    auto* ring_cmd = app.add_subcommand("ring", "emit a classifying-space ring presentation");
    ring_cmd->add_option("--group", group, "torus|gl|sl")->required();
    ring_cmd->add_option("--rank", rank, "torus / matrix rank")->required();
    ring_cmd->add_option("--t-degree", tdegree, "series truncation order")->required();
    ring_cmd->add_option("--degree", degrees, "graded pieces to emit (repeatable)");
    ring_cmd->add_option("--specialize", target, "cobordism|chow|ktheory");
    std::string ring_format = "json";
    ring_cmd->add_option("--format", ring_format, "json|text");

    int inv_rank = 2;
    int inv_tdegree = 3;
    bool compare_gl = false;
    auto* inv_cmd = app.add_subcommand("invariants", "Weyl-invariant slices of the torus ring");
    inv_cmd->add_option("--rank", inv_rank, "torus rank")->required();
    inv_cmd->add_option("--t-degree", inv_tdegree, "maximum t-degree")->required();
    inv_cmd->add_flag("--compare-gl", compare_gl, "compare with the BGL restriction image");
    std::string inv_format = "json";
    inv_cmd->add_option("--format", inv_format, "json|text");

    auto* check_cmd = app.add_subcommand("check", "run the acceptance criteria");
    std::string check_format = "json";
    check_cmd->add_option("--format", check_format, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (lazard_cmd->parsed()) {
            opt.format = lazard_format;
            return cmd_lazard(opt, max_codegree);
        }
        if (fgl_cmd->parsed()) {
            opt.format = fgl_format;
            return cmd_fgl(opt, order, law, inverse, nseries);
        }
        if (ring_cmd->parsed()) {
            opt.format = ring_format;
            return cmd_ring(opt, group, rank, tdegree, degrees, target);
        }
        if (inv_cmd->parsed()) {
            opt.format = inv_format;
            return cmd_invariants(opt, inv_rank, inv_tdegree, compare_gl);
        }
        if (check_cmd->parsed()) {
            opt.format = check_format;
            return cmd_check(opt);
        }
    } catch (const cobord::Error& e) {
        Json err;
        err["error"] = {{"kind", cobord::error_kind_name(e.kind())}, {"message", e.what()}};
        std::cerr << cobord::serialize::dump(err);
        return e.kind() == cobord::ErrorKind::flag_validation ? 2 : 3;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cerr << cobord::serialize::dump(err);
        return 3;
    }
    return 2;
}
