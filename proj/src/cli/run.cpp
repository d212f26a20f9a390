#include "tdmono/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tdmono/error.hpp"
#include "tdmono/generators/models.hpp"
#include "tdmono/report/report_io.hpp"
#include "tdmono/strata/model_io.hpp"
#include "tdmono/strata/validate.hpp"
#include "tdmono/toric/chow.hpp"

namespace tdmono::cli {

namespace {

using util::Json;

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    bool strict = false;
    int n = 0;
    std::string graph;
    std::string cell;
    std::string ample;
};

// Thrown for problems with the invocation itself (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + o.output);
    f << text;
}

std::string json_text(const Json& j)
{
    return util::dump_canonical(j) + "\n";
}

std::pair<int, int> parse_cell(const std::string& s)
{
    std::istringstream in(s);
    int i = 0, j = 0;
    char comma = 0;
    if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
        throw UsageError("--cell expects i,j (got '" + s + "')");
    return {i, j};
}

std::vector<long> parse_coefficients(const std::string& s)
{
    std::vector<long> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError("--ample expects comma-separated integers (got '" + s + "')");
        out.push_back(v);
    }
    return out;
}

strata::DegenerationModel load_model(const Options& o)
{
    return strata::parse_model(read_file(o.input));
}

int cmd_gen(const std::string& which, const Options& o, std::ostream& out)
{
    strata::DegenerationModel m;
    if (which == "ngon")
        m = generators::gen_ngon(o.n);
    else if (which == "mumford")
        m = generators::gen_mumford(generators::parse_graph(read_file(o.graph)));
    else
        m = generators::gen_abelian_surface();
    emit(o, out, strata::serialize_model(m));
    return kOk;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    CheckReport r = strata::validate_all(load_model(o));
    emit(o, out, o.format == "json" ? json_text(r.to_json()) : r.to_text());
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_complex(const Options& o, std::ostream& out)
{
    strata::DegenerationModel m = load_model(o);
    complex::ChowComplex cx = complex::assemble(m);
    std::vector<std::pair<int, int>> cells;
    if (!o.cell.empty())
        cells.push_back(parse_cell(o.cell));
    else
        for (auto c : complex::support(cx.dimension()))
            cells.push_back(c);

    if (o.format == "json") {
        Json j;
        j["model"] = m.name;
        j["dimension"] = m.dimension;
        Json arr = Json::array();
        for (auto [i, jj] : cells)
            arr.push_back(report::cell_to_json(cx, i, jj));
        j["cells"] = std::move(arr);
        emit(o, out, json_text(j));
    } else if (o.cell.empty()) {
        emit(o, out, report::complex_to_text(cx));
    } else {
        emit(o, out, report::cell_to_text(cx, cells[0].first, cells[0].second));
    }
    return kOk;
}

int cmd_homology(const Options& o, std::ostream& out)
{
    complex::ChowComplex cx = complex::assemble(load_model(o));
    CheckReport chain = complex::check_chain_identities(cx);
    if (!chain.passed())
        throw CompositionNotZero("chain identities fail:\n" + chain.to_text());
    complex::HomologyTable t = complex::homology_table(cx);
    emit(o, out, o.format == "json" ? json_text(report::homology_to_json(t))
                                    : report::homology_to_text(t));
    return kOk;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err)
{
    strata::DegenerationModel m = load_model(o);
    CheckReport v = strata::validate_all(m);
    if (!v.passed()) {
        err << "refusing to report on a model that fails validation\n" << v.to_text();
        return kCheckFailed;
    }
    report::CohomologyReport r = report::build_report(m);
    emit(o, out, o.format == "json" ? json_text(report::report_to_json(r))
                                    : report::report_to_text(r));
    return o.strict && !r.passed() ? kCheckFailed : kOk;
}

// A toric variety as the only component of a model, so the stratum checks apply.
strata::DegenerationModel as_model(const std::string& name, strata::StratumChowData s)
{
    strata::DegenerationModel m;
    m.name = name;
    m.dimension = s.dim;
    m.num_components = 1;
    m.strata.emplace(strata::Subset{1}, std::move(s));
    return m;
}

int cmd_toric_chow(const Options& o, std::ostream& out)
{
    toric::Fan f = toric::parse_fan(read_file(o.input));
    toric::ToricChow tc = toric::chow_from_fan(f);

    Json j;
    j["rank"] = f.rank;
    Json ranks = Json::array();
    for (int k = 0; k <= tc.dimension; ++k)
        ranks.push_back(tc.rank(k));
    j["ranks"] = ranks;
    Json basis = Json::array();
    for (const auto& cones : tc.basis_cones)
        basis.push_back(cones);
    j["basis_cones"] = basis;

    std::optional<strata::StratumChowData> s;
    CheckReport checks;
    checks.name = "toric";
    if (!o.ample.empty()) {
        s = toric::lefschetz_and_pairings(f, tc, parse_coefficients(o.ample));
        strata::DegenerationModel m = as_model(o.input, *s);
        for (const auto& r : {strata::check_hard_lefschetz(m), strata::check_hodge_index(m)}) {
            for (const auto& x : r.failures)
                checks.failures.push_back({r.name + "/" + x.code, x.location, x.detail});
            for (const auto& n : r.notes)
                checks.note(r.name + ": " + n);
        }
        Json lef = Json::array(), pair = Json::array();
        for (const auto& l : s->lefschetz)
            lef.push_back(util::to_json(l));
        for (const auto& p : s->pairings)
            pair.push_back(util::to_json(p));
        j["lefschetz"] = lef;
        j["pairings"] = pair;
        j["checks"] = checks.to_json();
    }

    if (o.format == "json") {
        emit(o, out, json_text(j));
    } else {
        std::ostringstream os;
        os << "rank " << f.rank << ", " << f.rays.size() << " rays\n";
        for (int k = 0; k <= tc.dimension; ++k) {
            os << "CH^" << k << " = " << tc.groups[static_cast<std::size_t>(k)].to_string();
            if (static_cast<std::size_t>(k) < tc.basis_cones.size() &&
                !tc.basis_cones[static_cast<std::size_t>(k)].empty()) {
                os << "  basis:";
                for (const auto& c : tc.basis_cones[static_cast<std::size_t>(k)]) {
                    os << " V(";
                    for (std::size_t r = 0; r < c.size(); ++r)
                        os << (r ? "," : "") << c[r];
                    os << ")";
                }
            }
            os << "\n";
        }
        if (s) {
            for (std::size_t a = 0; a < s->lefschetz.size(); ++a)
                os << "L_" << a << " = " << s->lefschetz[a].to_string() << "\n";
            for (std::size_t a = 0; a < s->pairings.size(); ++a)
                os << "P_" << a << " = " << s->pairings[a].to_string() << "\n";
            os << checks.to_text();
        }
        emit(o, out, os.str());
    }
    return checks.passed() ? kOk : kCheckFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monodromy and weight data of totally degenerate reductions", "tdmono"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "output file"); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", o.input, what)->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a model");
    gen->require_subcommand(1);
    CLI::App* ngon = gen->add_subcommand("ngon", "cycle of n projective lines");
    ngon->add_option("--n", o.n, "number of components")->required();
    add_output(ngon);
    CLI::App* mumford = gen->add_subcommand("mumford", "curve from a dual graph");
    mumford->add_option("--graph", o.graph, "edge list, one 'u v' pair per line")->required();
    add_output(mumford);
    CLI::App* ab2 = gen->add_subcommand("ab2", "degenerate abelian surface");
    add_output(ab2);

    CLI::App* validate = app.add_subcommand("validate", "check a model");
    add_input(validate, "model file");
    add_format(validate);
    add_output(validate);

    CLI::App* cx = app.add_subcommand("complex", "dump the Chow complex");
    add_input(cx, "model file");
    cx->add_option("--cell", o.cell, "dump one cell i,j");
    add_format(cx);
    add_output(cx);

    CLI::App* homology = app.add_subcommand("homology", "list the groups T^i_j");
    add_input(homology, "model file");
    add_format(homology);
    add_output(homology);

    CLI::App* rep = app.add_subcommand("report", "full cohomology report");
    add_input(rep, "model file");
    add_format(rep);
    add_output(rep);
    rep->add_flag("--strict", o.strict, "exit 1 if any verdict fails");

    CLI::App* toric = app.add_subcommand("toric", "toric varieties");
    toric->require_subcommand(1);
    CLI::App* chow = toric->add_subcommand("chow", "Chow groups of a smooth complete fan");
    add_input(chow, "fan file");
    chow->add_option("--ample", o.ample, "ray coefficients a_1,...,a_r of an ample divisor");
    add_format(chow);
    add_output(chow);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen)
            return cmd_gen(*ngon ? "ngon" : *mumford ? "mumford" : "ab2", o, out);
        if (*validate)
            return cmd_validate(o, out);
        if (*cx)
            return cmd_complex(o, out);
        if (*homology)
            return cmd_homology(o, out);
        if (*rep)
            return cmd_report(o, out, err);
        return cmd_toric_chow(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const std::string& k = e.kind();
        if (k == "MissingIncidence" || k == "CompositionNotZero")
            return kCheckFailed;
        if (k == "SchemaError" || k == "StructureError" || k == "GraphFormatError" ||
            k == "LoopRejected" || k == "Disconnected" || k == "NTooSmall" ||
            k == "InvalidFan" || k == "NotAmple" || k == "DimensionMismatch")
            return kInputError;
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"tdmono"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace tdmono::cli
