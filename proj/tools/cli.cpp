#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hmix/hmix.hpp"

namespace hmix::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::vector<std::string> files;
    bool merge_digons = false;
    bool as_json = false;
    bool check = false;
    std::string gauge;
    std::string tree = "auto";
    std::string out_path;
    unsigned threads = 1;
};

MixedMultigraph load(const std::string& path, const Options& opt)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return parse_mmg(in, ParseOptions{opt.merge_digons});
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

json big(const BigInt& x)
{
    if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
        return static_cast<long long>(x);
    return x.str();
}

std::string format_double(double x)
{
    if (std::abs(x) < 1e-9)
        x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void emit(const std::string& text, const Options& opt, std::ostream& out)
{
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f)
        throw Error("cannot write '" + opt.out_path + "'");
    f << text;
}

int cmd_charpoly(const Options& opt, std::ostream& out)
{
    const MixedMultigraph m = load(opt.files.at(0), opt);
    const CharPoly det = char_poly(m);
    if (!opt.check) {
        if (opt.as_json) {
            json c = json::array();
            for (const auto& x : det.coefficients())
                c.push_back(big(x));
            out << json{{"charpoly", c}}.dump() << '\n';
        } else {
            out << det.to_string() << '\n';
        }
        return kSuccess;
    }
    const CharPoly sachs = char_poly_sachs(m);
    const bool match = det == sachs;
    if (opt.as_json) {
        out << json{{"det", det.to_string()}, {"sachs", sachs.to_string()}, {"match", match}}.dump() << '\n';
    } else {
        out << "det:   " << det.to_string() << '\n' << "sachs: " << sachs.to_string() << '\n';
        out << (match ? "match" : "MISMATCH") << '\n';
    }
    return match ? kSuccess : kNegative;
}

int cmd_spectrum(const Options& opt, std::ostream& out)
{
    const MixedMultigraph m = load(opt.files.at(0), opt);
    const Eigen::VectorXd ev = eigenvalues(hermitian_matrix(m));
    if (opt.as_json) {
        json a = json::array();
        for (double x : ev)
            a.push_back(std::abs(x) < 1e-9 ? 0.0 : x);
        out << json{{"eigenvalues", a}}.dump() << '\n';
        return kSuccess;
    }
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        out << (i ? " " : "") << format_double(ev(i));
    out << '\n';
    return kSuccess;
}

int cmd_equiv(const Options& opt, std::ostream& out)
{
    const MixedMultigraph m1 = load(opt.files.at(0), opt);
    const MixedMultigraph m2 = load(opt.files.at(1), opt);
    if (underlying(m1) != underlying(m2))
        throw Error("different underlying graph");
    const EquivalenceWitness w = decide_switching_equivalence(m1, m2);
    if (w.equivalent && !verify_witness(m1, m2, w))
        throw ArithmeticError("witness failed verification");
    if (opt.as_json) {
        json j{{"verdict", w.equivalent ? "equivalent" : "not-equivalent"}};
        if (w.equivalent) {
            j["gauge"] = to_string(w.gauge);
            j["converse"] = w.converse_applied;
        } else {
            j["reason"] = w.reason;
        }
        out << j.dump() << '\n';
    } else if (w.equivalent) {
        out << "equivalent gauge=" << to_string(w.gauge) << " converse=" << (w.converse_applied ? "yes" : "no")
            << '\n';
    } else {
        out << "not-equivalent\n";
    }
    return w.equivalent ? kSuccess : kNegative;
}

int cmd_switch(const Options& opt, std::ostream& out)
{
    const MixedMultigraph m = load(opt.files.at(0), opt);
    const GaugeAssignment g = parse_gauge(opt.gauge, m.order());
    emit(serialize_mmg(apply_gauge(m, g)), opt, out);
    return kSuccess;
}

int cmd_converse(const Options& opt, std::ostream& out)
{
    emit(serialize_mmg(converse(load(opt.files.at(0), opt))), opt, out);
    return kSuccess;
}

int cmd_census(const Options& opt, std::ostream& out)
{
    const MixedMultigraph g = load(opt.files.at(0), opt);
    CensusLimits limits;
    limits.threads = std::max(1u, opt.threads);
    const CensusReport r = census_report(g, limits);
    emit(to_json(r) + "\n", opt, out);
    return r.ok() ? kSuccess : kNegative;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    const MixedMultigraph m = load(opt.files.at(0), opt);
    const auto failures = invariant_failures(m);
    if (opt.as_json) {
        out << json{{"ok", failures.empty()}, {"failures", failures}}.dump() << '\n';
    } else if (failures.empty()) {
        out << "ok\n";
    } else {
        for (const auto& f : failures)
            out << "FAIL " << f << '\n';
    }
    return failures.empty() ? kSuccess : kNegative;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hermitian adjacency spectra and switching classes of mixed multigraphs", "hmix"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub, int files) {
        sub->add_option("files", opt.files, "MMG input file(s)")->required()->expected(files);
        sub->add_flag("--merge-digons", opt.merge_digons, "replace opposite arcs by an undirected edge");
        sub->add_flag("--json", opt.as_json, "machine-readable output");
        sub->add_option("--tree", opt.tree, "spanning tree choice")->check(CLI::IsMember({"auto"}));
        return sub;
    };

    auto* charpoly = common(app.add_subcommand("charpoly", "exact characteristic polynomial"), 1);
    charpoly->add_flag("--check", opt.check, "also run the Sachs expansion and compare");
    auto* spectrum = common(app.add_subcommand("spectrum", "eigenvalues, ascending"), 1);
    auto* equiv = common(app.add_subcommand("equiv", "decide switching equivalence"), 2);
    auto* sw = common(app.add_subcommand("switch", "apply a three-way switching"), 1);
    sw->add_option("--gauge", opt.gauge, "vertex:exponent list, e.g. 0:0,1:1,2:5")->required();
    sw->add_option("--out", opt.out_path, "output file");
    auto* conv = common(app.add_subcommand("converse", "reverse every arc"), 1);
    conv->add_option("--out", opt.out_path, "output file");
    auto* census = common(app.add_subcommand("census", "classify all mixed multigraphs over an undirected one"), 1);
    census->add_option("--out", opt.out_path, "output file");
    census->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    auto* verify = common(app.add_subcommand("verify", "run the invariant battery on one graph"), 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (charpoly->parsed())
            return cmd_charpoly(opt, out);
        if (spectrum->parsed())
            return cmd_spectrum(opt, out);
        if (equiv->parsed())
            return cmd_equiv(opt, out);
        if (sw->parsed())
            return cmd_switch(opt, out);
        if (conv->parsed())
            return cmd_converse(opt, out);
        if (census->parsed())
            return cmd_census(opt, out);
        if (verify->parsed())
            return cmd_verify(opt, out);
    } catch (const InadmissibleGaugeError& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace hmix::cli
