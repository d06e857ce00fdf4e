// qgw: build, verify and classify finite quantum groups of dihedral type.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qgw/coideal.hpp"
#include "qgw/error.hpp"
#include "qgw/ergodic.hpp"
#include "qgw/io.hpp"
#include "qgw/o2sym.hpp"
#include "qgw/twist.hpp"

using namespace qgw;

namespace {

enum class Format { tsv, markdown, qgw1 };

struct RunConfig {
    std::string command;
    std::vector<int> ks;
    bool twisted = false;
    std::string algebra = "functions";
    std::string group = "dihedral";
    std::string o2_mode;
    int cutoff = 24;
    unsigned precision = 128;
    Format format = Format::tsv;
    std::string out;
    std::string input;
    int jobs = 1;
    int k_bound = 12, l_bound = 6, k = 4, l = 1, n = 1;
};

// Rows of cells rendered as TSV or a Markdown table.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void row(std::vector<std::string> r) { rows_.push_back(std::move(r)); }
    std::string render(Format f) const {
        std::ostringstream os;
        if (f == Format::markdown) {
            line(os, header_, "| ", " | ", " |");
            std::vector<std::string> dash(header_.size(), "---");
            line(os, dash, "| ", " | ", " |");
            for (const auto& r : rows_) line(os, r, "| ", " | ", " |");
        } else {
            line(os, header_, "", "\t", "");
            for (const auto& r : rows_) line(os, r, "", "\t", "");
        }
        return os.str();
    }

private:
    static void line(std::ostream& os, const std::vector<std::string>& cells, const char* open, const char* sep,
                     const char* close) {
        os << open;
        for (size_t i = 0; i < cells.size(); ++i) os << (i ? sep : "") << cells[i];
        os << close << "\n";
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string heading(Format f, const std::string& title) {
    return f == Format::markdown ? "\n## " + title + "\n\n" : "# " + title + "\n";
}

std::string join(const std::vector<int>& v, const char* sep = "") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Outcome {
    std::string text;
    int status = 0;
};

Outcome run_build(const RunConfig& c) {
    if (c.ks.size() != 1) throw Error("Usage", "cli", "build takes a single --k");
    int K = c.ks[0];
    FiniteGroup g = make_dihedral(K);
    Json doc;
    if (c.twisted || c.algebra == "twisted") {
        if (K % 2 != 0) throw Error("BadParams", "cli", "the twisted algebra needs even K");
        auto d = dihedral_minus_one(K);
        doc = hopf_to_json(*d.algebra);
        doc["group"] = group_to_json(g);
        doc["cocycle"] = cocycle_to_json(d.cocycle);
    } else if (c.algebra == "group") {
        doc = hopf_to_json(*group_algebra(g, lcm4(K)));
        doc["group"] = group_to_json(g);
    } else {
        doc = hopf_to_json(*function_algebra(g, lcm4(K)));
        doc["group"] = group_to_json(g);
    }
    return {dump_qgw1(doc), 0};
}

Outcome run_verify(const RunConfig& c) {
    std::ifstream in(c.input);
    if (!in) throw Error("Usage", "cli", "cannot read " + c.input);
    std::stringstream ss;
    ss << in.rdbuf();
    HopfPtr h = hopf_from_json(parse_qgw1(ss.str()));
    auto cert = check_cqg(h, c.precision);
    Table t({"check", "result", "witness"});
    for (const auto& it : cert.hopf.items) t.row({it.name, it.pass ? "pass" : "FAIL", it.witness});
    t.row({"star_compatible", cert.star_compatible ? "pass" : "FAIL", ""});
    t.row({"haar_exists", cert.haar_exists ? "pass" : "FAIL", ""});
    t.row({"haar_positive", cert.haar_positive ? "pass" : "FAIL", ""});
    t.row({"haar_faithful", cert.haar_faithful ? "pass" : "FAIL", cert.min_eigenvalue.str(12)});
    t.row({"kac", cert.kac ? "yes" : "no", ""});
    std::string text = heading(c.format, "verify " + c.input + " (dim " + std::to_string(h->dim) + ")") + t.render(c.format);
    if (!cert.ok()) {
        std::string w;
        for (const auto& f : cert.failures) w += (w.empty() ? "" : "; ") + f;
        throw Error("CertificateFailure", "hopf-core", w);
    }
    return {text, 0};
}

Outcome run_classify(const RunConfig& c) {
    if (c.ks.size() != 1) throw Error("Usage", "cli", "classify takes a single --k");
    int K = c.ks[0];
    Census census = classify_ergodic(K);
    std::string text = heading(c.format, "ergodic census of D_" + std::to_string(K));
    Table t({"label", "family_label", "dim", "multiplicities", "commutative", "center_dim"});
    for (const auto& a : census.raw)
        t.row({a.label, a.family_label, std::to_string(a.invariants.dim), join(a.invariants.mult, ","),
               yes(a.invariants.commutative), std::to_string(a.invariants.center_dim)});
    text += t.render(c.format);
    for (const auto& f : census.flags) text += "flag\t" + f + "\n";
    text += "invariants_injective\t" + yes(census.invariants_injective) + "\n";
    std::vector<bool> sides{false};
    if (K % 2 == 0) sides.push_back(true);
    for (bool tw : sides) {
        auto e = embeddable_classification(census, tw);
        text += heading(c.format, std::string(tw ? "twisted" : "classical") + " embeddable actions, K=" + std::to_string(K));
        Table et({"label", "family_label", "coideal_dim", "commutative", "source"});
        for (const auto& x : e.entries)
            et.row({x.label, x.family_label, std::to_string(x.coideal.dim()), yes(x.coideal.commutative), x.source});
        text += et.render(c.format);
        text += "count\t" + std::to_string(e.count()) + "\nclasses\t" + std::to_string(e.entries.size()) + "\n";
        for (const auto& f : e.findings) text += "finding\t" + f + "\n";
    }
    return {text, 0};
}

Outcome run_count(const RunConfig& c) {
    auto rows = count_comparison(c.ks, c.jobs);
    Table t({"K", "tau", "classical", "twisted", "classical_classes", "twisted_classes", "differ"});
    std::string ties;
    for (const auto& r : rows) {
        t.row({std::to_string(r.K), std::to_string(r.tau), std::to_string(r.classical), std::to_string(r.twisted),
               std::to_string(r.classical_raw), std::to_string(r.twisted_raw), yes(r.differ())});
        if (!r.differ()) ties += (ties.empty() ? "" : ",") + std::to_string(r.K);
    }
    std::string text = heading(c.format, "embeddable counts") + t.render(c.format);
    std::ostringstream os;
    os.precision(4);
    os << "ties\t" << (ties.empty() ? "none" : ties) << "\n";
    if (rows.size() >= 2)
        os << "loglog_slope_classical\t" << loglog_slope(rows, false) << "\nloglog_slope_twisted\t" << loglog_slope(rows, true) << "\n";
    return {text + os.str(), 0};
}

Outcome run_o2(const RunConfig& c) {
    std::string text;
    if (c.o2_mode == "scan-regular") {
        auto labels = scan_regular_candidates(c.k_bound, c.l_bound, c.cutoff);
        Table t({"label", "cutoff"});
        for (const auto& s : labels) t.row({s, std::to_string(c.cutoff)});
        text = heading(c.format, "regular candidates") + t.render(c.format);
    } else if (c.o2_mode == "embeddable") {
        Table t({"label", "embeddable", "reason"});
        for (const auto& v : embeddable_table(c.k_bound, c.l_bound)) t.row({v.label, yes(v.embeddable), v.reason});
        text = heading(c.format, "embeddable table") + t.render(c.format);
    } else if (c.o2_mode == "tame") {
        auto a = dinf_tame_mult(c.k, c.l, c.cutoff);
        auto b = induced_mult({O2Subgroup::Kind::dihedral, c.k}, {InducingModule::Kind::m2, {}, c.l}, c.cutoff);
        Table t({"irrep", "tame", "induced", "cutoff"});
        t.row({"triv", std::to_string(a.triv), std::to_string(b.triv), std::to_string(c.cutoff)});
        t.row({"sgn", std::to_string(a.sgn), std::to_string(b.sgn), std::to_string(c.cutoff)});
        for (int m = 1; m <= c.cutoff; ++m)
            t.row({"V(" + std::to_string(m) + ")", std::to_string(a.v[m - 1]), std::to_string(b.v[m - 1]), std::to_string(c.cutoff)});
        text = heading(c.format, "tame multiplicities k=" + std::to_string(c.k) + " l=" + std::to_string(c.l)) + t.render(c.format);
        if (!(a == b)) throw Error("CertificateFailure", "o2sym", "tame and induced vectors differ");
    } else if (c.o2_mode == "ane") {
        bool ok = ane_consistency(c.n, c.cutoff);
        text = "ane_consistency\t" + std::to_string(c.n) + "\t" + std::to_string(c.cutoff) + "\t" + yes(ok) + "\n";
        if (!ok) throw Error("CertificateFailure", "o2sym", "branching axioms disagree");
    } else {
        throw Error("Usage", "cli", "unknown o2 mode " + c.o2_mode);
    }
    return {text, 0};
}

Outcome run_oracle(const RunConfig& c) {
    HopfPtr h;
    CoalgebraShape shape;
    std::optional<DihedralMinusOne> dm;
    std::string name;
    int K = c.ks.empty() ? 2 : c.ks[0];
    if (c.group == "klein") {
        shape.group = make_klein();
        name = "F(Klein)";
        h = function_algebra(shape.group, 4);
    } else if (c.group == "cyclic") {
        shape.group = make_cyclic(K);
        if (c.algebra == "group") {
            shape.kind = CoalgebraShape::Kind::group_likes;
            h = group_algebra(shape.group, lcm4(K));
            name = "CZ_" + std::to_string(K);
        } else {
            h = function_algebra(shape.group, lcm4(K));
            name = "F(Z_" + std::to_string(K) + ")";
        }
    } else {
        shape.group = make_dihedral(K);
        if (c.twisted || c.algebra == "twisted") {
            dm = dihedral_minus_one(K);
            h = dm->algebra;
            name = "(D_" + std::to_string(K) + ")_-1";
        } else if (c.algebra == "group") {
            shape.kind = CoalgebraShape::Kind::group_likes;
            h = group_algebra(shape.group, lcm4(K));
            name = "CD_" + std::to_string(K);
        } else {
            h = function_algebra(shape.group, lcm4(K));
            name = "F(D_" + std::to_string(K) + ")";
        }
    }
    auto res = brute_force_coideals(h, shape);
    std::optional<Census> census;
    if (c.group == "dihedral" && shape.kind == CoalgebraShape::Kind::functions) census = classify_ergodic(K);
    Table t({"index", "dim", "multiplicities", "commutative", "center_dim", "label"});
    for (size_t i = 0; i < res.coideals.size(); ++i) {
        const auto& co = res.coideals[i];
        std::string label = census ? identify_coideal(co, *census, dm ? &*dm : nullptr) : "";
        t.row({std::to_string(i), std::to_string(co.dim()), join(co.mult, ","), yes(co.commutative),
               std::to_string(co.center_dim), label.empty() ? "-" : label});
    }
    std::string text = heading(c.format, "coideals of " + name) + t.render(c.format);
    text += "count\t" + std::to_string(res.coideals.size()) + "\n";
    for (const auto& u : res.unresolved) text += "unresolved\t" + u + "\n";
    return {text, res.unresolved.empty() ? 0 : 1};
}

void emit_error(const Error& e) {
    Json j;
    j["code"] = e.code();
    j["module"] = e.module();
    j["witness"] = e.witness();
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgw: finite quantum groups of dihedral type"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "tsv";
    std::vector<int> ks;
    auto common = [&](CLI::App* s) {
        s->add_option("--format", format, "tsv, markdown or qgw-1")->check(CLI::IsMember({"tsv", "markdown", "qgw-1"}));
        s->add_option("-o,--out", cfg.out, "output path (default stdout)");
        s->add_option("--precision", cfg.precision, "bits for positivity decisions")->check(CLI::Range(64u, 4096u));
        s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto* build = app.add_subcommand("build", "emit a qgw-1 file for F(D_K), CD_K or (D_K)_-1");
    build->add_option("--k", ks, "K")->required()->expected(1);
    build->add_flag("--twisted", cfg.twisted, "the twisted algebra (D_K)_-1");
    build->add_option("--algebra", cfg.algebra, "functions, group or twisted")
        ->check(CLI::IsMember({"functions", "group", "twisted"}));
    common(build);
    auto* verify = app.add_subcommand("verify", "certificate suite on a qgw-1 file");
    verify->add_option("file", cfg.input, "qgw-1 file")->required();
    common(verify);
    auto* classify = app.add_subcommand("classify", "ergodic census and embeddable classification for one K");
    classify->add_option("--k", ks, "K")->required()->expected(1);
    common(classify);
    auto* count = app.add_subcommand("count", "classical against twisted embeddable counts");
    count->add_option("--k", ks, "even K values, comma separated")->required()->delimiter(',');
    common(count);
    auto* o2 = app.add_subcommand("o2", "symbolic O(2) computations");
    o2->add_option("mode", cfg.o2_mode, "scan-regular, embeddable, tame or ane")
        ->required()
        ->check(CLI::IsMember({"scan-regular", "embeddable", "tame", "ane"}));
    o2->add_option("--k-bound", cfg.k_bound);
    o2->add_option("--l-bound", cfg.l_bound);
    o2->add_option("--cutoff", cfg.cutoff, "largest V(m) tracked");
    o2->add_option("--k", cfg.k);
    o2->add_option("--l", cfg.l);
    o2->add_option("--n", cfg.n);
    common(o2);
    auto* oracle = app.add_subcommand("oracle", "brute-force coideal census (dim <= 8)");
    oracle->add_option("--k", ks, "group parameter")->expected(1);
    oracle->add_option("--group", cfg.group, "dihedral, cyclic or klein")->check(CLI::IsMember({"dihedral", "cyclic", "klein"}));
    oracle->add_option("--algebra", cfg.algebra, "functions, group or twisted")
        ->check(CLI::IsMember({"functions", "group", "twisted"}));
    oracle->add_flag("--twisted", cfg.twisted);
    common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.ks = ks;
    cfg.format = format == "markdown" ? Format::markdown : format == "qgw-1" ? Format::qgw1 : Format::tsv;
    for (auto* s : app.get_subcommands()) cfg.command = s->get_name();
    if (cfg.format == Format::qgw1 && cfg.command != "build") {
        emit_error(Error("Usage", "cli", "qgw-1 output is only produced by build"));
        return 2;
    }
    try {
        Outcome o;
        if (cfg.command == "build") o = run_build(cfg);
        else if (cfg.command == "verify") o = run_verify(cfg);
        else if (cfg.command == "classify") o = run_classify(cfg);
        else if (cfg.command == "count") o = run_count(cfg);
        else if (cfg.command == "o2") o = run_o2(cfg);
        else o = run_oracle(cfg);
        if (cfg.out.empty()) {
            std::cout << o.text;
        } else {
            std::ofstream f(cfg.out);
            f << o.text;
            if (!f) throw Error("Usage", "cli", "cannot write " + cfg.out);
        }
        return o.status;
    } catch (const Error& e) {
        emit_error(e);
        bool usage = e.code() == "Usage" || e.code() == "BadParams" || e.code() == "ParseError" ||
                     e.code() == "BadDivisor" || e.code() == "CutoffTooSmall" || e.code() == "OracleLimit";
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        emit_error(Error("Internal", "cli", e.what()));
        return 1;
    }
}
