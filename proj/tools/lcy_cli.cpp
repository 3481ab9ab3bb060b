#include "lcy/catalog.hpp"
#include "lcy/report.hpp"
#include "lcy/selftest.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lcy;

namespace {

constexpr int exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_internal = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    for (auto& tok : split(text)) {
        int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw UsageError("expected a comma separated list of integers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

// Options naming a symplectic class, shared by most subcommands.
struct ClassOptions {
    std::string space = "CP2";
    std::string delta;
    std::string mu;

    void add_to(CLI::App* app) {
        app->add_option("--space", space, "M<l>, CP2 or quadric");
        app->add_option("--delta", delta, "exceptional areas a/b,c/d,... (exact rationals)");
        app->add_option("--mu", mu, "quadric area of B (area of F is 1)");
    }

    SymplecticClass resolve(Json& inputs) const {
        AmbientSpace sp = AmbientSpace::parse(space);
        SymplecticClass w;
        if (sp.is_quadric()) {
            if (mu.empty()) throw UsageError("--space quadric needs --mu");
            if (!delta.empty()) throw UsageError("--delta does not apply to the quadric");
            w = SymplecticClass::quadric(parse_rational(mu));
        } else {
            if (!mu.empty()) throw UsageError("--mu only applies to the quadric");
            std::vector<Rational> d = delta.empty() ? std::vector<Rational>{} : parse_rational_list(delta);
            if (static_cast<int>(d.size()) != sp.l)
                throw UsageError(sp.name() + " needs " + std::to_string(sp.l) + " values in --delta, got " +
                                 std::to_string(d.size()));
            w = SymplecticClass::blowup(std::move(d));
        }
        inputs["w"] = symplectic_json(w);
        return w;
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Formula value for the count subcommand; nullopt when no closed formula covers w.
std::optional<FormulaValue> formula_count(const SymplecticClass& w, bool toric) {
    if (w.space.is_quadric() || w.space.l <= 1) {
        if (toric) return std::nullopt;
        return FormulaValue{count_minimal(w), true};
    }
    if (w.space.l == 2) return FormulaValue{toric ? count_m2_toric(w) : count_m2_general(w), true};
    if (w.space.l == 3 && toric) return FormulaValue{count_m3_toric(w), true};
    return toric ? restrictive_count_toric(w) : restrictive_count_general(w);
}

struct Invocation {
    Json inputs = Json::object();
    std::ostringstream out;
};

int run(const std::vector<std::string>& args, Invocation& inv);

int cmd_replay(const std::string& path, Invocation& inv) {
    Json m;
    try {
        m = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("bad manifest: ") + e.what());
    }
    if (!m.contains("command") || !m.contains("output_digest")) throw UsageError("manifest lacks command or output_digest");
    std::vector<std::string> args = m["command"].get<std::vector<std::string>>();
    if (!args.empty() && args.front() == "replay") throw UsageError("a manifest cannot replay another manifest");
    Invocation inner;
    int code = run(args, inner);
    const std::string digest = fnv1a_hex(inner.out.str());
    const bool same = digest == m["output_digest"].get<std::string>() && code == m.value("exit_code", 0);
    inv.out << (same ? "replay ok " : "replay differs ") << digest << "\n";
    return same ? exit_ok : exit_mismatch;
}

int run(const std::vector<std::string>& args, Invocation& inv) {
    CLI::App app{"Homological log Calabi-Yau divisors on rational surfaces", "lcy"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());
    std::ostream& out = inv.out;

    ClassOptions copt;
    bool toric = false;
    std::string format = "json";
    int workers = 1;
    std::string taut_format = "text";
    std::string method = "both";
    int region_l = -1;
    int config_index = 0;
    std::string svg_path, dot_path, artifact_path, seq_text, manifest_path;
    std::vector<int> path_ends;

    auto* en = app.add_subcommand("enumerate", "list LCY(M, w) up to equivalence");
    copt.add_to(en);
    en->add_flag("--toric", toric, "toric configurations only");
    en->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "text"}));
    en->add_option("--workers", workers, "search threads")->check(CLI::Range(1, 64));

    auto* co = app.add_subcommand("count", "closed formula and/or enumerator count");
    copt.add_to(co);
    co->add_flag("--toric", toric);
    co->add_option("--method", method)->check(CLI::IsMember({"formula", "enumerate", "both"}));
    co->add_option("--workers", workers)->check(CLI::Range(1, 64));

    auto* re = app.add_subcommand("region", "region of the reduced cone containing w");
    re->add_option("--l", region_l)->required()->check(CLI::Range(2, hard_max_l()));
    re->add_option("--delta", copt.delta)->required();
    re->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* po = app.add_subcommand("polygon", "Delzant polygon of a toric configuration");
    copt.add_to(po);
    po->add_option("--config-index", config_index, "index into the toric list")->check(CLI::NonNegativeNumber);
    po->add_option("--svg", svg_path, "write an SVG figure");

    auto* mg = app.add_subcommand("mutation-graph", "toric mutation graph");
    copt.add_to(mg);
    mg->add_option("--dot", dot_path, "write Graphviz DOT");
    mg->add_option("--path", path_ends, "shortest move sequence FROM TO")->expected(2);

    auto* rz = app.add_subcommand("realize", "smoothing closure of the toric set");
    copt.add_to(rz);

    auto* ta = app.add_subcommand("taut", "deformation tautness of a self-intersection sequence");
    ta->add_option("--seq", seq_text)->required();
    ta->add_option("--format", taut_format)->check(CLI::IsMember({"json", "text"}));

    auto* ca = app.add_subcommand("catalog", "class catalog as TSV");
    copt.add_to(ca);
    ca->add_flag("--toric", toric);

    auto* st = app.add_subcommand("selftest", "formulas against the enumerator over the built-in samples");
    st->add_option("--artifact", artifact_path, "write the full JSON artifact");

    auto* rp = app.add_subcommand("replay", "re-run a manifest and compare the output digest");
    rp->add_option("manifest", manifest_path)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, std::cerr) == 0 ? exit_ok : exit_usage;
    }

    if (rp->parsed()) return cmd_replay(manifest_path, inv);

    if (en->parsed()) {
        auto w = copt.resolve(inv.inputs);
        auto r = enumerate_lcy(w, toric, workers);
        if (format == "json") out << enumeration_json(r).dump(2) << "\n";
        else if (format == "tsv") out << enumeration_tsv(r);
        else {
            out << w.space.name() << " " << w.str() << ": " << r.count() << " configurations\n";
            for (auto& c : r.all) out << (is_toric(c) ? "toric  " : "       ") << c.str() << "\n";
        }
        return exit_ok;
    }
    if (co->parsed()) {
        auto w = copt.resolve(inv.inputs);
        std::optional<FormulaValue> f;
        if (method != "enumerate") {
            f = formula_count(w, toric);
            if (!f) throw UsageError("no closed " + std::string(toric ? "toric " : "") + "formula for " + w.space.name());
        }
        if (method == "formula") {
            out << (f->exact ? "" : "bound ") << f->value << "\n";
            return exit_ok;
        }
        auto r = enumerate_lcy(w, toric, workers);
        const int64_t e = toric ? r.toric_count() : r.count();
        if (method == "enumerate") {
            out << e << "\n";
            return exit_ok;
        }
        if (f->exact) {
            out << f->value << " / " << e << "\n";
            return f->value == e ? exit_ok : exit_mismatch;
        }
        out << "bound " << f->value << " > " << e << "\n";
        return f->value > e ? exit_ok : exit_mismatch;
    }
    if (re->parsed()) {
        copt.space = "M" + std::to_string(region_l);
        auto w = copt.resolve(inv.inputs);
        Json j;
        j["w"] = symplectic_json(w);
        j["reduced"] = is_reduced(w);
        j["c1_nef"] = is_c1_nef(w);
        j["restrictive"] = is_c1_nef(w) && is_restrictive(w);
        j["interior"] = is_interior(w);
        if (is_c1_nef(w)) {
            if (region_l == 2) {
                j["region"] = classify_m2(w).str();
                j["toric_count"] = count_m2_toric(w);
            } else if (region_l == 3) {
                auto lab = classify_m3(w);
                j["region"] = lab.str();
                j["toric_count"] = m3_region_value(lab);
            }
            if (region_l <= 5) j["toric_nonempty"] = toric_region_member(w);
        }
        if (format == "json") {
            out << j.dump(2) << "\n";
        } else {
            for (auto& [k, v] : j.items())
                if (k != "w") out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
        return exit_ok;
    }
    if (po->parsed()) {
        auto w = copt.resolve(inv.inputs);
        auto r = enumerate_lcy(w, true);
        if (config_index >= r.toric_count())
            throw UsageError("--config-index " + std::to_string(config_index) + " out of range (" +
                             std::to_string(r.toric_count()) + " toric configurations)");
        const auto& c = r.toric[static_cast<size_t>(config_index)];
        auto p = build_polygon(c, w);
        auto s = self_intersection_seq(c);
        Json j;
        j["w"] = symplectic_json(w);
        j["index"] = config_index;
        j["config"] = config_json(c, w);
        j["boundary"] = boundary_json(boundary_data(p));
        j["polygon"] = polygon_json(p);
        j["gs"] = gs_json(gs_solve(c, w));
        j["monodromy"] = monodromy(s);
        auto gset = generating_set(s);
        j["generating_set"] = {{"closes", gset.closes()}, {"unimodular", gset.unimodular()},
                               {"winding", gset.winding_number()}};
        out << j.dump(2) << "\n";
        if (!svg_path.empty()) write_file(svg_path, polygon_svg(p));
        return exit_ok;
    }
    if (mg->parsed()) {
        auto w = copt.resolve(inv.inputs);
        auto g = mutation_graph(w);
        Json j = mutation_graph_json(g);
        if (!path_ends.empty()) {
            const int n = static_cast<int>(g.nodes.size());
            if (path_ends[0] < 0 || path_ends[1] < 0 || path_ends[0] >= n || path_ends[1] >= n)
                throw UsageError("--path node index out of range (" + std::to_string(n) + " nodes)");
            auto path = mutation_path(g, path_ends[0], path_ends[1]);
            if (path) {
                Json steps = Json::array();
                for (auto& e : *path)
                    steps.push_back({{"from", e.from}, {"to", e.to}, {"move", e.move.str()}});
                j["path"] = steps;
            } else {
                j["path"] = nullptr;
            }
        }
        out << j.dump(2) << "\n";
        if (!dot_path.empty()) write_file(dot_path, mutation_graph_dot(g));
        return exit_ok;
    }
    if (rz->parsed()) {
        auto w = copt.resolve(inv.inputs);
        out << realization_json(realization_report(w)).dump(2) << "\n";
        return exit_ok;
    }
    if (ta->parsed()) {
        auto seq = parse_int_list(seq_text);
        inv.inputs["seq"] = seq;
        auto t = def_taut(seq);
        if (taut_format == "json") out << taut_json(seq, t).dump(2) << "\n";
        else out << t.str() << "\n";
        return exit_ok;
    }
    if (ca->parsed()) {
        auto w = copt.resolve(inv.inputs);
        if (!is_reduced(w)) throw UsageError("symplectic class " + w.str() + " is not reduced");
        std::vector<HomologyClass> cat;
        if (w.space.is_quadric()) cat = quadric_catalog(w);
        else cat = toric ? toric_catalog_members(w) : catalog_members(w);
        out << catalog_tsv(cat, w);
        return exit_ok;
    }
    if (st->parsed()) {
        auto r = run_selftest();
        for (auto& s : r.artifact["sections"])
            out << s["name"].get<std::string>() << ": " << s["checks"].get<int>() << " checks, "
                << s["mismatches"].get<int>() << " mismatches\n";
        out << "total: " << r.checks << " checks, " << r.mismatches << " mismatches\n";
        if (!artifact_path.empty()) write_file(artifact_path, r.artifact.dump(1) + "\n");
        return r.mismatches == 0 ? exit_ok : exit_mismatch;
    }
    return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    // --manifest FILE may appear anywhere; it is not part of the recorded command.
    std::string manifest_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--manifest") {
            if (i + 1 >= args.size()) {
                std::cerr << "error: --manifest needs a file name\n";
                return exit_usage;
            }
            manifest_path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
    }
    Invocation inv;
    int code = exit_internal;
    try {
        code = run(args, inv);
    } catch (const std::invalid_argument& e) {  // UsageError, LatticeError, DelzantError, bad rationals
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    const std::string text = inv.out.str();
    std::cout << text;
    if (!manifest_path.empty()) {
        Json m;
        m["tool_version"] = tool_version();
        m["command"] = args;
        m["inputs"] = inv.inputs;
        m["exit_code"] = code;
        m["output_digest"] = fnv1a_hex(text);
        std::ofstream f(manifest_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << manifest_path << "\n";
            return exit_usage;
        }
        f << m.dump(2) << "\n";
    }
    return code;
}
