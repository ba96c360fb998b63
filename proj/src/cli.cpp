#include "schurpath/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "schurpath/error.hpp"
#include "schurpath/golden.hpp"
#include "schurpath/identities.hpp"
#include "schurpath/json_io.hpp"
#include "schurpath/render.hpp"
#include "schurpath/schur.hpp"

namespace schurpath::cli {

namespace {

struct UsageError : std::runtime_error {
    UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long long parse_int(const std::string& flag, const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError(flag, "\"" + s + "\" is not an integer");
    }
    if (used != s.size()) throw UsageError(flag, "\"" + s + "\" is not an integer");
    return v;
}

std::vector<int> parse_ints(const std::string& flag, const std::string& s) {
    std::vector<int> out;
    if (trim(s).empty()) return out;
    for (const std::string& part : split(s, ',')) out.push_back(static_cast<int>(parse_int(flag, part)));
    return out;
}

Partition parse_partition(const std::string& flag, const std::string& s) {
    try {
        return Partition::from(parse_ints(flag, s));
    } catch (const Error& e) {
        throw UsageError(flag, e.what());
    }
}

/// "a,b,c/d,e"; the inner part may be empty or omitted.
SkewShape parse_shape(const std::string& flag, const std::string& s) {
    const auto slash = s.find('/');
    const Partition outer = parse_partition(flag, s.substr(0, slash));
    const Partition inner = slash == std::string::npos ? Partition{} : parse_partition(flag, s.substr(slash + 1));
    try {
        return SkewShape(outer, inner);
    } catch (const Error& e) {
        throw UsageError(flag, e.what());
    }
}

/// "t:(r,m);..."
std::vector<StripSpec> parse_strips(const std::string& flag, const std::string& s) {
    static const std::regex item(R"(\s*(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::vector<StripSpec> out;
    for (const std::string& part : split(s, ';')) {
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw UsageError(flag, "expected t:(r,m), got \"" + part + "\"");
        out.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])});
    }
    return out;
}

/// "x,level;..." where level is 1, N or the numeric top level.
std::vector<BoundaryPoint> parse_points(const std::string& flag, const std::string& s, int top) {
    std::vector<BoundaryPoint> out;
    for (const std::string& part : split(s, ';')) {
        const auto fields = split(part, ',');
        if (fields.size() != 2) throw UsageError(flag, "expected x,level, got \"" + part + "\"");
        const std::int64_t x = parse_int(flag, fields[0]);
        if (fields[1] == "N") {
            out.push_back({x, Side::Top});
            continue;
        }
        const long long level = parse_int(flag, fields[1]);
        if (level == 1) {
            out.push_back({x, Side::Bottom});
        } else if (top < 0 || level == top) {
            out.push_back({x, Side::Top});
        } else {
            throw UsageError(flag, "level " + fields[1] + " is neither 1 nor N=" + std::to_string(top));
        }
    }
    return out;
}

Json read_json(const std::string& flag, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError(flag, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(flag, std::string("invalid JSON: ") + e.what());
    }
}

Overlay load_overlay(const std::string& flag, const std::string& path) {
    try {
        return overlay_from_json(read_json(flag, path));
    } catch (const Error& e) {
        throw UsageError(flag, e.what());
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SCHURPATH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 42;
}

struct VerifyFlags {
    std::string method = "auto";
    int points = 20;
    std::uint64_t seed = default_seed();
    double budget = 1e6;
    bool verbose = false;
    bool timing = false;

    void add_to(CLI::App* app) {
        app->add_option("--method", method, "auto, full or multipoint")
            ->check(CLI::IsMember({"auto", "full", "multipoint"}));
        app->add_option("--points", points, "evaluation points for multipoint")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "seed for evaluation points (default $SCHURPATH_SEED or 42)");
        app->add_option("--budget", budget, "tableau count below which auto expands fully");
        app->add_flag("--verbose", verbose, "include per-point values");
        app->add_flag("--timing", timing, "include elapsed time");
    }

    VerificationOptions options() const {
        VerificationOptions o;
        o.method = method == "full"         ? VerificationMethod::Full
                   : method == "multipoint" ? VerificationMethod::Multipoint
                                            : VerificationMethod::Auto;
        o.points = points;
        o.seed = seed;
        o.budget = budget;
        o.keep_values = verbose;
        return o;
    }
};

int emit_identity(const Identity& id, const VerifyFlags& flags, std::ostream& out) {
    const VerificationReport report = verify_identity(id, flags.options());
    out << Json{{"identity", to_json(id)}, {"report", to_json(report, flags.timing)}}.dump(2) << "\n";
    return report.pass ? 0 : 1;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("-o", "cannot write " + path);
    file << text;
    out << Json{{"output", path}, {"bytes", text.size()}}.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew Schur functions, lattice path overlays and recolouring identities", "schurpath"};
    app.require_subcommand(1, 1);

    std::string shape, point, method = "enum", overlay_path, starts, white, black, s_points, lambda, mu, strips,
                                  output, highlight, shapes;
    int vars = 0, rows = -1, white_rows = -1, black_rows = -1;
    std::int64_t shift = 0;
    bool all = false, circle = false;
    VerifyFlags verify;

    auto* compute = app.add_subcommand("compute", "skew Schur polynomial or its value at a point");
    compute->add_option("--shape", shape, "skew shape a,b,c/d,e")->required();
    compute->add_option("--vars", vars, "number of variables N")->required()->check(CLI::PositiveNumber);
    compute->add_option("--method", method, "enum (tableau enumeration) or eval (determinant)")
        ->check(CLI::IsMember({"enum", "eval"}));
    compute->add_option("--point", point, "comma-separated values x1..xN");

    auto* endpoints_cmd = app.add_subcommand("endpoints", "starting and ending points of a shape");
    endpoints_cmd->add_option("--shape", shape, "skew shape a,b,c/d,e")->required();
    endpoints_cmd->add_option("--shift", shift, "horizontal shift");
    endpoints_cmd->add_option("--rows", rows, "number of paths (default: length of outer)");

    auto* recolour_cmd = app.add_subcommand("recolour", "trace and recolour bicoloured paths");
    recolour_cmd->add_option("--overlay", overlay_path, "overlay JSON file")->required();
    recolour_cmd->add_option("--start", starts, "coloured points x,level;...");
    recolour_cmd->add_flag("--all", all, "list every bicoloured path and the induced matching");

    auto* theorem = app.add_subcommand("identity-theorem", "identity from reorienting the edges at S");
    theorem->add_option("--white", white, "white skew shape (shift 0)")->required();
    theorem->add_option("--black", black, "black skew shape")->required();
    theorem->add_option("--shift", shift, "shift of the black shape");
    theorem->add_option("--white-rows", white_rows, "white path count (default: length of outer)");
    theorem->add_option("--black-rows", black_rows, "black path count (default: length of outer)");
    theorem->add_option("--s", s_points, "inward coloured points x,level;... (level 1 or N)")->required();
    theorem->add_option("--vars", vars, "number of variables (default: largest column height)");
    verify.add_to(theorem);

    auto* gps = app.add_subcommand("identity-gps", "identity from adding partial border strips");
    gps->add_option("--lambda", lambda, "partition")->required();
    gps->add_option("--mu", mu, "inner partition (default empty)");
    gps->add_option("--strips", strips, "strips t:(r,m);...")->required();
    gps->add_option("--vars", vars, "number of variables (default: largest column height)");
    verify.add_to(gps);

    auto* render = app.add_subcommand("render", "SVG of an overlay or of Ferrers diagrams");
    render->add_option("--overlay", overlay_path, "overlay JSON file");
    render->add_option("--shapes", shapes, "Ferrers diagrams a,b/c;d,e/f drawn on top of each other");
    render->add_option("--highlight", highlight, "highlight bicoloured paths through x,level;...");
    render->add_flag("--all", all, "highlight every bicoloured path");
    render->add_flag("--circle", circle, "draw the circular configuration instead");
    render->add_option("-o,--output", output, "output file (default standard output)");

    auto* selftest = app.add_subcommand("selftest", "run the worked examples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            const SkewShape sh = parse_shape("--shape", shape);
            Json j;
            std::vector<Integer> values;
            if (!point.empty()) {
                for (int v : parse_ints("--point", point)) values.emplace_back(v);
                if (static_cast<int>(values.size()) != vars) {
                    throw UsageError("--point", std::to_string(values.size()) + " values for N=" + std::to_string(vars));
                }
            }
            if (method == "eval") {
                if (point.empty()) throw UsageError("--point", "required with --method eval");
                j = Json{{"N", vars}, {"point", parse_ints("--point", point)}, {"value", skew_schur_eval(sh, values).str()}};
            } else {
                const Polynomial p = skew_schur(sh, vars);
                j = to_json(p);
                if (!point.empty()) {
                    j["point"] = parse_ints("--point", point);
                    j["value"] = p.evaluate(values).str();
                }
            }
            out << j.dump(2) << "\n";
            return 0;
        }
        if (endpoints_cmd->parsed()) {
            const SkewShape sh = parse_shape("--shape", shape);
            const int r = rows < 0 ? sh.outer.length() : rows;
            if (r < sh.outer.length()) throw UsageError("--rows", "fewer rows than the outer partition has parts");
            const auto [s, e] = endpoints(sh, r, shift);
            out << Json{{"rows", r}, {"shift", shift}, {"starts", s.values}, {"ends", e.values}}.dump(2) << "\n";
            return 0;
        }
        if (recolour_cmd->parsed()) {
            const Overlay ov = load_overlay("--overlay", overlay_path);
            if (all) {
                const BicolouredPaths bp = all_bicoloured(ov);
                Json paths = Json::array();
                for (const BicolouredPath& b : bp.paths) paths.push_back(to_json(b, ov.top()));
                Json edges = Json::array();
                for (const auto& [a, b] : bp.matching.edges) edges.push_back(Json::array({a, b}));
                out << Json{{"paths", std::move(paths)}, {"matching", std::move(edges)}}.dump(2) << "\n";
                return 0;
            }
            if (starts.empty()) throw UsageError("--start", "required unless --all is given");
            const auto points = parse_points("--start", starts, ov.top());
            std::vector<BicolouredPath> chosen;
            for (const BoundaryPoint& p : points) {
                if (ov.configuration().find(p) == nullptr) {
                    throw UsageError("--start", "(" + std::to_string(p.x) + "," +
                                                    std::to_string(ov.lattice_point(p).level) +
                                                    ") is not a coloured point");
                }
                chosen.push_back(trace_bicoloured(ov, p));
            }
            const Overlay r = recolour(ov, chosen);
            Json paths = Json::array();
            for (const BicolouredPath& b : chosen) paths.push_back(to_json(b, ov.top()));
            out << Json{{"paths", std::move(paths)},
                        {"white", {{"shape", to_json(r.white().shape)}, {"shift", r.white().shift}, {"rows", r.white().rows()}}},
                        {"black", {{"shape", to_json(r.black().shape)}, {"shift", r.black().shift}, {"rows", r.black().rows()}}},
                        {"overlay", to_json(r)}}
                       .dump(2)
                << "\n";
            return 0;
        }
        if (theorem->parsed()) {
            const SkewShape w = parse_shape("--white", white);
            const SkewShape b = parse_shape("--black", black);
            if (white_rows >= 0 && white_rows < w.outer.length()) throw UsageError("--white-rows", "too few rows");
            if (black_rows >= 0 && black_rows < b.outer.length()) throw UsageError("--black-rows", "too few rows");
            const auto s = parse_points("--s", s_points, vars > 0 ? vars : -1);
            Identity id;
            try {
                id = theorem_identity(PlacedShape(w, 0, white_rows), PlacedShape(b, shift, black_rows), s, vars);
            } catch (const Error& e) {
                throw UsageError("--s", e.what());
            }
            return emit_identity(id, verify, out);
        }
        if (gps->parsed()) {
            const Partition l = parse_partition("--lambda", lambda);
            const Partition m = parse_partition("--mu", mu);
            const auto st = parse_strips("--strips", strips);
            Identity id;
            try {
                id = gps_identity(l, m, st, vars);
            } catch (const Error& e) {
                throw UsageError(e.code() == ErrorCode::NotContained ? "--mu" : "--strips", e.what());
            }
            return emit_identity(id, verify, out);
        }
        if (render->parsed()) {
            if (!shapes.empty()) {
                std::vector<FerrersLayer> layers;
                const char* strokes[] = {"#9a9a9a", "black"};
                std::size_t k = 0;
                for (const std::string& part : split(shapes, ';')) {
                    layers.push_back({parse_shape("--shapes", part), RenderStyle{strokes[std::min<std::size_t>(k++, 1)], 1.5, false}});
                }
                write_text(output, render_ferrers(layers), out);
                return 0;
            }
            if (overlay_path.empty()) throw UsageError("--overlay", "--overlay or --shapes is required");
            const Overlay ov = load_overlay("--overlay", overlay_path);
            if (circle) {
                const BicolouredPaths bp = all_bicoloured(ov);
                write_text(output, render_configuration(ov.configuration(), &bp.matching), out);
                return 0;
            }
            std::vector<BicolouredPath> lit;
            if (all) {
                lit = all_bicoloured(ov).paths;
            } else if (!highlight.empty()) {
                for (const BoundaryPoint& p : parse_points("--highlight", highlight, ov.top())) {
                    if (ov.configuration().find(p) == nullptr) throw UsageError("--highlight", "not a coloured point");
                    lit.push_back(trace_bicoloured(ov, p));
                }
            }
            write_text(output, render_overlay(ov, lit), out);
            return 0;
        }
        if (selftest->parsed()) {
            Json checks = Json::array();
            bool pass = true;
            for (const golden::Check& c : golden::run_suite()) {
                pass = pass && c.pass;
                checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            }
            out << Json{{"checks", std::move(checks)}, {"verdict", pass ? "Pass" : "Fail"}}.dump(2) << "\n";
            return pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace schurpath::cli
