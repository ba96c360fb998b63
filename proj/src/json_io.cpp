#include "schurpath/json_io.hpp"

#include "schurpath/error.hpp"

namespace schurpath {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) parse_error(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing \"") + key + "\"");
    return *it;
}

template <class T>
T get(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        parse_error(std::string("bad value for \"") + what + "\"");
    }
}

Json integer(const Integer& v) { return v.str(); }

}  // namespace

std::string_view to_string(VerificationMethod m) {
    switch (m) {
        case VerificationMethod::Auto: return "auto";
        case VerificationMethod::Full: return "full-expansion";
        case VerificationMethod::Multipoint: return "multipoint";
    }
    return "auto";
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SkewShape& s) { return Json{{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}}; }

Json to_json(const StripSpec& s) { return Json{{"t", s.boxes}, {"r", s.row}, {"m", s.span}}; }

Json to_json(const Tableau& t) { return Json{{"shape", to_json(t.shape)}, {"rows", t.rows}, {"N", t.alphabet}}; }

Json to_json(const PathFamily& f) {
    Json j{{"shape", to_json(f.shape)}, {"shift", f.shift}, {"N", f.top}, {"tableau", paths_to_tableau(f).rows}};
    if (f.rows() != f.shape.outer.length()) j["rows"] = f.rows();
    return j;
}

Json to_json(const Overlay& ov) { return Json{{"white", to_json(ov.white())}, {"black", to_json(ov.black())}}; }

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"exp", m.exponents}, {"coeff", integer(c)}});
    return Json{{"N", p.variables()}, {"terms", std::move(terms)}};
}

Json to_json(const Term& t) {
    if (t.zero) return nullptr;
    return Json::array({to_json(t.first.shape), to_json(t.second.shape)});
}

Json to_json(const Identity& id) {
    Json lhs = Json::array();
    Json rhs = Json::array();
    for (const Term& t : id.lhs) lhs.push_back(to_json(t));
    for (const Term& t : id.rhs) rhs.push_back(to_json(t));
    return Json{{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}, {"N", id.variables}, {"provenance", id.provenance}};
}

Json to_json(const BoundaryPoint& p, int top) {
    return Json::array({p.x, p.side == Side::Top ? top : 1});
}

Json to_json(const BicolouredPath& b, int top) {
    return Json{{"from", to_json(b.from.where(), top)},
                {"to", to_json(b.to.where(), top)},
                {"from_index", b.from.index},
                {"to_index", b.to.index},
                {"arcs", b.arcs.size()}};
}

Json to_json(const VerificationReport& r, bool timing) {
    Json j{{"method", to_string(r.method)},
           {"N", r.variables},
           {"points_tested", r.points_tested},
           {"seed", r.seed},
           {"verdict", r.pass ? "Pass" : "Fail"},
           {"max_magnitude", integer(r.max_magnitude)}};
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    if (!r.witness_monomial.empty()) j["witness_monomial"] = r.witness_monomial;
    if (!r.values.empty()) {
        Json values = Json::array();
        for (const PointValues& v : r.values) {
            values.push_back(Json{{"point", v.point}, {"lhs", integer(v.lhs)}, {"rhs", integer(v.rhs)}});
        }
        j["values"] = std::move(values);
    }
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) parse_error("a partition is an array of integers");
    return Partition::from(get<std::vector<int>>(j, "partition"));
}

SkewShape skew_shape_from_json(const Json& j) {
    return SkewShape(partition_from_json(field(j, "outer")), partition_from_json(field(j, "inner")));
}

StripSpec strip_from_json(const Json& j) {
    return StripSpec{get<int>(field(j, "t"), "t"), get<int>(field(j, "r"), "r"), get<int>(field(j, "m"), "m")};
}

Tableau tableau_from_json(const Json& j) {
    return validate_tableau(skew_shape_from_json(field(j, "shape")),
                            get<std::vector<std::vector<int>>>(field(j, "rows"), "rows"), get<int>(field(j, "N"), "N"));
}

PathFamily path_family_from_json(const Json& j) {
    const SkewShape shape = skew_shape_from_json(field(j, "shape"));
    const int n = get<int>(field(j, "N"), "N");
    const auto shift = get<std::int64_t>(field(j, "shift"), "shift");
    const int rows = j.contains("rows") ? get<int>(j["rows"], "rows") : shape.outer.length();
    const Tableau t = validate_tableau(shape, get<std::vector<std::vector<int>>>(field(j, "tableau"), "tableau"), n);
    return tableau_to_paths(t, shift, rows);
}

Overlay overlay_from_json(const Json& j) {
    return Overlay(path_family_from_json(field(j, "white")), path_family_from_json(field(j, "black")));
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p(get<int>(field(j, "N"), "N"));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) parse_error("\"terms\" must be an array");
    for (const Json& t : terms) {
        Integer c;
        try {
            c = Integer(get<std::string>(field(t, "coeff"), "coeff"));
        } catch (const std::runtime_error&) {
            parse_error("bad value for \"coeff\"");
        }
        p.add_term(Monomial(get<std::vector<int>>(field(t, "exp"), "exp")), c);
    }
    return p;
}

}  // namespace schurpath
