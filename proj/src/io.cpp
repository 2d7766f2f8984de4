#include "fuzzpolar/io.hpp"

#include <cstdint>

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

namespace {

Rational parse_rational_field(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw InvalidInput(where + ": rational values must be strings");
    auto r = parse_rational(j.get<std::string>());
    if (!r)
        throw InvalidInput(where + ": malformed rational '" +
                           j.get<std::string>() + "'");
    return *r;
}

Vec parse_vector_field(const Json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw InvalidInput(where + ": expected a vector of length " +
                           std::to_string(dim));
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_rational_field(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json vector_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

} // namespace

const std::string& convention_ledger() {
    static const std::string text =
        "regions are closed; level sets use >=; [mu]_alpha = whole space for "
        "alpha <= 0; polar of the empty set is the whole dual space; polar of "
        "the whole space is {0}; sup of an empty down-set is 0; the fuzzy "
        "polar takes the supremum of the down-set even when not attained; "
        "scale searches run over signed powers of two; dimension cap 4";
    return text;
}

std::string convention_ledger_hash() {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : convention_ledger()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json region_to_json(const Region& r) {
    Json out;
    switch (r.kind) {
    case RegionKind::Empty:
        out["type"] = "empty";
        break;
    case RegionKind::WholeSpace:
        out["type"] = "whole_space";
        break;
    case RegionKind::Points:
    case RegionKind::VPolytope: {
        out["type"] = r.kind == RegionKind::Points ? "points" : "vpolytope";
        Json verts = Json::array();
        for (const auto& p : r.points) verts.push_back(vector_to_json(p));
        out["vertices"] = std::move(verts);
        break;
    }
    case RegionKind::HPolyhedron: {
        out["type"] = "hpolyhedron";
        Json hs = Json::array();
        for (const auto& h : r.halfspaces) {
            Json e;
            e["normal"] = vector_to_json(h.normal);
            e["offset"] = format_rational(h.offset);
            hs.push_back(std::move(e));
        }
        out["halfspaces"] = std::move(hs);
        break;
    }
    case RegionKind::Union: {
        out["type"] = "union";
        Json ms = Json::array();
        for (const auto& m : r.members) ms.push_back(region_to_json(m));
        out["regions"] = std::move(ms);
        break;
    }
    }
    return out;
}

Region region_from_json(const Json& j, int dim) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InvalidInput("region: missing 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "empty") return Region::empty(dim);
    if (type == "whole_space") return Region::whole_space(dim);
    if (type == "points" || type == "vpolytope") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw InvalidInput("region." + type + ": missing 'vertices'");
        std::vector<Vec> pts;
        for (const auto& v : j["vertices"])
            pts.push_back(parse_vector_field(v, dim, "region.vertices"));
        return type == "points" ? Region::make_points(dim, std::move(pts))
                                : Region::vpolytope(dim, std::move(pts));
    }
    if (type == "hpolyhedron") {
        if (!j.contains("halfspaces") || !j["halfspaces"].is_array())
            throw InvalidInput("region.hpolyhedron: missing 'halfspaces'");
        std::vector<Halfspace> hs;
        for (const auto& h : j["halfspaces"]) {
            if (!h.is_object() || !h.contains("normal") || !h.contains("offset"))
                throw InvalidInput("region.halfspaces: entries need "
                                   "'normal' and 'offset'");
            hs.push_back({parse_vector_field(h["normal"], dim, "halfspace.normal"),
                          parse_rational_field(h["offset"], "halfspace.offset")});
        }
        return Region::hpolyhedron(dim, std::move(hs));
    }
    if (type == "union") {
        if (!j.contains("regions") || !j["regions"].is_array())
            throw InvalidInput("region.union: missing 'regions'");
        std::vector<Region> ms;
        for (const auto& m : j["regions"]) ms.push_back(region_from_json(m, dim));
        return Region::make_union(dim, std::move(ms));
    }
    throw InvalidInput("region: unknown type '" + type + "'");
}

Json document_to_json(const StepFuzzySet& mu, const std::optional<Mat>& pairing) {
    Json out;
    out["dimension"] = mu.dim();
    Json levels = Json::array();
    for (const auto& lv : mu.levels()) {
        Json e;
        e["grade"] = format_rational(lv.grade);
        e["region"] = region_to_json(lv.region);
        levels.push_back(std::move(e));
    }
    out["levels"] = std::move(levels);
    if (pairing) {
        Json p = Json::array();
        for (const auto& row : *pairing) p.push_back(vector_to_json(row));
        out["pairing"] = std::move(p);
    }
    return out;
}

FuzzySetDocument document_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") ||
        !j["dimension"].is_number_integer())
        throw InvalidInput("document: missing integer 'dimension'");
    const int dim = j["dimension"].get<int>();
    if (dim < 1) throw InvalidInput("document: dimension must be >= 1");
    if (!j.contains("levels") || !j["levels"].is_array())
        throw InvalidInput("document: missing 'levels'");
    std::vector<Level> levels;
    for (const auto& e : j["levels"]) {
        if (!e.is_object() || !e.contains("grade") || !e.contains("region"))
            throw InvalidInput("document.levels: entries need 'grade' and 'region'");
        Grade g = parse_rational_field(e["grade"], "level.grade");
        if (g <= 0 || g > 1)
            throw InvalidInput("level.grade: invalid-grade '" +
                               format_rational(g) + "' outside (0,1]");
        levels.push_back({g, region_from_json(e["region"], dim)});
    }
    std::optional<Mat> pairing;
    if (j.contains("pairing")) {
        if (!j["pairing"].is_array() || static_cast<int>(j["pairing"].size()) != dim)
            throw InvalidInput("document.pairing: expected a " +
                               std::to_string(dim) + "-row matrix");
        Mat p;
        for (const auto& row : j["pairing"])
            p.push_back(parse_vector_field(row, dim, "pairing row"));
        pairing = std::move(p);
    }
    return {StepFuzzySet::construct(dim, std::move(levels)), std::move(pairing)};
}

std::string write_document(const StepFuzzySet& mu, const std::optional<Mat>& pairing) {
    return document_to_json(mu, pairing).dump(2) + "\n";
}

FuzzySetDocument parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("document: not valid JSON");
    return document_from_json(j);
}

std::vector<Vec> vectors_from_json(const Json& j, int dim) {
    if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
        throw InvalidInput("vectors document: missing 'vectors'");
    std::vector<Vec> out;
    for (const auto& v : j["vectors"])
        out.push_back(parse_vector_field(v, dim, "vectors"));
    return out;
}

Json vectors_to_json(const std::vector<Vec>& vs) {
    Json out;
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(vector_to_json(v));
    out["vectors"] = std::move(arr);
    return out;
}

Json grade_table_to_json(const GradeTable& table) {
    Json out;
    Json entries = Json::array();
    for (const auto& e : table) {
        Json row;
        row["point"] = vector_to_json(e.point);
        row["grade"] = format_rational(e.grade);
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

GradeTable grade_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw InvalidInput("grade table: missing 'entries'");
    GradeTable table;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("point") || !e.contains("grade"))
            throw InvalidInput("grade table entries need 'point' and 'grade'");
        if (!e["point"].is_array())
            throw InvalidInput("grade table: 'point' must be an array");
        table.push_back(
            {parse_vector_field(e["point"], static_cast<int>(e["point"].size()),
                                "table.point"),
             parse_rational_field(e["grade"], "table.grade")});
    }
    return table;
}

Json base_report_to_json(const BaseReport& r) {
    Json out;
    Json c1 = Json::array();
    for (const auto& rec : r.c1) {
        Json e;
        e["pair"] = Json::array({rec.first, rec.second});
        e["satisfied"] = rec.satisfied;
        if (rec.satisfied) {
            e["dominating_index"] = rec.dominating_index;
            e["dominating_scale"] = format_rational(rec.dominating_scale);
            e["strict"] = rec.strict;
            e["via_join"] = rec.via_join;
        }
        c1.push_back(std::move(e));
    }
    out["c1"] = std::move(c1);
    out["c1_strictness_warning"] = r.c1_strictness_warning;
    out["c2_by_construction"] = r.c2_by_construction;
    Json c3 = Json::array();
    for (const auto& rec : r.c3) {
        Json e;
        e["basis_vector"] = vector_to_json(rec.basis_vector);
        e["satisfied"] = rec.satisfied;
        if (rec.satisfied) {
            e["witness_index"] = rec.witness_index;
            e["witness_grade"] = format_rational(rec.witness_grade);
        }
        c3.push_back(std::move(e));
    }
    out["c3"] = std::move(c3);
    out["overall"] = r.overall;
    return out;
}

Json mackey_report_to_json(const MackeyReport& r) {
    Json out;
    Json nb = Json::array();
    for (const auto& rec : r.neighborhoods) {
        Json e;
        e["preconditions_ok"] = rec.preconditions_ok;
        e["is_closed_ac"] = rec.is_closed_ac;
        e["bipolar_equal"] = rec.bipolar_equal;
        e["polar_weakly_compact"] = rec.polar_weakly_compact;
        if (!rec.error.empty()) e["error"] = rec.error;
        nb.push_back(std::move(e));
    }
    out["neighborhoods"] = std::move(nb);
    Json fn = Json::array();
    for (const auto& rec : r.functionals) {
        Json e;
        e["functional"] = vector_to_json(rec.functional);
        e["continuous"] = rec.witness.has_value();
        if (rec.witness) {
            e["witness_index"] = rec.witness->first;
            e["witness_grade"] = format_rational(rec.witness->second);
        }
        fn.push_back(std::move(e));
    }
    out["functionals"] = std::move(fn);
    out["overall"] = r.overall;
    return out;
}

Json compare_report_to_json(const CompareReport& r) {
    Json out;
    out["pass"] = r.pass();
    Json diffs = Json::array();
    for (const auto& e : r.differences) {
        Json d;
        d["point"] = vector_to_json(e.point);
        d["table_grade"] = format_rational(e.grade);
        diffs.push_back(std::move(d));
    }
    out["differences"] = std::move(diffs);
    return out;
}

Json stamped_report(Json payload) {
    Json out;
    out["tool_version"] = kToolVersion;
    out["convention_hash"] = convention_ledger_hash();
    out["report"] = std::move(payload);
    return out;
}

} // namespace fuzzpolar
