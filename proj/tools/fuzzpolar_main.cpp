#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/io.hpp"
#include "fuzzpolar/oracle.hpp"
#include "fuzzpolar/polar.hpp"
#include "fuzzpolar/topology.hpp"

using namespace fuzzpolar;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    Json j = Json::parse(read_file(path), nullptr, false);
    if (j.is_discarded())
        throw InvalidInput("file '" + path + "' is not valid JSON");
    return j;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file '" + output + "'");
    out << text;
}

void emit_json(const Json& j, const std::string& output) {
    emit(j.dump(2) + "\n", output);
}

FuzzySetDocument load_set(const std::string& path) {
    return document_from_json(read_json(path));
}

// {"dimension": n, "pairing": optional matrix, "sets": [set documents]}
struct SetListDocument {
    int dim = 0;
    std::optional<Mat> pairing;
    std::vector<StepFuzzySet> sets;

    DualPair dual_pair() const {
        return pairing ? DualPair(dim, *pairing) : DualPair(dim);
    }
};

SetListDocument load_set_list(const std::string& path) {
    Json j = read_json(path);
    if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array() ||
        j["sets"].empty())
        throw InvalidInput("set list document: missing nonempty 'sets'");
    SetListDocument out;
    bool first = true;
    for (const auto& e : j["sets"]) {
        auto doc = document_from_json(e);
        if (first) {
            out.dim = doc.set.dim();
            first = false;
        } else if (doc.set.dim() != out.dim) {
            throw InvalidInput("set list document: mixed dimensions");
        }
        out.sets.push_back(std::move(doc.set));
    }
    if (j.contains("pairing")) {
        Json probe;
        probe["dimension"] = out.dim;
        probe["levels"] = Json::array();
        probe["pairing"] = j["pairing"];
        out.pairing = document_from_json(probe).pairing;
    }
    return out;
}

Json set_list_to_json(int dim, const std::optional<Mat>& pairing,
                      const std::vector<StepFuzzySet>& sets) {
    Json out;
    out["dimension"] = dim;
    if (pairing) {
        Json p = Json::array();
        for (const auto& row : *pairing) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(format_rational(x));
            p.push_back(std::move(r));
        }
        out["pairing"] = std::move(p);
    }
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(document_to_json(s, pairing));
    out["sets"] = std::move(arr);
    return out;
}

std::vector<Vec> load_vectors(const std::string& path, int dim) {
    return vectors_from_json(read_json(path), dim);
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    auto r = parse_rational(text);
    if (!r) throw InvalidInput(what + ": malformed rational '" + text + "'");
    return *r;
}

GridAxis parse_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw InvalidInput("grid axis '" + spec + "' must be min:max:step");
    return {parse_rational_arg(parts[0], "grid min"),
            parse_rational_arg(parts[1], "grid max"),
            parse_rational_arg(parts[2], "grid step")};
}

std::size_t grid_cap() {
    if (const char* env = std::getenv("FUZZYPOLAR_MAX_GRID")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw InvalidInput("FUZZYPOLAR_MAX_GRID must be a positive integer");
    }
    return Grid::kDefaultCap;
}

ScaleSearch parse_scale_range(const std::string& spec) {
    ScaleSearch s;
    if (spec.empty()) return s;
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("--scale-range must be exp_lo:exp_hi");
    try {
        s.exp_lo = std::stoi(spec.substr(0, colon));
        s.exp_hi = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw InvalidInput("--scale-range must be exp_lo:exp_hi");
    }
    if (s.exp_lo > s.exp_hi)
        throw InvalidInput("--scale-range: exp_lo must not exceed exp_hi");
    return s;
}

PredicateKind parse_predicate(const std::string& name) {
    if (name == "balanced") return PredicateKind::Balanced;
    if (name == "convex") return PredicateKind::Convex;
    if (name == "absolutely_convex") return PredicateKind::AbsolutelyConvex;
    if (name == "absorbing") return PredicateKind::Absorbing;
    if (name == "seminorm") return PredicateKind::Seminorm;
    if (name == "weakly_bounded") return PredicateKind::WeaklyBounded;
    if (name == "closed") return PredicateKind::Closed;
    throw InvalidInput("unknown predicate '" + name + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact step-fuzzy-set calculus over rational dual pairs"};
    app.require_subcommand(1);

    std::string in_path, in2_path, out_path;
    std::string basis_path, functionals_path, table_path, points_path;
    std::string theta_text, scalar_text, lambda_text, matrix_text;
    std::string predicate_name, kind_name = "convex", mode_name = "definition";
    std::string op_name, scale_range;
    std::vector<std::string> grid_specs;
    bool as_json = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "Write the result to a file");
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "Machine-readable stamped report");
    };

    auto* polar_cmd = app.add_subcommand("polar", "Fuzzy polar of a set");
    polar_cmd->add_option("input", in_path)->required();
    add_output(polar_cmd);

    auto* bipolar_cmd = app.add_subcommand("bipolar", "Fuzzy polar applied twice");
    bipolar_cmd->add_option("input", in_path)->required();
    add_output(bipolar_cmd);

    auto* add_cmd = app.add_subcommand("add", "Fuzzy Minkowski sum");
    add_cmd->add_option("first", in_path)->required();
    add_cmd->add_option("second", in2_path)->required();
    add_output(add_cmd);

    auto* scale_cmd = app.add_subcommand("scale", "Scalar multiple of a set");
    scale_cmd->add_option("scalar", scalar_text)->required();
    scale_cmd->add_option("input", in_path)->required();
    add_output(scale_cmd);

    auto* sup_cmd = app.add_subcommand("sup", "Lattice supremum");
    sup_cmd->add_option("first", in_path)->required();
    sup_cmd->add_option("second", in2_path)->required();
    add_output(sup_cmd);

    auto* inf_cmd = app.add_subcommand("inf", "Lattice infimum");
    inf_cmd->add_option("first", in_path)->required();
    inf_cmd->add_option("second", in2_path)->required();
    add_output(inf_cmd);

    auto* level_cmd = app.add_subcommand("level", "Theta level set");
    level_cmd->add_option("input", in_path)->required();
    level_cmd->add_option("--theta", theta_text)->required();
    add_output(level_cmd);

    auto* check_cmd = app.add_subcommand("check", "Evaluate a predicate");
    check_cmd->add_option("input", in_path)->required();
    check_cmd->add_option("--predicate", predicate_name)->required();

    auto* env_cmd = app.add_subcommand("envelope", "Convex-type envelope");
    env_cmd->add_option("input", in_path)->required();
    env_cmd->add_option("--kind", kind_name,
                        "convex | absolutely_convex | closure");
    add_output(env_cmd);

    auto* push_cmd = app.add_subcommand("pushforward", "Image under a linear map");
    push_cmd->add_option("input", in_path)->required();
    push_cmd->add_option("--matrix", matrix_text,
                         "Row-major JSON matrix of rational strings")
        ->required();
    add_output(push_cmd);

    auto* absorbs_cmd = app.add_subcommand("absorbs", "Absorption scale witness");
    absorbs_cmd->add_option("mu", in_path)->required();
    absorbs_cmd->add_option("eta", in2_path)->required();
    add_output(absorbs_cmd);
    add_json(absorbs_cmd);

    auto* bval_cmd = app.add_subcommand("base-validate",
                                        "Check (c1)-(c3) on a collection");
    bval_cmd->add_option("collection", in_path)->required();
    bval_cmd->add_option("--basis", basis_path)->required();
    bval_cmd->add_option("--scale-range", scale_range);
    add_output(bval_cmd);
    add_json(bval_cmd);

    auto* bpolar_cmd = app.add_subcommand("base-polar",
                                          "Polar base of a collection");
    bpolar_cmd->add_option("collection", in_path)->required();
    add_output(bpolar_cmd);

    auto* weak_cmd = app.add_subcommand("weak-nbhd",
                                        "Polar of a graded point set");
    weak_cmd->add_option("--points", points_path)->required();
    weak_cmd->add_option("--lambda", lambda_text)->required();
    weak_cmd->add_option("--mode", mode_name, "definition | paper_literal");
    int weak_dim = 0;
    weak_cmd->add_option("--dimension", weak_dim)->required();
    add_output(weak_cmd);

    auto* witness_cmd = app.add_subcommand("dual-witness",
                                           "Continuity witnesses from a base");
    witness_cmd->add_option("base", in_path)->required();
    witness_cmd->add_option("--functionals", functionals_path)->required();
    add_output(witness_cmd);
    add_json(witness_cmd);

    auto* refines_cmd = app.add_subcommand("refines",
                                           "Base refinement check");
    refines_cmd->add_option("finer", in_path)->required();
    refines_cmd->add_option("coarser", in2_path)->required();
    refines_cmd->add_option("--scale-range", scale_range);

    auto* mackey_cmd = app.add_subcommand("mackey-arens",
                                          "Desk-scale Mackey-Arens checklist");
    mackey_cmd->add_option("base", in_path)->required();
    mackey_cmd->add_option("--functionals", functionals_path)->required();
    add_output(mackey_cmd);
    add_json(mackey_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Grid brute-force tables");
    oracle_cmd->add_option("--op", op_name, "membership | polar | add")
        ->required();
    oracle_cmd->add_option("input", in_path)->required();
    oracle_cmd->add_option("--second", in2_path, "Second operand for --op add");
    oracle_cmd->add_option("--grid", grid_specs, "min:max:step, once per axis")
        ->required();
    add_output(oracle_cmd);

    auto* compare_cmd = app.add_subcommand("compare",
                                           "Exact set vs an oracle table");
    compare_cmd->add_option("input", in_path)->required();
    compare_cmd->add_option("--table", table_path)->required();
    add_output(compare_cmd);
    add_json(compare_cmd);

    CLI11_PARSE(app, argc, argv);

    auto write_set = [&](const StepFuzzySet& s, const std::optional<Mat>& p) {
        emit(write_document(s, p), out_path);
        return 0;
    };

    if (polar_cmd->parsed()) {
        auto doc = load_set(in_path);
        return write_set(fuzzy_polar(doc.set, doc.dual_pair()), doc.pairing);
    }
    if (bipolar_cmd->parsed()) {
        auto doc = load_set(in_path);
        return write_set(bipolar(doc.set, doc.dual_pair()), doc.pairing);
    }
    if (add_cmd->parsed()) {
        auto a = load_set(in_path);
        auto b = load_set(in2_path);
        return write_set(add(a.set, b.set), a.pairing);
    }
    if (scale_cmd->parsed()) {
        auto doc = load_set(in_path);
        Rational t = parse_rational_arg(scalar_text, "scalar");
        return write_set(scalar_mul(t, doc.set), doc.pairing);
    }
    if (sup_cmd->parsed()) {
        auto a = load_set(in_path);
        auto b = load_set(in2_path);
        return write_set(lattice_sup(a.set, b.set), a.pairing);
    }
    if (inf_cmd->parsed()) {
        auto a = load_set(in_path);
        auto b = load_set(in2_path);
        return write_set(lattice_inf(a.set, b.set), a.pairing);
    }
    if (level_cmd->parsed()) {
        auto doc = load_set(in_path);
        Rational theta = parse_rational_arg(theta_text, "--theta");
        Json out;
        out["theta"] = format_rational(theta);
        out["region"] = region_to_json(level_set(doc.set, theta));
        emit_json(out, out_path);
        return 0;
    }
    if (check_cmd->parsed()) {
        auto doc = load_set(in_path);
        bool ok = predicate(parse_predicate(predicate_name), doc.set);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (env_cmd->parsed()) {
        auto doc = load_set(in_path);
        EnvelopeKind kind;
        if (kind_name == "convex") kind = EnvelopeKind::Convex;
        else if (kind_name == "absolutely_convex") kind = EnvelopeKind::AbsolutelyConvex;
        else if (kind_name == "closure") kind = EnvelopeKind::Closure;
        else throw InvalidInput("unknown envelope kind '" + kind_name + "'");
        return write_set(envelope(kind, doc.set), doc.pairing);
    }
    if (push_cmd->parsed()) {
        auto doc = load_set(in_path);
        Json mj = Json::parse(matrix_text, nullptr, false);
        if (mj.is_discarded() || !mj.is_array())
            throw InvalidInput("--matrix must be a JSON matrix");
        Mat m;
        for (const auto& row : mj) {
            if (!row.is_array()) throw InvalidInput("--matrix rows must be arrays");
            Vec r;
            for (const auto& e : row)
                r.push_back(parse_rational_arg(e.is_string()
                                                   ? e.get<std::string>()
                                                   : e.dump(),
                                               "--matrix entry"));
            m.push_back(std::move(r));
        }
        return write_set(pushforward(m, doc.set), doc.pairing);
    }
    if (absorbs_cmd->parsed()) {
        auto mu = load_set(in_path);
        auto eta = load_set(in2_path);
        auto t = absorbs(mu.set, eta.set);
        if (as_json) {
            Json payload;
            payload["absorbs"] = t.has_value();
            if (t) payload["witness"] = format_rational(*t);
            emit_json(stamped_report(std::move(payload)), out_path);
        } else {
            emit(t ? "witness " + format_rational(*t) + "\n"
                   : std::string("none\n"),
                 out_path);
        }
        return t ? 0 : 1;
    }
    if (bval_cmd->parsed()) {
        auto coll = load_set_list(in_path);
        FuzzyCollection b(coll.dual_pair(), coll.sets);
        auto basis = load_vectors(basis_path, coll.dim);
        auto rep = validate_collection(b, basis, parse_scale_range(scale_range));
        if (as_json) {
            emit_json(stamped_report(base_report_to_json(rep)), out_path);
        } else {
            std::ostringstream ss;
            ss << "c1: " << rep.c1.size() << " pairs checked\n"
               << "c2: " << (rep.c2_by_construction ? "by construction" : "unchecked")
               << "\nc3: " << rep.c3.size() << " basis vectors checked\n"
               << "overall: " << (rep.overall ? "true" : "false") << "\n";
            if (rep.c1_strictness_warning)
                ss << "warning: some (c1) dominance is non-strict\n";
            emit(ss.str(), out_path);
        }
        return rep.overall ? 0 : 1;
    }
    if (bpolar_cmd->parsed()) {
        auto coll = load_set_list(in_path);
        FuzzyCollection b(coll.dual_pair(), coll.sets);
        auto base = polar_base(b);
        emit_json(set_list_to_json(coll.dim, coll.pairing, base), out_path);
        return 0;
    }
    if (weak_cmd->parsed()) {
        auto pts = load_vectors(points_path, weak_dim);
        Rational lambda = parse_rational_arg(lambda_text, "--lambda");
        WeakNbhdMode mode;
        if (mode_name == "definition") mode = WeakNbhdMode::Definition;
        else if (mode_name == "paper_literal") mode = WeakNbhdMode::PaperLiteral;
        else throw InvalidInput("unknown mode '" + mode_name + "'");
        DualPair pair(weak_dim);
        auto result = weak_neighborhood(pts, lambda, pair, mode);
        auto other = weak_neighborhood(
            pts, lambda, pair,
            mode == WeakNbhdMode::Definition ? WeakNbhdMode::PaperLiteral
                                             : WeakNbhdMode::Definition);
        if (!fuzzy_equal(result, other))
            std::cerr << "notice: definition and paper_literal modes disagree "
                         "for this input\n";
        return write_set(result, std::nullopt);
    }
    if (witness_cmd->parsed()) {
        auto base = load_set_list(in_path);
        auto fns = load_vectors(functionals_path, base.dim);
        DualPair pair = base.dual_pair();
        Json arr = Json::array();
        bool all = true;
        for (const auto& x : fns) {
            auto w = dual_witness(base.sets, x, pair);
            Json e;
            Json xv = Json::array();
            for (const auto& c : x) xv.push_back(format_rational(c));
            e["functional"] = std::move(xv);
            e["continuous"] = w.has_value();
            if (w) {
                e["witness_index"] = w->first;
                e["witness_grade"] = format_rational(w->second);
            }
            all = all && w.has_value();
            arr.push_back(std::move(e));
        }
        if (as_json) {
            Json payload;
            payload["witnesses"] = std::move(arr);
            payload["all_continuous"] = all;
            emit_json(stamped_report(std::move(payload)), out_path);
        } else {
            std::ostringstream ss;
            for (const auto& e : arr)
                ss << e["functional"].dump() << ": "
                   << (e["continuous"].get<bool>() ? "witness" : "none") << "\n";
            emit(ss.str(), out_path);
        }
        return all ? 0 : 1;
    }
    if (refines_cmd->parsed()) {
        auto b1 = load_set_list(in_path);
        auto b2 = load_set_list(in2_path);
        if (b1.dim != b2.dim) throw InvalidInput("refines: dimension mismatch");
        bool ok = refines(b1.sets, b2.sets, parse_scale_range(scale_range));
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (mackey_cmd->parsed()) {
        auto base = load_set_list(in_path);
        auto fns = load_vectors(functionals_path, base.dim);
        auto rep = verify_mackey_arens(base.sets, fns, base.dual_pair());
        if (as_json) {
            emit_json(stamped_report(mackey_report_to_json(rep)), out_path);
        } else {
            std::ostringstream ss;
            for (std::size_t i = 0; i < rep.neighborhoods.size(); ++i)
                ss << "neighborhood " << i << ": "
                   << (rep.neighborhoods[i].pass() ? "pass" : "fail") << "\n";
            for (const auto& f : rep.functionals)
                ss << "functional: "
                   << (f.witness ? "continuous" : "no witness") << "\n";
            ss << "overall: " << (rep.overall ? "true" : "false") << "\n";
            emit(ss.str(), out_path);
        }
        return rep.overall ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
        auto doc = load_set(in_path);
        std::vector<GridAxis> axes;
        for (const auto& s : grid_specs) axes.push_back(parse_axis(s));
        Grid grid(axes, grid_cap());
        GradeTable table;
        if (op_name == "membership") {
            table = oracle_membership(doc.set, grid);
        } else if (op_name == "polar") {
            table = oracle_polar(doc.set, grid, polar_theta_grid(doc.set),
                                 doc.dual_pair());
        } else if (op_name == "add") {
            if (in2_path.empty())
                throw InvalidInput("oracle --op add needs --second");
            auto b = load_set(in2_path);
            table = oracle_add(doc.set, b.set, grid);
        } else {
            throw InvalidInput("unknown oracle op '" + op_name + "'");
        }
        emit_json(grade_table_to_json(table), out_path);
        return 0;
    }
    if (compare_cmd->parsed()) {
        auto doc = load_set(in_path);
        auto table = grade_table_from_json(read_json(table_path));
        auto rep = compare(doc.set, table);
        if (as_json) {
            emit_json(stamped_report(compare_report_to_json(rep)), out_path);
        } else {
            emit(rep.pass() ? "pass\n"
                            : "fail: " + std::to_string(rep.differences.size()) +
                                  " differing points\n",
                 out_path);
        }
        return rep.pass() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
