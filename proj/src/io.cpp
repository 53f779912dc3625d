#include "pwlvo/io.hpp"

#include <fstream>
#include <sstream>

namespace pwlvo::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t dim_from(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
        fail(where, std::string("'") + key + "' must be a positive integer");
    return v.get<std::size_t>();
}

json rows_json(const ConstraintList& rows) {
    json out = json::array();
    for (const LinConstraint& c : rows) {
        json row;
        row["a"] = vec_json(c.coeffs);
        row["b"] = rat_json(c.rhs);
        out.push_back(std::move(row));
    }
    return out;
}

ConstraintList rows_from(const json& j, Rel rel, std::size_t dim, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    ConstraintList out;
    for (const json& row : j) {
        LinConstraint c;
        c.coeffs = vec_from(field(row, "a", where), dim, where + ".a");
        c.rhs = rat_from(field(row, "b", where), where + ".b");
        c.rel = rel;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "rationals must be strings like \"p\" or \"p/q\"");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const parse_error& e) {
        fail(where, e.what());
    }
}

json vec_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_json(x));
    return out;
}

RatVec vec_from(const json& j, std::size_t expect_dim, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    RatVec v;
    for (const json& x : j) v.push_back(rat_from(x, where));
    if (expect_dim != 0 && v.size() != expect_dim)
        fail(where, "expected " + std::to_string(expect_dim) + " entries");
    return v;
}

json mat_json(const RatMat& m) {
    json out = json::array();
    for (const RatVec& row : m) out.push_back(vec_json(row));
    return out;
}

RatMat mat_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a matrix");
    RatMat m;
    for (const json& row : j) m.push_back(vec_from(row, cols, where));
    if (rows != 0 && m.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    return m;
}

json h_json(const HPolyhedron& p) {
    json out;
    out["dim"] = p.dim;
    out["eq"] = rows_json(p.equalities);
    out["le"] = rows_json(p.inequalities);
    return out;
}

HPolyhedron h_from(const json& j, const std::string& where) {
    HPolyhedron p;
    p.dim = dim_from(j, "dim", where);
    if (j.contains("eq")) p.equalities = rows_from(j.at("eq"), Rel::EQ, p.dim, where + ".eq");
    if (j.contains("le")) p.inequalities = rows_from(j.at("le"), Rel::LE, p.dim, where + ".le");
    if (j.contains("lt")) fail(where, "strict rows are not allowed in a closed polyhedron");
    return p;
}

json sc_json(const SemiClosedPolyhedron& s) {
    json out;
    out["dim"] = s.dim;
    out["eq"] = rows_json(s.equalities);
    out["le"] = rows_json(s.closed);
    out["lt"] = rows_json(s.strict);
    return out;
}

SemiClosedPolyhedron sc_from(const json& j, const std::string& where) {
    SemiClosedPolyhedron s;
    s.dim = dim_from(j, "dim", where);
    if (j.contains("eq")) s.equalities = rows_from(j.at("eq"), Rel::EQ, s.dim, where + ".eq");
    if (j.contains("le")) s.closed = rows_from(j.at("le"), Rel::LE, s.dim, where + ".le");
    if (j.contains("lt")) s.strict = rows_from(j.at("lt"), Rel::LT, s.dim, where + ".lt");
    return s;
}

json region_json(const Region& r) {
    json out;
    out["dim"] = r.dim;
    json pieces = json::array();
    for (const SemiClosedPolyhedron& p : r.pieces) pieces.push_back(sc_json(p));
    out["pieces"] = std::move(pieces);
    return out;
}

Region region_from(const json& j, const std::string& where) {
    Region r;
    r.dim = dim_from(j, "dim", where);
    for (const json& p : field(j, "pieces", where)) {
        SemiClosedPolyhedron piece = sc_from(p, where + ".pieces");
        if (piece.dim != r.dim) fail(where, "piece dimension mismatch");
        r.pieces.push_back(std::move(piece));
    }
    return r;
}

json v_json(const VPolyhedron& v) {
    json out;
    out["dim"] = v.dim;
    json pts = json::array(), rays = json::array(), lin = json::array();
    for (const RatVec& u : v.points) pts.push_back(vec_json(u));
    for (const RatVec& r : v.rays) rays.push_back(vec_json(r));
    for (const RatVec& w : v.lineality.basis) lin.push_back(vec_json(w));
    out["points"] = std::move(pts);
    out["rays"] = std::move(rays);
    out["lineality"] = std::move(lin);
    return out;
}

json grid_json(const GridSpec& g) {
    json out;
    json box = json::array();
    for (const auto& [lo, hi] : g.box) box.push_back(json::array({rat_json(lo), rat_json(hi)}));
    out["box"] = std::move(box);
    out["steps"] = g.steps;
    return out;
}

GridSpec grid_from(const json& j, const std::string& where) {
    GridSpec g;
    for (const json& pair : field(j, "box", where)) {
        if (!pair.is_array() || pair.size() != 2) fail(where, "box entries are [lo, hi] pairs");
        g.box.emplace_back(rat_from(pair[0], where + ".box"), rat_from(pair[1], where + ".box"));
    }
    for (const json& s : field(j, "steps", where)) {
        if (!s.is_number_unsigned() || s.get<std::size_t>() == 0)
            fail(where, "steps must be positive integers");
        g.steps.push_back(s.get<std::size_t>());
    }
    if (g.box.size() != g.steps.size()) fail(where, "box and steps must have equal length");
    return g;
}

json problem_json(const Problem& p) {
    json out;
    out["source_dim"] = p.f.source_dim;
    out["image_dim"] = p.f.image_dim;
    out["feasible"] = h_json(p.feasible);
    json cone;
    json rows = json::array();
    for (const RatVec& r : p.cone.rows) rows.push_back(vec_json(r));
    cone["rows"] = std::move(rows);
    out["cone"] = std::move(cone);
    json pieces = json::array();
    for (const Piece& piece : p.f.pieces) {
        json pj;
        pj["domain"] = h_json(piece.domain);
        pj["map"] = mat_json(piece.map);
        pj["offset"] = vec_json(piece.offset);
        pieces.push_back(std::move(pj));
    }
    out["pieces"] = std::move(pieces);
    return out;
}

ProblemFile problem_from(const json& j) {
    const std::string where = "problem";
    ProblemFile file;
    if (j.contains("limits")) {
        const json& lim = j.at("limits");
        if (lim.contains("max_dim")) file.limits.max_dim = lim.at("max_dim").get<std::size_t>();
        if (lim.contains("max_pieces"))
            file.limits.max_pieces = lim.at("max_pieces").get<std::size_t>();
    }

    Problem& p = file.problem;
    p.f.source_dim = dim_from(j, "source_dim", where);
    p.f.image_dim = dim_from(j, "image_dim", where);
    if (p.f.source_dim > file.limits.max_dim || p.f.image_dim > file.limits.max_dim)
        fail(where, "dimension exceeds max_dim = " + std::to_string(file.limits.max_dim));

    p.feasible = h_from(field(j, "feasible", where), where + ".feasible");
    if (p.feasible.dim != p.f.source_dim) fail(where, "feasible set dimension mismatch");

    std::vector<RatVec> cone_rows;
    for (const json& r : field(field(j, "cone", where), "rows", where + ".cone"))
        cone_rows.push_back(vec_from(r, p.f.image_dim, where + ".cone.rows"));
    // cone_error propagates: a malformed cone is a structural defect, not a
    // syntax one
    p.cone = build_cone(p.f.image_dim, std::move(cone_rows));

    const json& pieces = field(j, "pieces", where);
    if (!pieces.is_array() || pieces.empty()) fail(where, "'pieces' must be a nonempty array");
    if (pieces.size() > file.limits.max_pieces)
        fail(where, "piece count exceeds max_pieces = " + std::to_string(file.limits.max_pieces));
    for (const json& pj : pieces) {
        Piece piece;
        piece.domain = h_from(field(pj, "domain", where + ".pieces"), where + ".pieces.domain");
        if (piece.domain.dim != p.f.source_dim) fail(where, "piece domain dimension mismatch");
        piece.map = mat_from(field(pj, "map", where + ".pieces"), p.f.image_dim, p.f.source_dim,
                             where + ".pieces.map");
        piece.offset =
            vec_from(field(pj, "offset", where + ".pieces"), p.f.image_dim, where + ".pieces.offset");
        p.f.pieces.push_back(std::move(piece));
    }

    if (j.contains("grid")) {
        GridSpec g = grid_from(j.at("grid"), where + ".grid");
        if (g.box.size() != p.f.source_dim) fail(where + ".grid", "grid dimension mismatch");
        file.grid = std::move(g);
    }
    return file;
}

ProblemFile parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return problem_from(j);
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

namespace {

json certificate_json(const ConnectivityCertificate& c) {
    json out;
    out["certified"] = c.certified;
    out["connected"] = c.connected;
    out["components"] = c.components;
    return out;
}

json provenance_json(const std::vector<PullbackProvenance>& prov) {
    json out = json::array();
    for (const PullbackProvenance& p : prov)
        out.push_back(json::array({p.piece_index, p.frontier_index}));
    return out;
}

}  // namespace

json report_json(const SolveReport& r) {
    json out;
    out["convex"] = r.convex;
    out["sol"] = region_json(r.sol);
    out["sol_closed"] = r.sol_closed;
    if (r.wsol.has_value()) {
        out["wsol"] = region_json(*r.wsol);
    } else {
        out["wsol"] = nullptr;
        out["wsol_omitted_reason"] = r.wsol_omitted_reason;
    }
    json certs;
    certs["sol"] = certificate_json(r.sol_connectivity);
    if (r.wsol.has_value()) certs["wsol"] = certificate_json(r.wsol_connectivity);
    out["certificates"] = std::move(certs);
    json stats;
    stats["lp_count"] = r.stats.lp_count;
    stats["image_pieces"] = r.stats.image_piece_count;
    stats["sol_pieces"] = r.stats.sol_piece_count;
    stats["wsol_pieces"] = r.stats.wsol_piece_count;
    stats["sol_provenance"] = provenance_json(r.sol_provenance);
    stats["wsol_provenance"] = provenance_json(r.wsol_provenance);
    out["stats"] = std::move(stats);
    return out;
}

json crosscheck_json(const CrosscheckResult& r) {
    json out;
    out["checked"] = r.checked;
    json mismatches = json::array();
    for (const CrosscheckMismatch& m : r.mismatches) {
        json rec;
        rec["point"] = vec_json(m.point);
        rec["oracle_sol"] = m.oracle_sol;
        rec["decomp_sol"] = m.decomp_sol;
        rec["oracle_wsol"] = m.oracle_wsol;
        rec["decomp_wsol"] = m.decomp_wsol;
        mismatches.push_back(std::move(rec));
    }
    out["mismatches"] = std::move(mismatches);
    return out;
}

}  // namespace pwlvo::io
