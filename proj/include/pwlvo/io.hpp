#ifndef PWLVO_IO_HPP
#define PWLVO_IO_HPP

#include <json.hpp>

#include "pwlvo/oracle.hpp"
#include "pwlvo/pwl.hpp"
#include "pwlvo/semiclosed.hpp"
#include "pwlvo/solver.hpp"

#include <optional>
#include <string>

namespace pwlvo::io {

using nlohmann::json;

// Rationals travel as canonical strings "p" or "p/q"; floating-point
// literals are rejected.
json rat_json(const Rat& r);
Rat rat_from(const json& j, const std::string& where);

json vec_json(const RatVec& v);
RatVec vec_from(const json& j, std::size_t expect_dim, const std::string& where);

json mat_json(const RatMat& m);
RatMat mat_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where);

json h_json(const HPolyhedron& p);
HPolyhedron h_from(const json& j, const std::string& where);

json sc_json(const SemiClosedPolyhedron& s);
SemiClosedPolyhedron sc_from(const json& j, const std::string& where);

json region_json(const Region& r);
Region region_from(const json& j, const std::string& where);

json v_json(const VPolyhedron& v);

struct Limits {
    std::size_t max_dim = 6;
    std::size_t max_pieces = 16;
};

struct ProblemFile {
    Problem problem;
    std::optional<GridSpec> grid;
    Limits limits;
};

json problem_json(const Problem& p);
ProblemFile problem_from(const json& j);
ProblemFile load_problem_file(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

json grid_json(const GridSpec& g);
GridSpec grid_from(const json& j, const std::string& where);

json report_json(const SolveReport& r);
json crosscheck_json(const CrosscheckResult& r);

}  // namespace pwlvo::io

#endif
