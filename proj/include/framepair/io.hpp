#pragma once

/**
 * io.hpp
 *
 * File formats:
 *
 *   - VectorFamily: a JSON document with fields dim, metric (optional),
 *     points, weights, vectors; vectors is a nested array of [re, im]
 *     pairs, row = Hilbert index, column = grid index.
 *   - FrequencyProfile / RadialProfile: whitespace tables "grid re [im]",
 *     '#' starts a comment; radial tables carry a "# n = <int>" directive.
 *   - SphericalCoefficients: a "# scales: v1 v2 ..." directive followed by
 *     rows "l n k re [im]" (k indexes the scale grid, missing rows are 0).
 *
 * Every diagnostic names the offending line or field.
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/gallery.hpp"
#include "framepair/measure_grid.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framepair {
namespace io {

using nlohmann::json;

namespace detail {

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline const json& field(const json& j, const char* name) {
    if (!j.is_object()) fail("family document must be a JSON object");
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

inline double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail("field '" + where + "' must be a number");
    return j.get<double>();
}

inline cxd complex_entry(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        fail("field '" + where + "' must be a [re, im] pair");
    return cxd(number(j[0], where + "[0]"), number(j[1], where + "[1]"));
}

// Splits a whitespace table into (line_number, tokens) records; '#' lines
// are collected as directives.
struct TextTable {
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    std::vector<std::pair<int, std::string>> directives;
};

inline TextTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file '" + path + "'");
    TextTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        const auto first = sv.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (sv[first] == '#') {
            table.directives.emplace_back(line_no, std::string(sv.substr(first + 1)));
            continue;
        }
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        table.rows.emplace_back(line_no, std::move(tokens));
    }
    return table;
}

inline double parse_double(const std::string& tok, int line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        fail("line " + std::to_string(line_no) + ": '" + tok + "' is not a number");
    }
    if (used != tok.size())
        fail("line " + std::to_string(line_no) + ": '" + tok + "' is not a number");
    return v;
}

inline long long parse_int(const std::string& tok, int line_no) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        fail("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    }
    if (used != tok.size())
        fail("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    return v;
}

// Parses "<r> <re> [<im>]" rows shared by the two profile formats.
struct ProfileRows {
    RealVec grid;
    Vec values;
};

inline ProfileRows parse_profile_rows(const TextTable& table) {
    const Eigen::Index n = Eigen::Index(table.rows.size());
    if (n == 0) fail("profile table has no data rows");
    ProfileRows out{RealVec(n), Vec(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [line_no, tokens] = table.rows[std::size_t(i)];
        if (tokens.size() != 2 && tokens.size() != 3)
            fail("line " + std::to_string(line_no) +
                 ": expected '<grid> <re> [<im>]', got " + std::to_string(tokens.size()) +
                 " columns");
        out.grid(i) = parse_double(tokens[0], line_no);
        const double re = parse_double(tokens[1], line_no);
        const double im = tokens.size() == 3 ? parse_double(tokens[2], line_no) : 0.0;
        out.values(i) = cxd(re, im);
    }
    return out;
}

}  // namespace detail

inline VectorFamily parse_family(const json& j) {
    const double dim_raw = detail::number(detail::field(j, "dim"), "dim");
    const Eigen::Index dim = Eigen::Index(dim_raw);
    if (dim < 1 || double(dim) != dim_raw) fail("field 'dim' must be a positive integer");

    const json& jpoints = detail::field(j, "points");
    if (!jpoints.is_array() || jpoints.empty()) fail("field 'points' must be a nonempty array");
    const Eigen::Index n = Eigen::Index(jpoints.size());

    Eigen::Index coords = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& p = jpoints[std::size_t(i)];
        const Eigen::Index k = p.is_array() ? Eigen::Index(p.size()) : 1;
        if (i == 0) {
            coords = k;
            if (coords < 1 || coords > 2)
                fail("field 'points': coordinate tuples must have 1 or 2 entries");
        } else if (k != coords) {
            fail("field 'points': entry " + std::to_string(i) +
                 " has a different coordinate count");
        }
    }
    RealMat points(n, coords);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& p = jpoints[std::size_t(i)];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (p.is_array())
            for (Eigen::Index c = 0; c < coords; ++c)
                points(i, c) = detail::number(p[std::size_t(c)], where);
        else
            points(i, 0) = detail::number(p, where);
    }

    const json& jweights = detail::field(j, "weights");
    if (!jweights.is_array() || Eigen::Index(jweights.size()) != n)
        fail("field 'weights' must list one weight per point");
    RealVec weights(n);
    for (Eigen::Index i = 0; i < n; ++i)
        weights(i) = detail::number(jweights[std::size_t(i)],
                                    "weights[" + std::to_string(i) + "]");

    RealVec metric = RealVec::Ones(dim);
    if (j.contains("metric")) {
        const json& jm = j["metric"];
        if (!jm.is_array() || Eigen::Index(jm.size()) != dim)
            fail("field 'metric' must list one weight per dimension");
        for (Eigen::Index k = 0; k < dim; ++k)
            metric(k) = detail::number(jm[std::size_t(k)], "metric[" + std::to_string(k) + "]");
    }

    const json& jvec = detail::field(j, "vectors");
    if (!jvec.is_array() || Eigen::Index(jvec.size()) != dim)
        fail("field 'vectors' must have one row per dimension (row = Hilbert index)");
    Mat vectors(dim, n);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = jvec[std::size_t(r)];
        const std::string where = "vectors[" + std::to_string(r) + "]";
        if (!row.is_array() || Eigen::Index(row.size()) != n)
            fail("field '" + where + "' must have one [re, im] entry per grid point");
        for (Eigen::Index c = 0; c < n; ++c)
            vectors(r, c) = detail::complex_entry(
                row[std::size_t(c)], where + "[" + std::to_string(c) + "]");
    }

    return VectorFamily(MeasureGrid(std::move(points), std::move(weights)),
                        std::move(vectors), std::move(metric));
}

inline VectorFamily read_family(const std::string& path) {
    const std::string text = detail::read_text(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("'" + path + "': " + e.what());
    }
    try {
        return parse_family(j);
    } catch (const std::invalid_argument& e) {
        fail("'" + path + "': " + e.what());
    }
}

inline json family_to_json(const VectorFamily& fam) {
    json j;
    j["dim"] = fam.dim();
    json points = json::array();
    for (Eigen::Index i = 0; i < fam.size(); ++i) {
        json p = json::array();
        for (Eigen::Index c = 0; c < fam.grid().coord_count(); ++c)
            p.push_back(fam.grid().coord(i, c));
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    j["weights"] = std::vector<double>(fam.grid().weights().data(),
                                       fam.grid().weights().data() + fam.size());
    if (!fam.unit_metric())
        j["metric"] = std::vector<double>(fam.metric().data(),
                                          fam.metric().data() + fam.dim());
    json rows = json::array();
    for (Eigen::Index r = 0; r < fam.dim(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < fam.size(); ++c)
            row.push_back(json::array({fam.vectors()(r, c).real(), fam.vectors()(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    j["vectors"] = std::move(rows);
    return j;
}

inline void write_family(const std::string& path, const VectorFamily& fam) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write file '" + path + "'");
    out << family_to_json(fam).dump(1) << '\n';
    if (!out) fail("write to '" + path + "' failed");
}

inline FrequencyProfile read_frequency_profile(const std::string& path) {
    detail::TextTable table = detail::read_table(path);
    detail::ProfileRows rows = detail::parse_profile_rows(table);
    try {
        return FrequencyProfile(rows.grid, std::move(rows.values));
    } catch (const std::invalid_argument& e) {
        fail("'" + path + "': " + e.what());
    }
}

// Radial tables must carry a "# n = <int>" directive fixing the power index.
inline RadialProfile read_radial_profile(const std::string& path) {
    detail::TextTable table = detail::read_table(path);
    int n = 0;
    bool seen = false;
    for (const auto& [line_no, text] : table.directives) {
        std::istringstream ss(text);
        std::string key, eq, value;
        if ((ss >> key >> eq >> value) && key == "n" && (eq == "=" || eq == ":")) {
            n = int(detail::parse_int(value, line_no));
            seen = true;
        }
    }
    if (!seen) fail("'" + path + "': missing '# n = <integer>' directive");
    detail::ProfileRows rows = detail::parse_profile_rows(table);
    try {
        return RadialProfile(rows.grid, std::move(rows.values), n);
    } catch (const std::invalid_argument& e) {
        fail("'" + path + "': " + e.what());
    }
}

// Spherical tables: "# scales: v1 v2 ..." then rows "l n k re [im]".
inline SphericalCoefficients read_spherical_table(const std::string& path) {
    detail::TextTable table = detail::read_table(path);

    RealVec a_grid;
    for (const auto& [line_no, text] : table.directives) {
        std::istringstream ss(text);
        std::string key;
        if (!(ss >> key)) continue;
        if (key == "scales" || key == "scales:") {
            std::string eq;
            if (key == "scales") {
                if (!(ss >> eq) || (eq != "=" && eq != ":"))
                    fail("line " + std::to_string(line_no) +
                         ": expected '# scales: v1 v2 ...'");
            }
            std::vector<double> vals;
            std::string tok;
            while (ss >> tok) vals.push_back(detail::parse_double(tok, line_no));
            if (vals.empty())
                fail("line " + std::to_string(line_no) + ": empty scale list");
            a_grid = Eigen::Map<RealVec>(vals.data(), Eigen::Index(vals.size()));
        }
    }
    if (a_grid.size() == 0)
        fail("'" + path + "': missing '# scales: v1 v2 ...' directive");

    long long lmax = -1;
    for (const auto& [line_no, tokens] : table.rows) {
        if (tokens.size() < 1) continue;
        lmax = std::max(lmax, detail::parse_int(tokens[0], line_no));
    }
    if (lmax < 0) fail("'" + path + "': no coefficient rows");

    const Eigen::Index k_count = a_grid.size();
    std::vector<Mat> blocks;
    for (long long l = 0; l <= lmax; ++l)
        blocks.push_back(Mat::Zero(2 * l + 1, k_count));

    for (const auto& [line_no, tokens] : table.rows) {
        if (tokens.size() != 4 && tokens.size() != 5)
            fail("line " + std::to_string(line_no) +
                 ": expected 'l n k re [im]', got " + std::to_string(tokens.size()) +
                 " columns");
        const long long l = detail::parse_int(tokens[0], line_no);
        const long long order = detail::parse_int(tokens[1], line_no);
        const long long k = detail::parse_int(tokens[2], line_no);
        if (l < 0) fail("line " + std::to_string(line_no) + ": degree l must be >= 0");
        if (order < -l || order > l)
            fail("line " + std::to_string(line_no) + ": order n out of range |n| <= l");
        if (k < 0 || k >= k_count)
            fail("line " + std::to_string(line_no) + ": scale index k out of range");
        const double re = detail::parse_double(tokens[3], line_no);
        const double im = tokens.size() == 5 ? detail::parse_double(tokens[4], line_no) : 0.0;
        blocks[std::size_t(l)](Eigen::Index(order + l), Eigen::Index(k)) = cxd(re, im);
    }

    try {
        return SphericalCoefficients(a_grid, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        fail("'" + path + "': " + e.what());
    }
}

}  // namespace io
}  // namespace framepair
