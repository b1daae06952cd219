#pragma once

/**
 * report.hpp
 *
 * Structured text reports: an ordered list of "key = value" lines under a
 * command header, plus optional (level, value) curve series.  Floating
 * point values render as %.16e (17 significant digits, round-trip exact);
 * non-finite values render as the strings "inf" / "-inf" / "nan".  Output
 * depends only on the inserted content, so identical runs produce
 * byte-identical payloads.
 */

#include "framepair/core.hpp"

#include <cmath>
#include <concepts>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace framepair {

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

class Report {
public:
    struct Curve {
        std::string name;
        std::vector<std::pair<double, double>> rows;   // (level, value)
    };

    explicit Report(std::string command) : command_(std::move(command)) {}

    const std::string& command() const { return command_; }

    void add(const std::string& key, const std::string& value) {
        fields_.emplace_back(key, value);
    }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, double value) { add(key, format_double(value)); }
    void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }
    void add(const std::string& key, cxd value) {
        add(key + ".re", value.real());
        add(key + ".im", value.imag());
    }
    template <std::integral T>
    void add(const std::string& key, T value) {
        add(key, std::to_string(value));
    }

    void add_curve(std::string name, std::vector<std::pair<double, double>> rows) {
        curves_.push_back(Curve{std::move(name), std::move(rows)});
    }
    void add_curve(const std::string& name, const RealVec& levels, const RealVec& values) {
        require(levels.size() == values.size(), "add_curve: level/value length mismatch");
        std::vector<std::pair<double, double>> rows;
        rows.reserve(std::size_t(levels.size()));
        for (Eigen::Index i = 0; i < levels.size(); ++i)
            rows.emplace_back(levels(i), values(i));
        add_curve(name, std::move(rows));
    }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
    const std::vector<Curve>& curves() const { return curves_; }

    // Value of the first field with the given key; throws when absent.
    const std::string& value(const std::string& key) const {
        for (const auto& [k, v] : fields_)
            if (k == key) return v;
        fail("report has no field '" + key + "'");
    }

    std::string render() const {
        std::string out = "command = " + command_ + "\n";
        for (const auto& [k, v] : fields_) out += k + " = " + v + "\n";
        for (const auto& c : curves_) {
            std::size_t i = 0;
            for (const auto& [level, value] : c.rows) {
                out += "curve." + c.name + "." + std::to_string(i) + " = " +
                       format_double(level) + ", " + format_double(value) + "\n";
                ++i;
            }
        }
        return out;
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail("cannot write report file '" + path + "'");
        out << render();
        if (!out) fail("write to '" + path + "' failed");
    }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<Curve> curves_;
};

// Comma-separated curve dump: header row, then one "series,level,value" row
// per data point, decimals rendered round-trip exactly.
inline void emit_curves(const Report& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write curves file '" + path + "'");
    out << "series,level,value\n";
    for (const auto& c : report.curves())
        for (const auto& [level, value] : c.rows)
            out << c.name << ',' << format_double(level) << ',' << format_double(value)
                << '\n';
    if (!out) fail("write to '" + path + "' failed");
}

}  // namespace framepair
