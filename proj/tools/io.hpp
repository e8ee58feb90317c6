#pragma once

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fbmlab::io {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Shortest round-trip decimal, independent of the C locale.
std::string format_double(double x);

// Column-major table with a header row; '.' decimal separator and LF line endings.
void write_csv(const fs::path& file, const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    [[nodiscard]] const std::vector<double>& column(const std::string& name) const;
};

// Comma separated, first line a header; numbers parsed with from_chars.
Table read_csv(const fs::path& file);

void write_json(const fs::path& file, const json& j);

// Line plot of columns 2.. against column 1 (or against the row index scaled by dx when dx > 0).
void write_gnuplot(const fs::path& script, const std::string& csv_name, const std::string& title, int n_series, double dx = 0.0);

// Accumulates what manifest.json records for one command.
class Manifest {
public:
    Manifest(std::string command, std::vector<std::string> argv);

    json config = json::object();
    json diagnostics = json::object();
    std::uint64_t seed = 0;

    void output(const fs::path& file);
    void start(const std::string& stage);
    void stop();
    void write(const fs::path& dir) const;

private:
    std::string command_;
    std::vector<std::string> argv_;
    std::vector<std::string> outputs_;
    std::vector<std::pair<std::string, double>> timings_;
    std::string stage_;
    std::chrono::steady_clock::time_point t0_;
};

inline constexpr const char* artifact_version = "fbmlab 0.1.0";

} // namespace fbmlab::io
