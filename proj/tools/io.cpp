#include "io.hpp"

#include <fbmlab/errors.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fbmlab::io {

namespace {

std::ofstream open_out(const fs::path& file) {
    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

} // namespace

std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

void write_csv(const fs::path& file, const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size()) throw PreconditionError("csv header and columns differ in count");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != rows) throw PreconditionError("csv columns differ in length");
    }
    std::ofstream out = open_out(file);
    std::string line;
    for (std::size_t j = 0; j < header.size(); ++j) line += (j ? "," : "") + header[j];
    out << line << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        line.clear();
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (j) line += ',';
            line += format_double(columns[j][i]);
        }
        out << line << '\n';
    }
}

const std::vector<double>& Table::column(const std::string& name) const {
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == name) return columns[j];
    }
    throw PreconditionError("csv has no column '" + name + "'");
}

Table read_csv(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + file.string());
    Table t;
    std::string line;
    const auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
            while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
            cells.push_back(cell);
        }
        return cells;
    };
    if (!std::getline(in, line)) throw PreconditionError(file.string() + " is empty");
    t.header = split(line);
    t.columns.resize(t.header.size());
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) throw PreconditionError(file.string() + ": wrong cell count on line " + std::to_string(row));
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double v = 0.0;
            const auto res = std::from_chars(cells[j].data(), cells[j].data() + cells[j].size(), v);
            if (res.ec != std::errc() || res.ptr != cells[j].data() + cells[j].size())
                throw PreconditionError(file.string() + ": bad number '" + cells[j] + "' on line " + std::to_string(row));
            t.columns[j].push_back(v);
        }
    }
    return t;
}

void write_json(const fs::path& file, const json& j) {
    std::ofstream out = open_out(file);
    out << j.dump(2) << '\n';
}

void write_gnuplot(const fs::path& script, const std::string& csv_name, const std::string& title, int n_series, double dx) {
    std::ofstream out = open_out(script);
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set title '" << title << "'\n";
    if (dx > 0.0) {
        out << "plot for [i=1:" << n_series << "] '" << csv_name << "' using (($0 + 1) * " << format_double(dx) << "):i with lines\n";
    } else {
        out << "plot for [i=2:" << n_series + 1 << "] '" << csv_name << "' using 1:i with lines\n";
    }
}

Manifest::Manifest(std::string command, std::vector<std::string> argv) : command_(std::move(command)), argv_(std::move(argv)) {}

void Manifest::output(const fs::path& file) { outputs_.push_back(file.filename().string()); }

void Manifest::start(const std::string& stage) {
    stage_ = stage;
    t0_ = std::chrono::steady_clock::now();
}

void Manifest::stop() {
    timings_.emplace_back(stage_, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count());
}

void Manifest::write(const fs::path& dir) const {
    json j;
    j["command"] = command_;
    j["argv"] = argv_;
    j["config"] = config;
    j["seed"] = seed;
    j["artifact_version"] = artifact_version;
    j["outputs"] = outputs_;
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    json t = json::object();
    for (const auto& [stage, sec] : timings_) t[stage] = sec;
    j["timings"] = t;
    write_json(dir / "manifest.json", j);
}

} // namespace fbmlab::io
