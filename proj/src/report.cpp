#include "loracap/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace loracap {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv: row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvWriter::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < header_.size(); ++i)
        out << header_[i] << (i + 1 < header_.size() ? "," : "\n");
    for (const auto& row : rows_)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    return out.str();
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["scenario_path"] = scenario_path;
    // array of pairs: flags like --config may legitimately repeat
    nlohmann::ordered_json p = nlohmann::ordered_json::array();
    for (const auto& [key, value] : params) p.push_back({key, value});
    j["params"] = p;
    j["seed"] = seed;
    j["threads"] = threads;
    j["version"] = version;
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.scenario_path = j.at("scenario_path").get<std::string>();
    for (auto& kv : j.at("params"))
        m.params.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
    m.seed = j.at("seed").get<std::uint64_t>();
    m.threads = j.at("threads").get<int>();
    m.version = j.at("version").get<std::string>();
    for (auto& o : j.at("outputs")) m.outputs.push_back(o.get<std::string>());
    return m;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace loracap
