#ifndef LORACAP_REPORT_HPP
#define LORACAP_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace loracap {

inline constexpr const char* kToolVersion = "0.1.0";

/// Deterministic decimal rendering used for every CSV/JSON number the tool
/// emits, so identical runs produce identical bytes.
std::string format_number(double v);

/// Comma separator, '.' decimal, header row, LF endings.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Every output file references the manifest that produced it; a rerun of
/// the same manifest must reproduce the outputs byte-identically.
struct RunManifest {
    std::string command;
    std::string scenario_path;  // empty for the built-in default
    std::vector<std::pair<std::string, std::string>> params;  // resolved flag values
    std::uint64_t seed = 0;
    int threads = 1;
    std::string version = kToolVersion;
    std::vector<std::string> outputs;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

void write_file(const std::string& path, const std::string& content);

}  // namespace loracap

#endif
