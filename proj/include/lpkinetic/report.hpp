#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lpkinetic/config.hpp"

namespace lpk {

// One measured quantity with its acceptance rule outcome.
struct Check {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;   // target value or bound
    double tolerance = 0.0;  // 0 = bound-style check (measured <= expected)
    bool passed = false;
    std::string note;
};

struct ExperimentReport {
    std::string experiment;
    std::string paper_ref;
    std::vector<Check> checks;
    double wall_seconds = 0.0;
    std::map<std::string, std::string> config_echo;

    bool passed() const;
    nlohmann::json to_json() const;
    void write_json(const std::string& path) const;
};

Check check_close(const std::string& name, double measured, double expected, double tol,
                  const std::string& note = "");
Check check_le(const std::string& name, double measured, double bound,
               const std::string& note = "");

// CSV with '#' provenance comments and a header row
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns,
              const std::vector<std::string>& comments = {});
    void row(const std::vector<double>& values);
    ~CsvWriter();

  private:
    struct Impl;
    Impl* impl_;
};

// gnuplot-style .dat (whitespace separated, '#' comments)
void write_dat(const std::string& path, const std::vector<std::string>& comments,
               const std::vector<std::vector<double>>& rows);

}  // namespace lpk
