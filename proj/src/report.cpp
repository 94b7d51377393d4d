#include "lpkinetic/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace lpk {

bool ExperimentReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["experiment"] = experiment;
    j["paper_ref"] = paper_ref;
    j["passed"] = passed();
    j["wall_seconds"] = wall_seconds;
    j["config"] = config_echo;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["measured"] = c.measured;
        cj["expected"] = c.expected;
        cj["tolerance"] = c.tolerance;
        cj["passed"] = c.passed;
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(cj);
    }
    return j;
}

void ExperimentReport::write_json(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
    out << to_json().dump(2) << "\n";
}

Check check_close(const std::string& name, double measured, double expected, double tol,
                  const std::string& note) {
    Check c{name, measured, expected, tol, std::abs(measured - expected) <= tol, note};
    return c;
}

Check check_le(const std::string& name, double measured, double bound, const std::string& note) {
    Check c{name, measured, bound, 0.0, measured <= bound, note};
    return c;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::string>& comments)
    : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) throw std::runtime_error("cannot write csv to '" + path + "'");
    for (const auto& c : comments) impl_->out << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        impl_->out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    impl_->out << std::setprecision(17);
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << values[i] << (i + 1 < values.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() {
    delete impl_;
}

void write_dat(const std::string& path, const std::vector<std::string>& comments,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dat to '" + path + "'");
    for (const auto& c : comments) out << "# " << c << "\n";
    out << std::setprecision(17);
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? " " : "\n");
    }
}

}  // namespace lpk
