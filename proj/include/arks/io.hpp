#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "arks/functionals.hpp"
#include "arks/solver.hpp"

namespace arks {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frozen diagnostics CSV header; consumers depend on the exact order.
extern const char* const kDiagnosticsHeader;

// Streaming CSV writer: header on open, one row per record, floats with 17
// significant digits (absent values serialize as nan).
class DiagnosticsWriter {
  public:
    explicit DiagnosticsWriter(const std::string& path);
    void write(const DiagnosticsRow& row);
    void close();

  private:
    std::string path_;
    std::ofstream out_;
};

void write_diagnostics(const std::string& path,
                       const std::vector<DiagnosticsRow>& rows);

// Column-oriented view of a diagnostics CSV.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // data[c][r]

    const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

// Text snapshot: "ARKS1 nx ny Lx Ly t" then nx*ny lines "u v w" in row-major
// order (x fastest), 17 significant digits.
void write_snapshot(const std::string& path, const State& s);
State read_snapshot(const std::string& path);

}  // namespace arks
