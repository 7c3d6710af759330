#include "arks/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace arks {

const char* const kDiagnosticsHeader =
    "t,mass,min_u,max_u,entropy,E,F,residual,ckp_lower,ckp_upper,l1_u,linf_u,"
    "linf_v,linf_w,phi_star_v,phi_star_w,E_legacy";

namespace {

void append_num(std::string& s, double v) {
    char buf[40];
    if (std::isnan(v)) {
        s += "nan";
    } else if (std::isinf(v)) {
        s += v > 0 ? "inf" : "-inf";
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        s += buf;
    }
}

std::string format_row(const DiagnosticsRow& r) {
    std::string line;
    line.reserve(512);
    const double fields[] = {r.t,         r.mass,      r.min_u,
                             r.max_u,     r.entropy,   r.E,
                             r.F,         r.residual,  r.ckp_lower,
                             r.ckp_upper, r.l1_u,      r.linf_u,
                             r.linf_v,    r.linf_w,    r.phi_star_v,
                             r.phi_star_w, r.E_legacy};
    bool first = true;
    for (double f : fields) {
        if (!first) line += ',';
        first = false;
        append_num(line, f);
    }
    line += '\n';
    return line;
}

// strtod rather than stod: subnormal values (possible in deeply converged
// columns) must parse instead of throwing out_of_range.
double parse_field(const std::string& tok, const std::string& path) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double d = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty())
        throw IoError(path + ": bad numeric field '" + tok + "'");
    return d;
}

}  // namespace

DiagnosticsWriter::DiagnosticsWriter(const std::string& path)
    : path_(path), out_(path) {
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
    out_ << kDiagnosticsHeader << '\n';
}

void DiagnosticsWriter::write(const DiagnosticsRow& row) {
    out_ << format_row(row);
    if (!out_) throw IoError("write failed on '" + path_ + "'");
}

void DiagnosticsWriter::close() {
    if (!out_.is_open()) return;
    out_.close();
    if (!out_) throw IoError("close failed on '" + path_ + "'");
}

void write_diagnostics(const std::string& path,
                       const std::vector<DiagnosticsRow>& rows) {
    DiagnosticsWriter w(path);
    for (const auto& r : rows) w.write(r);
    w.close();
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (size_t c = 0; c < columns.size(); ++c)
        if (columns[c] == name) return data[c];
    throw IoError("no column named '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw IoError(path + ": empty file");
    std::istringstream hs(line);
    std::string tok;
    while (std::getline(hs, tok, ',')) t.columns.push_back(tok);
    t.data.resize(t.columns.size());
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        size_t c = 0;
        while (std::getline(ls, tok, ',')) {
            if (c >= t.columns.size())
                throw IoError(path + ": too many fields on line " +
                              std::to_string(lineno));
            t.data[c++].push_back(parse_field(tok, path));
        }
        if (c != t.columns.size())
            throw IoError(path + ": short row on line " +
                          std::to_string(lineno));
    }
    return t;
}

void write_snapshot(const std::string& path, const State& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const Grid& g = s.u.grid;
    char buf[160];
    std::snprintf(buf, sizeof buf, "ARKS1 %d %d %.17g %.17g %.17g\n", g.nx,
                  g.ny, g.Lx, g.Ly, s.t);
    out << buf;
    for (int k = 0; k < g.cells(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", s.u.values[k],
                      s.v.values[k], s.w.values[k]);
        out << buf;
    }
    if (!out) throw IoError("write failed on '" + path + "'");
}

State read_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string magic;
    int nx = 0, ny = 0;
    double Lx = 0, Ly = 0, t = 0;
    if (!(in >> magic >> nx >> ny >> Lx >> Ly >> t) || magic != "ARKS1")
        throw IoError(path + ": not an ARKS1 snapshot");
    Grid g(nx, ny, Lx, Ly);
    State s{ScalarField(g), ScalarField(g), ScalarField(g), t};
    for (int k = 0; k < g.cells(); ++k) {
        if (!(in >> s.u.values[k] >> s.v.values[k] >> s.w.values[k]))
            throw IoError(path + ": truncated snapshot (cell " +
                          std::to_string(k) + ")");
    }
    return s;
}

}  // namespace arks
