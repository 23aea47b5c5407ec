#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "div2d/moments.hpp"
#include "div2d/pair.hpp"
#include "div2d/zeta.hpp"

namespace div2d {

struct RunConfig {
    DivisorPair pair{1, 2};
    double x_max = 1e6;
    double x_min = 10.0;
    enum class Grid { Decade, Linear, Explicit } grid = Grid::Decade;
    std::vector<double> explicit_grid;
    std::uint64_t trunc_n = 10000;
    double tol = 1e-8;
    enum class Format { Csv, Json } format = Format::Csv;
    std::string out_path;  // empty = stdout
    unsigned threads = 1;

    void validate() const;
};

struct ScanRow {
    double x;
    double lhs;
    double rhs;
    double residual;    // lhs - rhs
    double normalized;  // residual / normalization(x)
};

// one self-describing table: ordered key=value header plus rows
struct ScanReport {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // pre-rendered cells
};

enum class ScanTarget { Theorem1, Theorem2, Corollary1, Corollary2, FirstMoment, Voronoi };
ScanTarget parse_target(const std::string& s);

// decade grid: 10^{k/9} clipped to [x_min, x_max], x_max appended
std::vector<double> make_grid(const RunConfig& cfg);

ScanReport run_scan(const ZetaContext& ctx, const RunConfig& cfg, ScanTarget target);
ScanReport run_tabulate(const ZetaContext& ctx, const RunConfig& cfg, const std::string& what);

struct CheckResult {
    std::string name;
    double residual;
    double tol;
    bool pass;
};
std::vector<CheckResult> run_verify(const ZetaContext& ctx, const RunConfig& cfg);

// deterministic rendering: integers as integers, reals with 17 significant
// digits; CSV per RFC 4180 with '#' header comment lines, '\n' endings
std::string render_double(double v);
void write_csv(const ScanReport& rep, std::ostream& os);
void write_json(const ScanReport& rep, std::ostream& os);
void write_report(const ScanReport& rep, const RunConfig& cfg);

}  // namespace div2d
