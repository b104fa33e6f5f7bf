// Parameter sweeps over the sequence families, asymptotic-ratio tables,
// and CSV/JSON export.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyseq/paperchecks.hpp"

namespace polyseq {

enum class Family { frank, chu, milewski, lm };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws invalid_argument

// One sweep instance. Ratio columns are recomputed from the raw fields;
// elapsed_ms is the only nondeterministic column. A nonempty `error` marks
// an instance that failed to construct (metrics are NaN, perfect=false).
struct SweepRecord {
    std::string family;
    long long L = 0;
    long long M = 0;
    long long A = 0;
    long long N = 0;
    double psl = 0.0;
    double psl_over_sqrtN = 0.0;
    double energy = 0.0;
    double energy_over_N32 = 0.0;  // energy / N^(3/2)
    double merit_factor = 0.0;
    bool perfect = false;
    double elapsed_ms = 0.0;
    std::string error;
};

struct SweepSpec {
    Family family = Family::chu;
    // Size meaning per family: frank/chu take M; milewski takes N = G^(2H+1)
    // (decomposed preferring the smallest G); lm takes N and expands every
    // (L, M = N/L) with L | M.
    std::vector<long long> sizes;
    long long exact_verify_max = 512;  // exact perfectness up to this N, float above
    int workers = 0;                   // 0 = hardware concurrency
};

// One record per instance, ordered by (family, N, L, A) regardless of the
// worker count. Per-instance errors land in the record, not as exceptions.
std::vector<SweepRecord> sweep(const SweepSpec& spec);

struct AsymptoticRow {
    long long N = 0;
    double psl = 0.0;
    double psl_over_sqrtN = 0.0;
    double energy = 0.0;
    double energy_over_N32 = 0.0;
};

struct AsymptoticTable {
    Family family = Family::frank;
    std::vector<AsymptoticRow> rows;
    // Reference constants for comparison: 1/pi for PSL ratios (and Chu
    // energy), 2/pi^2 for Frank energy.
    double ref_inv_pi = 0.0;
    double ref_two_over_pi2 = 0.0;
};

// Sizes are sequence lengths N, ascending. Frank sizes must be perfect
// squares (N = M^2).
AsymptoticTable asymptotic_table(Family family, const std::vector<long long>& sizes);

enum class ExportFormat { csv, json };

// CSV: header + one row per record, fields in SweepRecord declaration
// order; floats are printed with shortest-round-trip formatting so a parse
// reproduces them exactly. JSON: array of objects, same field names.
void export_records(const std::vector<SweepRecord>& records, ExportFormat format,
                    std::ostream& out);

// File variant; I/O failures carry the path. Throws invalid_argument on an
// empty record list.
void export_records_to_file(const std::vector<SweepRecord>& records, ExportFormat format,
                            const std::string& path);

std::string format_asymptotic_table(const AsymptoticTable& table);

} // namespace polyseq
