#ifndef COVROUGH_SWEEP_HPP
#define COVROUGH_SWEEP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "covrough/verify.hpp"
#include "covrough/zhu.hpp"

namespace covrough {

enum class SweepMode { exhaustive, random };

struct TheoremTally {
    TheoremId id{};
    long checked = 0;
    long not_applicable = 0;
    long disagreements = 0;
    std::string first_witness;           // empty when no disagreement
    std::string first_witness_covering;  // canonical covering document
};

/// Covering counts per (condition, SH idempotency) combination for one
/// reading of the audited condition.
struct ZhuTally {
    long condition_true_idem_true = 0;
    long condition_true_idem_false = 0;
    long condition_false_idem_true = 0;
    long condition_false_idem_false = 0;
};

struct ZhuRecordSummary {
    std::string covering;  // canonical covering document
    bool idempotent = false;
    bool r1_condition = false;
    std::string r1_classification;
    std::string r1_witness;
    bool r2_condition = false;
    std::string r2_classification;
    std::string r2_witness;
};

struct SweepReport {
    int n = 0;
    SweepMode mode = SweepMode::exhaustive;
    long samples = 0;        // random mode only
    std::uint64_t seed = 0;  // random mode only
    long coverings_examined = 0;

    std::array<TheoremTally, theorem_count> theorems{};

    int zhu_guard = 0;
    long zhu_skipped = 0;  // coverings with more blocks than the guard
    ZhuTally zhu_r1, zhu_r2;
    /// Per-covering audit records; populated for exhaustive sweeps with
    /// n <= 3, empty otherwise to keep reports compact.
    std::vector<ZhuRecordSummary> zhu_records;

    long total_disagreements() const;
    /// JSON document with stable key order.
    std::string to_json_text() const;
    /// Human-readable summary table.
    std::string to_text() const;
};

/// Runs every theorem verifier and the audit over a covering stream on the
/// alphabetic universe of size n. Exhaustive mode enumerates all coverings
/// (n <= 4) and widens the audit guard to the maximum possible block count;
/// random mode draws `samples` coverings via random_covering(u, seed + i)
/// (duplicates counted) and skips the audit for coverings over the default
/// guard. The report is a pure function of (n, mode, samples, seed).
SweepReport sweep(int n, SweepMode mode, long samples = 0, std::uint64_t seed = 0,
                  int cap = Universe::default_cap);

}  // namespace covrough

#endif
