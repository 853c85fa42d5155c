#include "covrough/sweep.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "covrough/enumerate.hpp"
#include "covrough/json_io.hpp"

namespace covrough {

using nlohmann::ordered_json;

namespace {

void add_to_tally(ZhuTally& t, bool condition, bool idempotent) {
    if (condition) {
        ++(idempotent ? t.condition_true_idem_true : t.condition_true_idem_false);
    } else {
        ++(idempotent ? t.condition_false_idem_true : t.condition_false_idem_false);
    }
}

void absorb_covering(SweepReport& rep, const Covering& c, bool keep_record) {
    for (auto& tt : rep.theorems) {
        TheoremVerdict v = verify_theorem(c, tt.id);
        if (!v.applicable) {
            ++tt.not_applicable;
            continue;
        }
        ++tt.checked;
        if (!v.agree) {
            ++tt.disagreements;
            if (tt.disagreements == 1) {
                tt.first_witness = v.witness;
                tt.first_witness_covering = print_covering(c);
            }
        }
    }

    if (c.block_count() > rep.zhu_guard) {
        ++rep.zhu_skipped;
        return;
    }
    ZhuAuditRecord rec = zhu_audit(c, rep.zhu_guard);
    add_to_tally(rep.zhu_r1, rec.r1.condition, rec.sh_idempotent);
    add_to_tally(rep.zhu_r2, rec.r2.condition, rec.sh_idempotent);
    if (keep_record) {
        ZhuRecordSummary s;
        s.covering = print_covering(c);
        s.idempotent = rec.sh_idempotent;
        s.r1_condition = rec.r1.condition;
        s.r1_classification = zhu_classification_name(rec.r1.classification);
        if (rec.r1.witness) s.r1_witness = rec.r1.witness->describe(c.universe());
        s.r2_condition = rec.r2.condition;
        s.r2_classification = zhu_classification_name(rec.r2.classification);
        if (rec.r2.witness) s.r2_witness = rec.r2.witness->describe(c.universe());
        rep.zhu_records.push_back(std::move(s));
    }
}

std::string tally_note(const char* reading, const ZhuTally& t) {
    std::ostringstream os;
    os << reading << ": condition=true with SH not idempotent on " << t.condition_true_idem_false
       << " coverings; condition=false with SH idempotent on " << t.condition_false_idem_true
       << " coverings";
    return os.str();
}

ordered_json tally_json(const ZhuTally& t) {
    ordered_json j;
    j["condition_true_idempotent_true"] = t.condition_true_idem_true;
    j["condition_true_idempotent_false"] = t.condition_true_idem_false;
    j["condition_false_idempotent_true"] = t.condition_false_idem_true;
    j["condition_false_idempotent_false"] = t.condition_false_idem_false;
    return j;
}

}  // namespace

long SweepReport::total_disagreements() const {
    long total = 0;
    for (const auto& tt : theorems) total += tt.disagreements;
    return total;
}

std::string SweepReport::to_json_text() const {
    ordered_json j;
    j["n"] = n;
    j["mode"] = (mode == SweepMode::exhaustive) ? "exhaustive" : "random";
    if (mode == SweepMode::random) {
        j["samples"] = samples;
        j["seed"] = seed;
    }
    j["coverings_examined"] = coverings_examined;

    j["theorems"] = ordered_json::array();
    for (const auto& tt : theorems) {
        ordered_json t;
        t["id"] = std::string(theorem_name(tt.id));
        t["checked"] = tt.checked;
        t["not_applicable"] = tt.not_applicable;
        t["disagreements"] = tt.disagreements;
        if (tt.disagreements > 0) {
            t["first_witness"] = tt.first_witness;
            t["first_witness_covering"] = ordered_json::parse(tt.first_witness_covering);
        } else {
            t["first_witness"] = nullptr;
            t["first_witness_covering"] = nullptr;
        }
        j["theorems"].push_back(std::move(t));
    }

    ordered_json audit;
    audit["guard"] = zhu_guard;
    audit["skipped"] = zhu_skipped;
    audit["readings"]["r1"] = tally_json(zhu_r1);
    audit["readings"]["r2"] = tally_json(zhu_r2);
    audit["records"] = ordered_json::array();
    for (const auto& r : zhu_records) {
        ordered_json rec;
        rec["covering"] = ordered_json::parse(r.covering);
        rec["sh_idempotent"] = r.idempotent;
        for (const auto* side : {"r1", "r2"}) {
            bool is_r1 = side[1] == '1';
            ordered_json s;
            s["condition"] = is_r1 ? r.r1_condition : r.r2_condition;
            s["classification"] = is_r1 ? r.r1_classification : r.r2_classification;
            const std::string& w = is_r1 ? r.r1_witness : r.r2_witness;
            if (w.empty()) {
                s["witness"] = nullptr;
            } else {
                s["witness"] = w;
            }
            rec[side] = std::move(s);
        }
        audit["records"].push_back(std::move(rec));
    }
    audit["notes"] = ordered_json::array({tally_note("r1", zhu_r1), tally_note("r2", zhu_r2)});
    j["audit"] = std::move(audit);

    j["total_disagreements"] = total_disagreements();
    return j.dump(2);
}

std::string SweepReport::to_text() const {
    std::ostringstream os;
    os << "sweep  n=" << n << "  mode="
       << ((mode == SweepMode::exhaustive) ? "exhaustive" : "random");
    if (mode == SweepMode::random) {
        os << "  samples=" << samples << "  seed=" << seed;
    }
    os << "\ncoverings examined: " << coverings_examined << "\n\n";

    os << std::left << std::setw(37) << "theorem" << std::right << std::setw(9) << "checked"
       << std::setw(6) << "n/a" << std::setw(10) << "disagree" << "\n";
    for (const auto& tt : theorems) {
        os << std::left << std::setw(37) << theorem_name(tt.id) << std::right << std::setw(9)
           << tt.checked << std::setw(6) << tt.not_applicable << std::setw(10)
           << tt.disagreements << "\n";
        if (tt.disagreements > 0) {
            os << "    first witness: " << tt.first_witness << "\n"
               << "    on covering:   " << tt.first_witness_covering << "\n";
        }
    }

    os << "\naudit guard: " << zhu_guard << " blocks (skipped: " << zhu_skipped << ")\n";
    for (const auto* side : {"r1", "r2"}) {
        const ZhuTally& t = (side[1] == '1') ? zhu_r1 : zhu_r2;
        os << "reading " << side << "  condition/idempotent"
           << "  true/true=" << t.condition_true_idem_true
           << "  true/false=" << t.condition_true_idem_false
           << "  false/true=" << t.condition_false_idem_true
           << "  false/false=" << t.condition_false_idem_false << "\n";
    }
    os << tally_note("r1", zhu_r1) << "\n" << tally_note("r2", zhu_r2) << "\n";
    os << "\ntotal disagreements: " << total_disagreements() << "\n";
    return os.str();
}

SweepReport sweep(int n, SweepMode mode, long samples, std::uint64_t seed, int cap) {
    if (n < 1) {
        throw error("sweep needs a universe of at least one element");
    }
    SweepReport rep;
    rep.n = n;
    rep.mode = mode;
    auto ids = all_theorem_ids();
    for (int i = 0; i < theorem_count; ++i) {
        rep.theorems[static_cast<std::size_t>(i)].id = ids[static_cast<std::size_t>(i)];
    }

    if (mode == SweepMode::exhaustive) {
        if (n > exhaustive_covering_limit) {
            throw error("exhaustive sweep limited to n <= " +
                        std::to_string(exhaustive_covering_limit) + ", got n = " +
                        std::to_string(n));
        }
        Universe u = letter_universe(n);
        // Widest possible covering has 2^n - 1 blocks, so nothing is skipped.
        rep.zhu_guard = (1 << n) - 1;
        const bool keep_records = n <= 3;
        for_each_covering(u, [&](const Covering& c) {
            ++rep.coverings_examined;
            absorb_covering(rep, c, keep_records);
        });
    } else {
        if (n > cap) {
            throw error("random sweep universe size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
        }
        if (samples < 1) {
            throw error("random sweep needs at least one sample");
        }
        rep.samples = samples;
        rep.seed = seed;
        rep.zhu_guard = zhu_default_guard;
        Universe u = letter_universe(n);
        for (long i = 0; i < samples; ++i) {
            Covering c = random_covering(u, seed + static_cast<std::uint64_t>(i));
            ++rep.coverings_examined;
            absorb_covering(rep, c, /*keep_record=*/false);
        }
    }
    return rep;
}

}  // namespace covrough
