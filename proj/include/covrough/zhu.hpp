#ifndef COVROUGH_ZHU_HPP
#define COVROUGH_ZHU_HPP

#include <optional>
#include <string>
#include <vector>

#include "covrough/covering.hpp"

namespace covrough {

/// The audited subfamily condition on a covering:
///   for every nonempty subfamily {K1..Km} with K1 n ... n Km != empty and
///   every block K with K n (K1 u ... u Km) != empty, K subseteq K1 u ... u Km.
/// The quantifier over K admits two natural readings, both implemented:
enum class ZhuReading {
    r1,  // K ranges over all blocks of the covering
    r2,  // K ranges over blocks outside the chosen subfamily
};

constexpr int zhu_default_guard = 12;  // max block count; subfamilies are enumerated

struct ZhuWitness {
    mask_t block = 0;                  // the offending K
    std::vector<mask_t> subfamily;     // the chosen {K1..Km}
    std::string describe(const Universe& u) const;
};

struct ZhuCheck {
    bool holds = true;
    std::optional<ZhuWitness> witness;
};

ZhuCheck zhu_condition(const Covering& c, ZhuReading reading, int guard = zhu_default_guard);

enum class ZhuClassification {
    supports_sufficiency,  // condition holds and SH is idempotent
    refutes_sufficiency,   // condition holds and SH is not idempotent
    vacuous,               // condition fails; the implication says nothing here
};

const char* zhu_classification_name(ZhuClassification c);

struct ZhuReadingResult {
    bool condition = false;
    std::optional<ZhuWitness> witness;
    ZhuClassification classification{};
};

struct ZhuAuditRecord {
    Covering covering;
    bool sh_idempotent = false;
    ZhuReadingResult r1, r2;
};

/// Evaluates the condition under both readings together with SH idempotency.
ZhuAuditRecord zhu_audit(const Covering& c, int guard = zhu_default_guard);

}  // namespace covrough

#endif
