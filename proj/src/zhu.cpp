#include "covrough/zhu.hpp"

#include <sstream>

#include "covrough/approx.hpp"

namespace covrough {

std::string ZhuWitness::describe(const Universe& u) const {
    std::ostringstream os;
    os << "K=" << mask_to_string(u, block) << " subfamily={";
    for (std::size_t i = 0; i < subfamily.size(); ++i) {
        if (i) os << ',';
        os << mask_to_string(u, subfamily[i]);
    }
    os << '}';
    return os.str();
}

ZhuCheck zhu_condition(const Covering& c, ZhuReading reading, int guard) {
    const auto& blocks = c.block_masks();
    const int m = c.block_count();
    if (m > guard) {
        throw error("zhu condition check is limited to " + std::to_string(guard) +
                    " blocks; covering has " + std::to_string(m));
    }
    const std::uint32_t families = std::uint32_t{1} << m;
    for (std::uint32_t sf = 1; sf < families; ++sf) {
        mask_t inter = c.universe().full_mask();
        mask_t uni = 0;
        for (int i = 0; i < m; ++i) {
            if ((sf >> i) & 1u) {
                inter &= blocks[static_cast<std::size_t>(i)];
                uni |= blocks[static_cast<std::size_t>(i)];
            }
        }
        if (inter == 0) continue;
        for (int i = 0; i < m; ++i) {
            if (reading == ZhuReading::r2 && ((sf >> i) & 1u)) continue;
            const mask_t k = blocks[static_cast<std::size_t>(i)];
            if ((k & uni) != 0 && (k & ~uni) != 0) {
                ZhuWitness w;
                w.block = k;
                for (int j = 0; j < m; ++j) {
                    if ((sf >> j) & 1u) w.subfamily.push_back(blocks[static_cast<std::size_t>(j)]);
                }
                return {false, std::move(w)};
            }
        }
    }
    return {true, std::nullopt};
}

const char* zhu_classification_name(ZhuClassification c) {
    switch (c) {
        case ZhuClassification::supports_sufficiency: return "supports-sufficiency";
        case ZhuClassification::refutes_sufficiency: return "refutes-sufficiency";
        case ZhuClassification::vacuous: return "vacuous";
    }
    return "?";
}

namespace {

ZhuClassification classify(bool condition, bool idempotent) {
    if (!condition) return ZhuClassification::vacuous;
    return idempotent ? ZhuClassification::supports_sufficiency
                      : ZhuClassification::refutes_sufficiency;
}

bool sh_idempotent_all(const Covering& c) {
    const mask_t full = c.universe().full_mask();
    for (mask_t x = 0;; ++x) {
        const mask_t shx = sh_mask(c, x);
        if (sh_mask(c, shx) != shx) return false;
        if (x == full) break;
    }
    return true;
}

}  // namespace

ZhuAuditRecord zhu_audit(const Covering& c, int guard) {
    ZhuAuditRecord record{c, sh_idempotent_all(c), {}, {}};
    ZhuCheck c1 = zhu_condition(c, ZhuReading::r1, guard);
    ZhuCheck c2 = zhu_condition(c, ZhuReading::r2, guard);
    record.r1 = {c1.holds, std::move(c1.witness), classify(c1.holds, record.sh_idempotent)};
    record.r2 = {c2.holds, std::move(c2.witness), classify(c2.holds, record.sh_idempotent)};
    return record;
}

}  // namespace covrough
