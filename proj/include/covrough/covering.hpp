#ifndef COVROUGH_COVERING_HPP
#define COVROUGH_COVERING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "covrough/set_family.hpp"
#include "covrough/universe.hpp"

namespace covrough {

/// A covering of a universe: a family of distinct nonempty subsets (blocks)
/// whose union is the whole universe. Blocks are kept sorted by mask.
class Covering {
public:
    Covering(Universe u, std::vector<mask_t> block_masks);

    /// Builds a covering from label lists. Duplicate blocks (as sets) are
    /// collapsed; empty blocks, unknown labels, and incomplete unions are
    /// rejected with a message naming the offender.
    static Covering make(const Universe& u, const std::vector<std::vector<std::string>>& blocks);

    const Universe& universe() const { return u_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<mask_t>& block_masks() const { return blocks_; }
    Subset block(int i) const { return Subset(u_, blocks_[static_cast<std::size_t>(i)]); }

    /// The blocks as a SetFamily (for partition tests and family algebra).
    SetFamily blocks_family() const { return SetFamily(u_, blocks_); }

    bool has_block(mask_t m) const;

    bool operator==(const Covering& o) const { return u_ == o.u_ && blocks_ == o.blocks_; }
    bool operator!=(const Covering& o) const { return !(*this == o); }

    std::string to_string() const { return blocks_family().to_string(); }

private:
    Universe u_;
    std::vector<mask_t> blocks_;
};

inline Covering make_covering(const Universe& u, const std::vector<std::vector<std::string>>& blocks) {
    return Covering::make(u, blocks);
}

/// Seed-deterministic random covering. Scheme: draw one bit per nonempty
/// subset of U, in ascending mask order, from the word stream of a
/// std::mt19937_64 seeded with `seed` (bit k of each word covers mask
/// 64*w + k + 1); a subset becomes a block when its bit is 1. Elements left
/// uncovered are then patched with their singleton blocks.
Covering random_covering(const Universe& u, std::uint64_t seed);

}  // namespace covrough

#endif
