#include "covrough/covering.hpp"

#include <algorithm>
#include <random>

namespace covrough {

Covering::Covering(Universe u, std::vector<mask_t> block_masks)
    : u_(std::move(u)), blocks_(std::move(block_masks)) {
    const mask_t full = u_.full_mask();
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
    mask_t covered = 0;
    for (mask_t m : blocks_) {
        if (m == 0) throw error("covering block must not be empty");
        if (m & ~full) throw error("covering block has bits outside the universe");
        covered |= m;
    }
    if (covered != full) {
        throw error("blocks do not cover the universe; uncovered: " +
                    mask_to_string(u_, full & ~covered));
    }
}

Covering Covering::make(const Universe& u, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<mask_t> masks;
    masks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) {
            throw error("covering block #" + std::to_string(i) + " is empty");
        }
        mask_t m = 0;
        for (const auto& label : blocks[i]) {
            m |= mask_t{1} << u.index_of(label);
        }
        masks.push_back(m);
    }
    return Covering(u, std::move(masks));
}

bool Covering::has_block(mask_t m) const {
    return std::binary_search(blocks_.begin(), blocks_.end(), m);
}

Covering random_covering(const Universe& u, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const mask_t full = u.full_mask();
    std::vector<mask_t> blocks;
    std::uint64_t word = 0;
    int bits_left = 0;
    mask_t covered = 0;
    for (mask_t m = 1; m <= full; ++m) {
        if (bits_left == 0) {
            word = rng();
            bits_left = 64;
        }
        if (word & 1u) {
            blocks.push_back(m);
            covered |= m;
        }
        word >>= 1;
        --bits_left;
    }
    for (int e = 0; e < u.size(); ++e) {
        if (!((covered >> e) & 1u)) blocks.push_back(mask_t{1} << e);
    }
    return Covering(u, std::move(blocks));
}

}  // namespace covrough
