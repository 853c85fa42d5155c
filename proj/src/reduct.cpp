#include "covrough/reduct.hpp"

namespace covrough {

namespace {

bool reducible_in(const std::vector<mask_t>& blocks, mask_t k) {
    mask_t covered = 0;
    for (mask_t b : blocks) {
        if (b != k && (b & ~k) == 0) covered |= b;
    }
    return covered == k;
}

}  // namespace

bool is_reducible_mask(const Covering& c, mask_t k) {
    if (!c.has_block(k)) {
        throw error(mask_to_string(c.universe(), k) + " is not a block of the covering");
    }
    return reducible_in(c.block_masks(), k);
}

bool is_reducible(const Covering& c, const Subset& k) {
    if (k.universe() != c.universe()) throw error("universe mismatch");
    return is_reducible_mask(c, k.bits());
}

Covering compute_reduct(const Covering& c) {
    std::vector<mask_t> blocks = c.block_masks();
    bool deleted = true;
    while (deleted) {
        deleted = false;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (reducible_in(blocks, blocks[i])) {
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
                deleted = true;
                break;
            }
        }
    }
    return Covering(c.universe(), std::move(blocks));
}

bool reduct_is_partition(const Covering& c) {
    return is_partition(compute_reduct(c).blocks_family());
}

}  // namespace covrough
