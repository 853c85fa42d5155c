#include "covrough/set_family.hpp"

#include <algorithm>
#include <sstream>

namespace covrough {

SetFamily::SetFamily(Universe u, std::vector<mask_t> members)
    : u_(std::move(u)), members_(std::move(members)) {
    const mask_t full = u_.full_mask();
    for (mask_t m : members_) {
        if (m & ~full) throw error("set family member has bits outside the universe");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::of_subsets(const Universe& u, const std::vector<Subset>& members) {
    std::vector<mask_t> masks;
    masks.reserve(members.size());
    for (const auto& s : members) {
        if (s.universe() != u) throw error("universe mismatch");
        masks.push_back(s.bits());
    }
    return SetFamily(u, std::move(masks));
}

bool SetFamily::contains_mask(mask_t m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

std::string SetFamily::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ',';
        os << mask_to_string(u_, members_[i]);
    }
    os << '}';
    return os.str();
}

bool is_partition(const SetFamily& f) {
    mask_t covered = 0;
    for (mask_t m : f.masks()) {
        if (m == 0) return false;
        if (m & covered) return false;
        covered |= m;
    }
    return covered == f.universe().full_mask();
}

}  // namespace covrough
