#include "covrough/enumerate.hpp"

namespace covrough {

std::vector<Subset> enumerate_subsets(const Universe& u) {
    std::vector<Subset> out;
    out.reserve(u.subset_count());
    for (mask_t m = 0; m <= u.full_mask(); ++m) {
        out.emplace_back(u, m);
    }
    return out;
}

namespace {

void extend(const Universe& u, mask_t next, mask_t covered, std::vector<mask_t>& chosen,
            const std::function<void(const Covering&)>& fn) {
    const mask_t full = u.full_mask();
    for (mask_t m = next; m <= full; ++m) {
        chosen.push_back(m);
        if ((covered | m) == full) {
            fn(Covering(u, std::vector<mask_t>(chosen)));
        }
        if (m < full) {
            extend(u, m + 1, covered | m, chosen, fn);
        }
        chosen.pop_back();
    }
}

}  // namespace

void for_each_covering(const Universe& u, const std::function<void(const Covering&)>& fn) {
    if (u.size() > exhaustive_covering_limit) {
        throw error("exhaustive covering enumeration is limited to universes of size <= " +
                    std::to_string(exhaustive_covering_limit));
    }
    std::vector<mask_t> chosen;
    extend(u, 1, 0, chosen, fn);
}

std::vector<Covering> enumerate_coverings(const Universe& u) {
    std::vector<Covering> out;
    for_each_covering(u, [&](const Covering& c) { out.push_back(c); });
    return out;
}

}  // namespace covrough
