#include "covrough/approx.hpp"

namespace covrough {

mask_t sl_mask(const Covering& c, mask_t x) {
    mask_t out = 0;
    for (mask_t k : c.block_masks()) {
        if ((k & ~x) == 0) out |= k;
    }
    return out;
}

mask_t sh_mask(const Covering& c, mask_t x) {
    mask_t out = 0;
    for (mask_t k : c.block_masks()) {
        if (k & x) out |= k;
    }
    return out;
}

namespace {

void require_over(const Covering& c, const Subset& x) {
    if (x.universe() != c.universe()) throw error("universe mismatch");
}

void require_element(const Covering& c, int element) {
    if (element < 0 || element >= c.universe().size()) {
        throw error("element index " + std::to_string(element) + " out of range");
    }
}

}  // namespace

Subset lower_approx(const Covering& c, const Subset& x) {
    require_over(c, x);
    return Subset(c.universe(), sl_mask(c, x.bits()));
}

Subset upper_approx(const Covering& c, const Subset& x) {
    require_over(c, x);
    return Subset(c.universe(), sh_mask(c, x.bits()));
}

SetFamily minimal_description(const Covering& c, int element) {
    require_element(c, element);
    const mask_t e = mask_t{1} << element;
    std::vector<mask_t> md;
    for (mask_t k : c.block_masks()) {
        if (!(k & e)) continue;
        bool minimal = true;
        for (mask_t s : c.block_masks()) {
            if (s != k && (s & e) && (s & ~k) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) md.push_back(k);
    }
    return SetFamily(c.universe(), std::move(md));
}

bool is_unary(const Covering& c) {
    for (int e = 0; e < c.universe().size(); ++e) {
        if (minimal_description(c, e).size() != 1) return false;
    }
    return true;
}

Subset neighborhood(const Covering& c, int element) {
    require_element(c, element);
    const mask_t e = mask_t{1} << element;
    mask_t n = c.universe().full_mask();
    for (mask_t k : c.block_masks()) {
        if (k & e) n &= k;
    }
    return Subset(c.universe(), n);
}

Subset indiscernible_neighborhood(const Covering& c, int element) {
    require_element(c, element);
    const mask_t e = mask_t{1} << element;
    mask_t i = 0;
    for (mask_t k : c.block_masks()) {
        if (k & e) i |= k;
    }
    return Subset(c.universe(), i);
}

SetFamily neighborhood_family(const Covering& c) {
    std::vector<mask_t> members;
    for (int e = 0; e < c.universe().size(); ++e) {
        members.push_back(neighborhood(c, e).bits());
    }
    return SetFamily(c.universe(), std::move(members));
}

SetFamily indiscernible_family(const Covering& c) {
    std::vector<mask_t> members;
    for (int e = 0; e < c.universe().size(); ++e) {
        members.push_back(indiscernible_neighborhood(c, e).bits());
    }
    return SetFamily(c.universe(), std::move(members));
}

SetFamily sh_singleton_family(const Covering& c) {
    std::vector<mask_t> members;
    for (int e = 0; e < c.universe().size(); ++e) {
        members.push_back(sh_mask(c, mask_t{1} << e));
    }
    return SetFamily(c.universe(), std::move(members));
}

const char* approx_law_name(ApproxLaw law) {
    switch (law) {
        case ApproxLaw::L1: return "1L";
        case ApproxLaw::H1: return "1H";
        case ApproxLaw::L2: return "2L";
        case ApproxLaw::H2: return "2H";
        case ApproxLaw::L3: return "3L";
        case ApproxLaw::H3: return "3H";
        case ApproxLaw::H4: return "4H";
        case ApproxLaw::L5: return "5L";
        case ApproxLaw::L6: return "6L";
        case ApproxLaw::H6: return "6H";
        case ApproxLaw::LH7: return "7LH";
    }
    return "?";
}

bool ApproxPropertyReport::all_pass() const {
    for (const auto& r : laws) {
        if (!r.pass) return false;
    }
    return true;
}

const LawResult& ApproxPropertyReport::result(ApproxLaw law) const {
    return laws[static_cast<std::size_t>(law)];
}

ApproxPropertyReport property_report(const Covering& c) {
    const mask_t full = c.universe().full_mask();
    const std::size_t count = c.universe().subset_count();

    std::vector<mask_t> sl(count), sh(count);
    for (mask_t x = 0;; ++x) {
        sl[x] = sl_mask(c, x);
        sh[x] = sh_mask(c, x);
        if (x == full) break;
    }

    ApproxPropertyReport report;
    auto& laws = report.laws;
    for (int i = 0; i < approx_law_count; ++i) {
        laws[static_cast<std::size_t>(i)] = LawResult{static_cast<ApproxLaw>(i), true, 0, 0};
    }
    auto fail = [&](ApproxLaw law, mask_t x, mask_t y) {
        auto& r = laws[static_cast<std::size_t>(law)];
        if (r.pass) {
            r.pass = false;
            r.x = x;
            r.y = y;
        }
    };

    if (sl[full] != full) fail(ApproxLaw::L1, full, 0);
    if (sh[full] != full) fail(ApproxLaw::H1, full, 0);
    if (sl[0] != 0) fail(ApproxLaw::L2, 0, 0);
    if (sh[0] != 0) fail(ApproxLaw::H2, 0, 0);

    for (mask_t x = 0;; ++x) {
        if (sl[x] & ~x) fail(ApproxLaw::L3, x, 0);
        if (x & ~sh[x]) fail(ApproxLaw::H3, x, 0);
        if (sl[sl[x]] != sl[x]) fail(ApproxLaw::L5, x, 0);
        if (sl[x] & ~sh[x]) fail(ApproxLaw::LH7, x, 0);
        if (x == full) break;
    }

    for (mask_t x = 0;; ++x) {
        for (mask_t y = 0;; ++y) {
            if (sh[x | y] != (sh[x] | sh[y])) fail(ApproxLaw::H4, x, y);
            if (y == full) break;
        }
        if (x == full) break;
    }

    // Monotonicity over all pairs X subseteq Y, by submask enumeration of Y.
    for (mask_t y = 0;; ++y) {
        for (mask_t x = y;; x = (x - 1) & y) {
            if (sl[x] & ~sl[y]) fail(ApproxLaw::L6, x, y);
            if (sh[x] & ~sh[y]) fail(ApproxLaw::H6, x, y);
            if (x == 0) break;
        }
        if (y == full) break;
    }

    return report;
}

}  // namespace covrough
