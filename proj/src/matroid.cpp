#include "covrough/matroid.hpp"

#include <algorithm>

namespace covrough {

MatroidCheck check_matroid_axioms(const SetFamily& f) {
    const Universe& u = f.universe();
    if (!f.contains_mask(0)) {
        return {false, "I1: empty set is not independent"};
    }
    for (mask_t m : f.masks()) {
        for (mask_t s = m;; s = (s - 1) & m) {
            if (!f.contains_mask(s)) {
                return {false, "I2: " + mask_to_string(u, s) + " subseteq " +
                                   mask_to_string(u, m) + " is not independent"};
            }
            if (s == 0) break;
        }
    }
    for (mask_t i1 : f.masks()) {
        const int c1 = __builtin_popcount(i1);
        for (mask_t i2 : f.masks()) {
            if (c1 >= __builtin_popcount(i2)) continue;
            bool extended = false;
            for (int e = 0; e < u.size(); ++e) {
                const mask_t bit = mask_t{1} << e;
                if ((i2 & bit) && !(i1 & bit) && f.contains_mask(i1 | bit)) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                return {false, "I3: I1=" + mask_to_string(u, i1) + " I2=" +
                                   mask_to_string(u, i2) + " admits no exchange"};
            }
        }
    }
    return {true, ""};
}

Matroid Matroid::checked(const SetFamily& independents) {
    const MatroidCheck check = check_matroid_axioms(independents);
    if (!check.ok) {
        throw error("independent-set family violates the matroid axioms: " + check.witness);
    }
    return Matroid(independents, true);
}

Matroid Matroid::unchecked(SetFamily independents) {
    return Matroid(std::move(independents), false);
}

Matroid matroid_from_closure(const ClosureTable& t) {
    const AxiomReport report = check_closure_axioms(t);
    if (!report.all_pass()) {
        throw axioms_error("closure table does not satisfy CL1-CL4:\n" +
                               report.describe(t.universe()),
                           report);
    }
    const Universe& u = t.universe();
    std::vector<mask_t> independents;
    const mask_t full = u.full_mask();
    for (mask_t x = 0;; ++x) {
        bool independent = true;
        for (int e = 0; e < u.size(); ++e) {
            const mask_t bit = mask_t{1} << e;
            if ((x & bit) && ((t.map(x & ~bit) >> e) & 1u)) {
                independent = false;
                break;
            }
        }
        if (independent) independents.push_back(x);
        if (x == full) break;
    }
    return Matroid::checked(SetFamily(u, std::move(independents)));
}

int matroid_rank_mask(const Matroid& m, mask_t x) {
    const Universe& u = m.universe();
    if (m.axioms_verified()) {
        mask_t current = 0;
        int rank = 0;
        for (int e = 0; e < u.size(); ++e) {
            const mask_t bit = mask_t{1} << e;
            if ((x & bit) && m.is_independent(current | bit)) {
                current |= bit;
                ++rank;
            }
        }
        return rank;
    }
    int best = 0;
    for (mask_t i : m.independents().masks()) {
        if ((i & ~x) == 0) best = std::max(best, __builtin_popcount(i));
    }
    return best;
}

int matroid_rank(const Matroid& m, const Subset& x) {
    if (x.universe() != m.universe()) throw error("universe mismatch");
    return matroid_rank_mask(m, x.bits());
}

mask_t matroid_closure_mask(const Matroid& m, mask_t x) {
    const int base = matroid_rank_mask(m, x);
    mask_t cl = 0;
    for (int e = 0; e < m.universe().size(); ++e) {
        const mask_t bit = mask_t{1} << e;
        if (matroid_rank_mask(m, x | bit) == base) cl |= bit;
    }
    return cl;
}

Subset matroid_closure(const Matroid& m, const Subset& x) {
    if (x.universe() != m.universe()) throw error("universe mismatch");
    return Subset(m.universe(), matroid_closure_mask(m, x.bits()));
}

ClosureTable matroid_closure_table(const Matroid& m) {
    const Universe& u = m.universe();
    const mask_t full = u.full_mask();
    std::vector<mask_t> image(u.subset_count());
    for (mask_t x = 0;; ++x) {
        image[x] = matroid_closure_mask(m, x);
        if (x == full) break;
    }
    return ClosureTable(u, std::move(image), ClosureTable::Provenance::matroid_closure);
}

}  // namespace covrough
