#include "covrough/closure.hpp"

#include <sstream>

#include "covrough/approx.hpp"

namespace covrough {

ClosureTable::ClosureTable(Universe u, std::vector<mask_t> image, Provenance provenance,
                           bool covering_not_unary)
    : u_(std::move(u)),
      image_(std::move(image)),
      provenance_(provenance),
      covering_not_unary_(covering_not_unary) {
    if (image_.size() != u_.subset_count()) {
        throw error("closure table must map every subset exactly once");
    }
    for (mask_t y : image_) {
        if (y & ~u_.full_mask()) throw error("closure table image outside the universe");
    }
}

Subset ClosureTable::apply(const Subset& x) const {
    if (x.universe() != u_) throw error("universe mismatch");
    return Subset(u_, image_[x.bits()]);
}

SetFamily fixed_point_family(const Covering& c) {
    std::vector<mask_t> members;
    const mask_t full = c.universe().full_mask();
    for (mask_t x = 0;; ++x) {
        if (sl_mask(c, x) == x) members.push_back(x);
        if (x == full) break;
    }
    return SetFamily(c.universe(), std::move(members));
}

bool is_closure_system(const SetFamily& f) {
    if (!f.contains_mask(f.universe().full_mask())) return false;
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (!f.contains_mask(ms[i] & ms[j])) return false;
        }
    }
    return true;
}

Subset closure_from_system(const SetFamily& f, const Subset& x) {
    if (x.universe() != f.universe()) throw error("universe mismatch");
    if (!is_closure_system(f)) throw error("family is not a closure system");
    mask_t out = f.universe().full_mask();
    for (mask_t s : f.masks()) {
        if ((x.bits() & ~s) == 0) out &= s;
    }
    return Subset(f.universe(), out);
}

ClosureTable induced_closure(const Covering& c) {
    const SetFamily s = fixed_point_family(c);
    const mask_t full = c.universe().full_mask();
    std::vector<mask_t> image(c.universe().subset_count());
    for (mask_t x = 0;; ++x) {
        mask_t inter = full;
        for (mask_t m : s.masks()) {
            if ((x & ~m) == 0) inter &= m;
        }
        image[x] = inter;
        if (x == full) break;
    }
    return ClosureTable(c.universe(), std::move(image),
                        ClosureTable::Provenance::induced_from_fixed_points, !is_unary(c));
}

ClosureTable sh_as_closure_table(const Covering& c) {
    const mask_t full = c.universe().full_mask();
    std::vector<mask_t> image(c.universe().subset_count());
    for (mask_t x = 0;; ++x) {
        image[x] = sh_mask(c, x);
        if (x == full) break;
    }
    return ClosureTable(c.universe(), std::move(image), ClosureTable::Provenance::sh_operator);
}

AxiomReport check_closure_axioms(const ClosureTable& t) {
    const Universe& u = t.universe();
    const mask_t full = u.full_mask();
    const int n = u.size();
    AxiomReport report;

    for (mask_t x = 0;; ++x) {
        if (x & ~t.map(x)) {
            report.cl1 = {false, ClosureAxiomWitness{x, 0, -1, -1}};
            break;
        }
        if (x == full) break;
    }

    // CL2 over all pairs X subseteq Y, by submask enumeration of Y.
    for (mask_t y = 0; report.cl2.pass; ++y) {
        for (mask_t x = y;; x = (x - 1) & y) {
            if (t.map(x) & ~t.map(y)) {
                report.cl2 = {false, ClosureAxiomWitness{x, y, -1, -1}};
                break;
            }
            if (x == 0) break;
        }
        if (y == full) break;
    }

    for (mask_t x = 0;; ++x) {
        if (t.map(t.map(x)) != t.map(x)) {
            report.cl3 = {false, ClosureAxiomWitness{x, 0, -1, -1}};
            break;
        }
        if (x == full) break;
    }

    for (mask_t x = 0; report.cl4.pass; ++x) {
        const mask_t clx = t.map(x);
        for (int ex = 0; ex < n && report.cl4.pass; ++ex) {
            const mask_t gained = t.map(x | (mask_t{1} << ex)) & ~clx;
            if (!gained) continue;
            for (int ey = 0; ey < n; ++ey) {
                if (!((gained >> ey) & 1u)) continue;
                if (!((t.map(x | (mask_t{1} << ey)) >> ex) & 1u)) {
                    report.cl4 = {false, ClosureAxiomWitness{x, 0, ex, ey}};
                    break;
                }
            }
        }
        if (x == full) break;
    }

    return report;
}

std::string AxiomReport::describe(const Universe& u) const {
    std::ostringstream os;
    auto line = [&](const char* name, const AxiomEntry& e, const std::string& witness) {
        os << name << ": " << (e.pass ? "pass" : "FAIL") << witness << '\n';
    };
    line("CL1", cl1,
         cl1.pass ? "" : "  X=" + mask_to_string(u, cl1.witness->set_x));
    line("CL2", cl2,
         cl2.pass ? ""
                  : "  X=" + mask_to_string(u, cl2.witness->set_x) +
                        " Y=" + mask_to_string(u, cl2.witness->set_y));
    line("CL3", cl3,
         cl3.pass ? "" : "  X=" + mask_to_string(u, cl3.witness->set_x));
    line("CL4", cl4,
         cl4.pass ? ""
                  : "  X=" + mask_to_string(u, cl4.witness->set_x) + " x=" +
                        u.label(cl4.witness->elem_x) + " y=" + u.label(cl4.witness->elem_y));
    return os.str();
}

}  // namespace covrough
