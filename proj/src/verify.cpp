#include "covrough/verify.hpp"

#include <sstream>

#include "covrough/approx.hpp"
#include "covrough/closure.hpp"
#include "covrough/matroid.hpp"
#include "covrough/reduct.hpp"

namespace covrough {

std::array<TheoremId, theorem_count> all_theorem_ids() {
    return {TheoremId::sl_mult_iff_unary,
            TheoremId::s_closure_iff_unary,
            TheoremId::cl4_iff_n_partition,
            TheoremId::reduct_partition_equiv,
            TheoremId::matroid_exists_iff_reduct_partition,
            TheoremId::sh_idem_iff_shx_partition,
            TheoremId::shx_partition_iff_i_partition,
            TheoremId::sh_matroid_iff_i_partition,
            TheoremId::reduct_of_unary_formula,
            TheoremId::sh_sufficiency_lemma};
}

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::sl_mult_iff_unary: return "SL-MULT-IFF-UNARY";
        case TheoremId::s_closure_iff_unary: return "S-CLOSURE-IFF-UNARY";
        case TheoremId::cl4_iff_n_partition: return "CL4-IFF-N-PARTITION";
        case TheoremId::reduct_partition_equiv: return "REDUCT-PARTITION-EQUIV";
        case TheoremId::matroid_exists_iff_reduct_partition:
            return "MATROID-EXISTS-IFF-REDUCT-PARTITION";
        case TheoremId::sh_idem_iff_shx_partition: return "SH-IDEM-IFF-SHX-PARTITION";
        case TheoremId::shx_partition_iff_i_partition: return "SHX-PARTITION-IFF-I-PARTITION";
        case TheoremId::sh_matroid_iff_i_partition: return "SH-MATROID-IFF-I-PARTITION";
        case TheoremId::reduct_of_unary_formula: return "REDUCT-OF-UNARY-FORMULA";
        case TheoremId::sh_sufficiency_lemma: return "SH-SUFFICIENCY-LEMMA";
    }
    return "?";
}

TheoremId theorem_from_name(std::string_view name) {
    for (TheoremId id : all_theorem_ids()) {
        if (theorem_name(id) == name) return id;
    }
    throw error("unknown theorem id \"" + std::string(name) + "\"");
}

namespace {

bool sl_multiplicative(const Covering& c, std::string* witness) {
    const mask_t full = c.universe().full_mask();
    const std::size_t count = c.universe().subset_count();
    std::vector<mask_t> sl(count);
    for (mask_t x = 0;; ++x) {
        sl[x] = sl_mask(c, x);
        if (x == full) break;
    }
    for (mask_t x = 0;; ++x) {
        for (mask_t y = 0;; ++y) {
            if (sl[x & y] != (sl[x] & sl[y])) {
                if (witness) {
                    *witness = "SL multiplicativity fails at X=" +
                               mask_to_string(c.universe(), x) + " Y=" +
                               mask_to_string(c.universe(), y);
                }
                return false;
            }
            if (y == full) break;
        }
        if (x == full) break;
    }
    return true;
}

bool sh_idempotent(const Covering& c, std::string* witness) {
    const mask_t full = c.universe().full_mask();
    for (mask_t x = 0;; ++x) {
        const mask_t shx = sh_mask(c, x);
        if (sh_mask(c, shx) != shx) {
            if (witness) {
                *witness = "SH(SH(X)) != SH(X) at X=" + mask_to_string(c.universe(), x);
            }
            return false;
        }
        if (x == full) break;
    }
    return true;
}

/// {K in Md(x) : x in U}: the union over elements of their minimal
/// descriptions, as one family.
SetFamily md_union_family(const Covering& c) {
    std::vector<mask_t> members;
    for (int e = 0; e < c.universe().size(); ++e) {
        SetFamily md = minimal_description(c, e);
        for (mask_t k : md.masks()) {
            members.push_back(k);
        }
    }
    return SetFamily(c.universe(), std::move(members));
}

/// Left side of the matroid-existence theorem: some matroid's closure
/// operator equals the closure operator induced by the fixed-point family.
/// An operator is induced by S only when S is a closure system (otherwise
/// no operator qualifies, even though the intersection formula stays total
/// and can coincidentally satisfy CL1-CL4 with closed sets strictly larger
/// than S — e.g. {{a},{b},{a,b},{a,c},{b,c}}, whose table is the identity).
bool induced_is_matroid_closure(const Covering& c, std::string* witness) {
    if (!is_closure_system(fixed_point_family(c))) {
        if (witness) *witness = "fixed-point family is not a closure system";
        return false;
    }
    const ClosureTable table = induced_closure(c);
    const AxiomReport report = check_closure_axioms(table);
    if (!report.all_pass()) return false;
    const Matroid m = matroid_from_closure(table);
    const ClosureTable round = matroid_closure_table(m);
    if (!(round == table)) {
        if (witness) {
            for (mask_t x = 0;; ++x) {
                if (round.map(x) != table.map(x)) {
                    *witness = "matroid closure differs from induced closure at X=" +
                               mask_to_string(c.universe(), x);
                    break;
                }
                if (x == c.universe().full_mask()) break;
            }
        }
        return false;
    }
    return true;
}

TheoremVerdict finish(TheoremVerdict v, const Covering& c, std::string detail) {
    v.agree = !v.applicable || (v.one_directional ? (!v.left || v.right) : (v.left == v.right));
    if (!v.agree) {
        std::ostringstream os;
        os << theorem_name(v.id) << " disagrees on " << c.to_string() << ": left="
           << (v.left ? "true" : "false") << " right=" << (v.right ? "true" : "false");
        if (!detail.empty()) os << " (" << detail << ")";
        v.witness = os.str();
    }
    return v;
}

}  // namespace

TheoremVerdict verify_theorem(const Covering& c, TheoremId id) {
    TheoremVerdict v;
    v.id = id;
    std::string detail;
    switch (id) {
        case TheoremId::sl_mult_iff_unary:
            v.left = sl_multiplicative(c, &detail);
            v.right = is_unary(c);
            break;
        case TheoremId::s_closure_iff_unary:
            v.left = is_closure_system(fixed_point_family(c));
            v.right = is_unary(c);
            break;
        case TheoremId::cl4_iff_n_partition:
            v.applicable = is_unary(c);
            if (v.applicable) {
                v.left = check_closure_axioms(induced_closure(c)).cl4.pass;
                v.right = is_partition(neighborhood_family(c));
            }
            break;
        case TheoremId::reduct_partition_equiv:
            v.left = is_unary(c) && is_partition(neighborhood_family(c));
            v.right = reduct_is_partition(c);
            break;
        case TheoremId::matroid_exists_iff_reduct_partition:
            v.left = induced_is_matroid_closure(c, &detail);
            v.right = reduct_is_partition(c);
            break;
        case TheoremId::sh_idem_iff_shx_partition:
            v.left = sh_idempotent(c, &detail);
            v.right = is_partition(sh_singleton_family(c));
            break;
        case TheoremId::shx_partition_iff_i_partition:
            v.left = is_partition(sh_singleton_family(c));
            v.right = is_partition(indiscernible_family(c));
            break;
        case TheoremId::sh_matroid_iff_i_partition:
            v.left = check_closure_axioms(sh_as_closure_table(c)).all_pass();
            v.right = is_partition(indiscernible_family(c));
            break;
        case TheoremId::reduct_of_unary_formula:
            v.applicable = is_unary(c);
            if (v.applicable) {
                v.left = compute_reduct(c).blocks_family() == md_union_family(c);
                v.right = true;
            }
            break;
        case TheoremId::sh_sufficiency_lemma:
            v.one_directional = true;
            v.left = is_partition(sh_singleton_family(c));
            v.right = sh_idempotent(c, &detail);
            break;
    }
    return finish(v, c, detail);
}

}  // namespace covrough
