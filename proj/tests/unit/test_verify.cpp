#include "doctest.h"

#include <string>

#include "covrough/closure.hpp"
#include "covrough/enumerate.hpp"
#include "covrough/matroid.hpp"
#include "covrough/reduct.hpp"
#include "covrough/verify.hpp"

using namespace covrough;

namespace {

Covering e1() {
    return Covering::make(letter_universe(3), {{"a", "b"}, {"a", "c"}});
}
Covering e2() {
    return Covering::make(letter_universe(3), {{"a", "b"}, {"c"}});
}
Covering e3() {
    return Covering::make(letter_universe(2), {{"a"}, {"a", "b"}});
}

}  // namespace

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : all_theorem_ids()) {
        CHECK(theorem_from_name(theorem_name(id)) == id);
    }
    CHECK(theorem_name(TheoremId::sl_mult_iff_unary) == "SL-MULT-IFF-UNARY");
    CHECK(theorem_name(TheoremId::matroid_exists_iff_reduct_partition) ==
          "MATROID-EXISTS-IFF-REDUCT-PARTITION");
    CHECK_THROWS_WITH_AS(theorem_from_name("NOPE"), "unknown theorem id \"NOPE\"", error);
}

TEST_CASE("verdicts on the worked examples") {
    TheoremVerdict idem = verify_theorem(e1(), TheoremId::sh_idem_iff_shx_partition);
    CHECK(idem.applicable);
    CHECK_FALSE(idem.left);
    CHECK_FALSE(idem.right);
    CHECK(idem.agree);
    CHECK(idem.witness.empty());

    TheoremVerdict exists = verify_theorem(e2(), TheoremId::matroid_exists_iff_reduct_partition);
    CHECK(exists.left);
    CHECK(exists.right);
    CHECK(exists.agree);

    TheoremVerdict cl4 = verify_theorem(e3(), TheoremId::cl4_iff_n_partition);
    CHECK(cl4.applicable);
    CHECK_FALSE(cl4.left);
    CHECK_FALSE(cl4.right);
    CHECK(cl4.agree);

    TheoremVerdict inapplicable = verify_theorem(e1(), TheoremId::cl4_iff_n_partition);
    CHECK_FALSE(inapplicable.applicable);
    CHECK(inapplicable.agree);
    CHECK_FALSE(verify_theorem(e1(), TheoremId::reduct_of_unary_formula).applicable);

    TheoremVerdict unary_formula = verify_theorem(e3(), TheoremId::reduct_of_unary_formula);
    CHECK(unary_formula.applicable);
    CHECK(unary_formula.left);
    CHECK(unary_formula.right);

    TheoremVerdict lemma = verify_theorem(e1(), TheoremId::sh_sufficiency_lemma);
    CHECK(lemma.one_directional);
    CHECK_FALSE(lemma.left);
    CHECK(lemma.agree);
    CHECK(verify_theorem(e2(), TheoremId::sh_sufficiency_lemma).left);
    CHECK(verify_theorem(e2(), TheoremId::sh_sufficiency_lemma).right);
}

TEST_CASE("every statement holds on every covering of up to three elements") {
    for (int n = 1; n <= 3; ++n) {
        for (const Covering& c : enumerate_coverings(letter_universe(n))) {
            for (TheoremId id : all_theorem_ids()) {
                TheoremVerdict v = verify_theorem(c, id);
                CAPTURE(theorem_name(id));
                CAPTURE(c.to_string());
                CAPTURE(v.witness);
                REQUIRE(v.agree);
                REQUIRE(v.witness.empty());
            }
        }
    }
}

TEST_CASE("matroid existence requires the fixed points to form a closure system") {
    // The intersection table of a family that is not a closure system can
    // still satisfy CL1-CL4 and round-trip through a matroid: here it is the
    // identity, the free matroid's closure. Its closed sets include {c},
    // which is not a fixed point, so no matroid closure equals an operator
    // induced by the fixed-point family, and the verdict rests on the
    // closure-system test coming out false.
    Covering c = Covering::make(letter_universe(3),
                                {{"a"}, {"b"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
    SetFamily fpf = fixed_point_family(c);
    CHECK(fpf.size() == 7);  // every subset except {c}
    CHECK_FALSE(fpf.contains_mask(0b100));
    CHECK_FALSE(is_closure_system(fpf));

    ClosureTable naive = induced_closure(c);
    for (mask_t x = 0; x <= 0b111; ++x) CHECK(naive.map(x) == x);
    CHECK(check_closure_axioms(naive).all_pass());
    CHECK(matroid_closure_table(matroid_from_closure(naive)) == naive);

    CHECK_FALSE(reduct_is_partition(c));
    TheoremVerdict v = verify_theorem(c, TheoremId::matroid_exists_iff_reduct_partition);
    CHECK_FALSE(v.left);
    CHECK_FALSE(v.right);
    CHECK(v.agree);
}
