#ifndef COVROUGH_APPROX_HPP
#define COVROUGH_APPROX_HPP

#include <array>
#include <optional>
#include <string>

#include "covrough/covering.hpp"
#include "covrough/set_family.hpp"

namespace covrough {

// Second-type approximation operators over a covering C:
//   SL(X) = union of blocks contained in X
//   SH(X) = union of blocks meeting X

mask_t sl_mask(const Covering& c, mask_t x);
mask_t sh_mask(const Covering& c, mask_t x);

Subset lower_approx(const Covering& c, const Subset& x);
Subset upper_approx(const Covering& c, const Subset& x);

/// Md(e): the inclusion-minimal blocks containing element e.
SetFamily minimal_description(const Covering& c, int element);

/// True iff |Md(e)| == 1 for every element.
bool is_unary(const Covering& c);

/// N(e): intersection of all blocks containing e. Always contains e.
Subset neighborhood(const Covering& c, int element);

/// I(e): union of all blocks containing e. Equals SH({e}).
Subset indiscernible_neighborhood(const Covering& c, int element);

/// {N(e) : e in U} with duplicates collapsed.
SetFamily neighborhood_family(const Covering& c);

/// {I(e) : e in U} with duplicates collapsed.
SetFamily indiscernible_family(const Covering& c);

/// {SH({e}) : e in U}, computed through the SH operator (not through block
/// unions), with duplicates collapsed.
SetFamily sh_singleton_family(const Covering& c);

/// Algebraic laws of SL/SH, each verified exhaustively over all subsets
/// (all pairs for the binary laws).
enum class ApproxLaw { L1, H1, L2, H2, L3, H3, H4, L5, L6, H6, LH7 };
constexpr int approx_law_count = 11;

const char* approx_law_name(ApproxLaw law);  // "1L", "1H", ...

struct LawResult {
    ApproxLaw law{};
    bool pass = true;
    // Witness masks on failure; y used only by the binary laws.
    mask_t x = 0;
    mask_t y = 0;
};

struct ApproxPropertyReport {
    std::array<LawResult, approx_law_count> laws;
    bool all_pass() const;
    const LawResult& result(ApproxLaw law) const;
};

ApproxPropertyReport property_report(const Covering& c);

}  // namespace covrough

#endif
