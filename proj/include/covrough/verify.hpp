#ifndef COVROUGH_VERIFY_HPP
#define COVROUGH_VERIFY_HPP

#include <array>
#include <string>
#include <string_view>

#include "covrough/covering.hpp"

namespace covrough {

/// Statements checked per covering. Equivalences unless noted; both sides are
/// evaluated independently and exhaustively over all subsets or pairs.
enum class TheoremId {
    sl_mult_iff_unary,                  // SL(X&Y) == SL(X)&SL(Y) for all X,Y  <=>  unary
    s_closure_iff_unary,                // fixed-point family is a closure system  <=>  unary
    cl4_iff_n_partition,                // [unary only] induced closure satisfies CL4  <=>  {N(x)} partition
    reduct_partition_equiv,             // unary and {N(x)} partition  <=>  reduct is a partition
    matroid_exists_iff_reduct_partition,// a matroid closure equals the operator induced by the
                                        // fixed-point family (which must be a closure system)
                                        //   <=>  reduct is a partition
    sh_idem_iff_shx_partition,          // SH idempotent  <=>  {SH({x})} partition
    shx_partition_iff_i_partition,      // {SH({x})} partition  <=>  {I(x)} partition
    sh_matroid_iff_i_partition,         // SH satisfies CL1-CL4  <=>  {I(x)} partition
    reduct_of_unary_formula,            // [unary only] reduct(C) == {K in Md(x) : x in U}
    sh_sufficiency_lemma,               // {SH({x})} partition  =>  SH idempotent (one-directional)
};

constexpr int theorem_count = 10;

std::array<TheoremId, theorem_count> all_theorem_ids();
std::string_view theorem_name(TheoremId id);      // e.g. "SL-MULT-IFF-UNARY"
TheoremId theorem_from_name(std::string_view name);  // throws on unknown id

struct TheoremVerdict {
    TheoremId id{};
    bool applicable = true;   // false when the statement's precondition (unary) is unmet
    bool one_directional = false;
    bool left = false;
    bool right = false;
    bool agree = true;        // iff: left == right; one-directional: left => right
    std::string witness;      // diagnostic on disagreement
};

TheoremVerdict verify_theorem(const Covering& c, TheoremId id);

}  // namespace covrough

#endif
