#ifndef COVROUGH_REDUCT_HPP
#define COVROUGH_REDUCT_HPP

#include "covrough/covering.hpp"

namespace covrough {

/// True iff block k equals a union of blocks of c other than k itself.
/// Since any such union consists of proper sub-blocks of k, this is decided
/// by testing whether the union of all other blocks contained in k is k.
bool is_reducible(const Covering& c, const Subset& k);
bool is_reducible_mask(const Covering& c, mask_t k);

/// Deletes reducible blocks to a fixpoint: scan blocks in canonical order,
/// delete the first reducible one, restart. The result is a covering with
/// no reducible block.
Covering compute_reduct(const Covering& c);

/// is_partition(compute_reduct(c)).
bool reduct_is_partition(const Covering& c);

}  // namespace covrough

#endif
