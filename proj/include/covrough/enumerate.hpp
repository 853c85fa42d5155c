#ifndef COVROUGH_ENUMERATE_HPP
#define COVROUGH_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "covrough/covering.hpp"
#include "covrough/universe.hpp"

namespace covrough {

/// All 2^n subsets of the universe, in ascending mask order.
std::vector<Subset> enumerate_subsets(const Universe& u);

/// Largest universe size for which exhaustive covering enumeration is allowed.
constexpr int exhaustive_covering_limit = 4;

/// Visits every covering of the universe exactly once, in lexicographic
/// order of the sorted block-mask sequence. Guarded: n <= 4.
void for_each_covering(const Universe& u, const std::function<void(const Covering&)>& fn);

/// Materialized form of for_each_covering, same order and guard.
std::vector<Covering> enumerate_coverings(const Universe& u);

}  // namespace covrough

#endif
