#ifndef COVROUGH_SET_FAMILY_HPP
#define COVROUGH_SET_FAMILY_HPP

#include <string>
#include <vector>

#include "covrough/universe.hpp"

namespace covrough {

/// A finite family of distinct subsets of one universe. The empty subset is
/// a permitted member. Members are kept sorted by mask, so two families over
/// the same universe are equal iff their mask vectors are equal.
class SetFamily {
public:
    explicit SetFamily(Universe u) : u_(std::move(u)) {}
    SetFamily(Universe u, std::vector<mask_t> members);

    static SetFamily of_subsets(const Universe& u, const std::vector<Subset>& members);

    const Universe& universe() const { return u_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    const std::vector<mask_t>& masks() const { return members_; }
    Subset member(int i) const { return Subset(u_, members_[static_cast<std::size_t>(i)]); }
    bool contains_mask(mask_t m) const;

    bool operator==(const SetFamily& o) const { return u_ == o.u_ && members_ == o.members_; }
    bool operator!=(const SetFamily& o) const { return !(*this == o); }

    /// Canonical rendering, e.g. "{{a},{a,b}}"; members in mask order.
    std::string to_string() const;

private:
    Universe u_;
    std::vector<mask_t> members_;
};

/// True iff the members are nonempty, pairwise disjoint, and union to the
/// whole universe.
bool is_partition(const SetFamily& f);

}  // namespace covrough

#endif
