#ifndef COVROUGH_UNIVERSE_HPP
#define COVROUGH_UNIVERSE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covrough {

/// Error type for all input validation and contract violations.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using mask_t = std::uint32_t;

/// Ordered finite ground set of labeled elements. Immutable; cheap to copy.
///
/// Element i corresponds to bit i of a mask_t, so a universe of size n has
/// 2^n subsets representable as masks 0 .. 2^n - 1.
class Universe {
public:
    static constexpr int default_cap = 16;
    static constexpr int hard_cap = 24;  // mask width / table size ceiling

    /// Builds a universe from distinct labels. Element order = input order.
    explicit Universe(std::vector<std::string> labels, int cap = default_cap);

    int size() const { return static_cast<int>(labels_->size()); }
    const std::string& label(int i) const { return (*labels_)[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return *labels_; }

    /// Index of a label; throws covrough::error if unknown.
    int index_of(std::string_view label) const;
    bool has_label(std::string_view label) const;

    mask_t full_mask() const { return (size() == 32) ? ~mask_t{0} : ((mask_t{1} << size()) - 1); }
    std::size_t subset_count() const { return std::size_t{1} << size(); }

    bool operator==(const Universe& o) const {
        return labels_ == o.labels_ || *labels_ == *o.labels_;
    }
    bool operator!=(const Universe& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Convenience alphabetic universe "a", "b", "c", ... of size n (n <= hard_cap).
Universe letter_universe(int n);

inline Universe make_universe(std::vector<std::string> labels, int cap = Universe::default_cap) {
    return Universe(std::move(labels), cap);
}

/// A subset of a universe, stored as a bitmask over element indices.
class Subset {
public:
    Subset(Universe u, mask_t bits);

    static Subset empty(const Universe& u) { return Subset(u, 0); }
    static Subset full(const Universe& u) { return Subset(u, u.full_mask()); }
    static Subset of_labels(const Universe& u, const std::vector<std::string>& labels);
    static Subset singleton(const Universe& u, int element) { return Subset(u, mask_t{1} << element); }

    mask_t bits() const { return bits_; }
    const Universe& universe() const { return u_; }

    bool contains(int element) const { return (bits_ >> element) & 1u; }
    int count() const { return __builtin_popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool subset_of(const Subset& o) const { require_same_universe(o); return (bits_ & ~o.bits_) == 0; }
    bool intersects(const Subset& o) const { require_same_universe(o); return (bits_ & o.bits_) != 0; }

    Subset operator|(const Subset& o) const { require_same_universe(o); return Subset(u_, bits_ | o.bits_); }
    Subset operator&(const Subset& o) const { require_same_universe(o); return Subset(u_, bits_ & o.bits_); }
    Subset operator-(const Subset& o) const { require_same_universe(o); return Subset(u_, bits_ & ~o.bits_); }

    bool operator==(const Subset& o) const { return u_ == o.u_ && bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }

    /// Member labels in element order.
    std::vector<std::string> labels() const;
    /// Canonical rendering, e.g. "{a,b}"; "{}" when empty.
    std::string to_string() const;

private:
    void require_same_universe(const Subset& o) const;

    Universe u_;
    mask_t bits_;
};

/// Canonical rendering of a raw mask against a universe.
std::string mask_to_string(const Universe& u, mask_t bits);

}  // namespace covrough

#endif
