#include "covrough/universe.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace covrough {

Universe::Universe(std::vector<std::string> labels, int cap) {
    if (labels.empty()) {
        throw error("universe needs at least one label");
    }
    if (cap < 1 || cap > hard_cap) {
        throw error("universe cap " + std::to_string(cap) + " out of range [1, " +
                    std::to_string(hard_cap) + "]");
    }
    if (static_cast<int>(labels.size()) > cap) {
        throw error("universe size " + std::to_string(labels.size()) + " exceeds cap " +
                    std::to_string(cap));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw error("duplicate label \"" + l + "\"");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

int Universe::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if ((*labels_)[static_cast<std::size_t>(i)] == label) return i;
    }
    throw error("label \"" + std::string(label) + "\" not in universe");
}

bool Universe::has_label(std::string_view label) const {
    for (const auto& l : *labels_) {
        if (l == label) return true;
    }
    return false;
}

Universe letter_universe(int n) {
    if (n < 1 || n > Universe::hard_cap) {
        throw error("letter universe size " + std::to_string(n) + " out of range [1, " +
                    std::to_string(Universe::hard_cap) + "]");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return Universe(std::move(labels), std::max(n, Universe::default_cap));
}

Subset::Subset(Universe u, mask_t bits) : u_(std::move(u)), bits_(bits) {
    if (bits_ & ~u_.full_mask()) {
        throw error("subset mask has bits outside the universe");
    }
}

Subset Subset::of_labels(const Universe& u, const std::vector<std::string>& labels) {
    mask_t bits = 0;
    for (const auto& l : labels) {
        bits |= mask_t{1} << u.index_of(l);
    }
    return Subset(u, bits);
}

void Subset::require_same_universe(const Subset& o) const {
    if (u_ != o.u_) throw error("universe mismatch");
}

std::vector<std::string> Subset::labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < u_.size(); ++i) {
        if (contains(i)) out.push_back(u_.label(i));
    }
    return out;
}

std::string Subset::to_string() const { return mask_to_string(u_, bits_); }

std::string mask_to_string(const Universe& u, mask_t bits) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < u.size(); ++i) {
        if ((bits >> i) & 1u) {
            if (!first) os << ',';
            os << u.label(i);
            first = false;
        }
    }
    os << '}';
    return os.str();
}

}  // namespace covrough
