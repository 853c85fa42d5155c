#ifndef COVROUGH_MATROID_HPP
#define COVROUGH_MATROID_HPP

#include <string>

#include "covrough/closure.hpp"
#include "covrough/set_family.hpp"

namespace covrough {

struct MatroidCheck {
    bool ok = true;
    std::string witness;  // which axiom failed and where
};

/// Verifies I1 (empty set), I2 (hereditary, by submask scan of each member),
/// I3 (exchange, by exhaustive pair scan).
MatroidCheck check_matroid_axioms(const SetFamily& f);

/// Thrown when a closure table does not satisfy CL1-CL4; carries the report.
class axioms_error : public error {
public:
    axioms_error(std::string what, AxiomReport report)
        : error(std::move(what)), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// A matroid given by its full independent-set family.
class Matroid {
public:
    /// Validates I1-I3; throws covrough::error with the witness on failure.
    static Matroid checked(const SetFamily& independents);
    /// Skips validation; rank falls back to an exhaustive scan.
    static Matroid unchecked(SetFamily independents);

    const Universe& universe() const { return independents_.universe(); }
    const SetFamily& independents() const { return independents_; }
    bool axioms_verified() const { return verified_; }
    bool is_independent(mask_t x) const { return independents_.contains_mask(x); }

private:
    Matroid(SetFamily independents, bool verified)
        : independents_(std::move(independents)), verified_(verified) {}

    SetFamily independents_;
    bool verified_;
};

/// Independents = {X : for every e in X, e not in t(X - {e})}. Requires the
/// table to satisfy CL1-CL4; throws axioms_error otherwise.
Matroid matroid_from_closure(const ClosureTable& t);

/// Size of a largest independent subset of x. Greedy over element order when
/// the axioms were verified at construction, exhaustive scan otherwise.
int matroid_rank(const Matroid& m, const Subset& x);
int matroid_rank_mask(const Matroid& m, mask_t x);

/// cl_M(x) = {e : rank(x + e) == rank(x)}.
Subset matroid_closure(const Matroid& m, const Subset& x);
mask_t matroid_closure_mask(const Matroid& m, mask_t x);

/// The materialized closure operator of the matroid.
ClosureTable matroid_closure_table(const Matroid& m);

}  // namespace covrough

#endif
