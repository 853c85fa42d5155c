#ifndef COVROUGH_CLOSURE_HPP
#define COVROUGH_CLOSURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "covrough/covering.hpp"
#include "covrough/set_family.hpp"

namespace covrough {

/// The materialized form of an operator 2^U -> 2^U: a total map from every
/// subset mask to its image mask.
class ClosureTable {
public:
    enum class Provenance { induced_from_fixed_points, sh_operator, matroid_closure };

    ClosureTable(Universe u, std::vector<mask_t> image, Provenance provenance,
                 bool covering_not_unary = false);

    const Universe& universe() const { return u_; }
    Provenance provenance() const { return provenance_; }

    /// Set for tables induced from the fixed-point family of a covering that
    /// is not unary; such a table is total but need not be a closure operator.
    bool covering_not_unary() const { return covering_not_unary_; }

    mask_t map(mask_t x) const { return image_[x]; }
    Subset apply(const Subset& x) const;

    bool operator==(const ClosureTable& o) const { return u_ == o.u_ && image_ == o.image_; }

private:
    Universe u_;
    std::vector<mask_t> image_;
    Provenance provenance_;
    bool covering_not_unary_;
};

/// S = {X : SL(X) = X}. Always contains the empty set and U.
SetFamily fixed_point_family(const Covering& c);

/// True iff U is a member and the family is closed under pairwise
/// intersection.
bool is_closure_system(const SetFamily& f);

/// cl_F(x) = intersection of all members of f containing x. Requires f to
/// be a closure system.
Subset closure_from_system(const SetFamily& f, const Subset& x);

/// The table X -> intersection of {S in fixed_point_family(c) : X subseteq S}.
/// Total for every covering; flagged covering_not_unary when the fixed-point
/// family is not a closure system.
ClosureTable induced_closure(const Covering& c);

/// The table X -> SH(X).
ClosureTable sh_as_closure_table(const Covering& c);

/// Witness of a closure-axiom violation. Which fields are meaningful depends
/// on the axiom: CL1/CL3 use set_x; CL2 uses set_x, set_y; CL4 uses set_x,
/// elem_x, elem_y.
struct ClosureAxiomWitness {
    mask_t set_x = 0;
    mask_t set_y = 0;
    int elem_x = -1;
    int elem_y = -1;
};

struct AxiomEntry {
    bool pass = true;
    std::optional<ClosureAxiomWitness> witness;
};

/// Status of the matroid closure axioms CL1 (extensive), CL2 (monotone),
/// CL3 (idempotent), CL4 (exchange), each checked exhaustively, with the
/// first witness recorded on failure.
struct AxiomReport {
    AxiomEntry cl1, cl2, cl3, cl4;
    bool all_pass() const { return cl1.pass && cl2.pass && cl3.pass && cl4.pass; }
    std::string describe(const Universe& u) const;
};

AxiomReport check_closure_axioms(const ClosureTable& t);

}  // namespace covrough

#endif
