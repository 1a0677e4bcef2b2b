#ifndef DVKIT_DVARIETY_HPP
#define DVKIT_DVARIETY_HPP

#include "dvkit/groebner.hpp"
#include "dvkit/ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dvkit {

struct EmptyVarietyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VarietyClaims {
    bool radical = false;
    bool prime = false;
};

/// An affine variety presented by generators of its defining ideal. The empty
/// variety (1 in the ideal) is rejected at construction. The zero ideal (all
/// of affine space) is the empty generator list.
class Variety {
  public:
    Variety(ContextPtr ctx, std::vector<Polynomial> gens, VarietyClaims claims = {});

    const ContextPtr &context() const { return ctx_; }
    const std::vector<Polynomial> &gens() const { return gens_; }
    const VarietyClaims &claims() const { return claims_; }
    /// Cached grevlex basis of the generator ideal.
    const GroebnerBasis &basis() const { return *gb_; }

  private:
    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    VarietyClaims claims_;
    std::shared_ptr<const GroebnerBasis> gb_;
};

/// A candidate section of the prolongation: one polynomial per variable.
struct Section {
    std::vector<Polynomial> components;
};

/// Variety with doubled variables: the carrier of tangent bundles and
/// prolongations. dual_names[i] is the new variable paired with vars[i].
struct DoubledVariety {
    ContextPtr context;
    std::vector<Polynomial> gens;
    std::vector<std::string> dual_names;
};

class DVariety;
struct SectionValidation;

/// A validated pair (V, s): the section maps V into its prolongation, so it
/// induces a derivation on the coordinate ring.
class DVariety {
  public:
    const Variety &variety() const { return variety_; }
    const Section &section() const { return section_; }
    const DerivationSpec &spec() const { return spec_; }
    const ContextPtr &context() const { return variety_.context(); }

  private:
    friend SectionValidation validate_section(const Variety &, const Section &);
    DVariety(Variety v, Section s, DerivationSpec spec)
        : variety_(std::move(v)), section_(std::move(s)), spec_(std::move(spec)) {}

    Variety variety_;
    Section section_;
    DerivationSpec spec_;
};

struct SectionResidue {
    Polynomial generator; // the offending ideal generator
    Polynomial residue;   // nonzero normal form of its delta
};

struct SectionValidation {
    bool valid = false;
    std::vector<SectionResidue> failures;
    std::optional<DVariety> dvariety; // engaged iff valid
};

/// Doubled variety cut out by f(x) = 0 and sum (df/dx_i) y_i = 0.
DoubledVariety tangent_bundle(const Variety &v);

/// The twisted tangent bundle: f(x) = 0 and f^delta(x) + sum (df/dx_i) y_i = 0.
/// Coincides with the tangent bundle when delta vanishes on the base field.
DoubledVariety prolongation(const Variety &v);

/// Checks delta_s f in rad I(V) for every generator f; on success returns the
/// validated D-variety, otherwise the offending generators with residues.
SectionValidation validate_section(const Variety &v, const Section &s);

/// Canonical representative of delta_s(f + I(V)).
Polynomial induced_derivation(const DVariety &d, const Polynomial &f);

struct DSubvarietyReport {
    enum class Status { Ok, Invalid, NotSubvariety };
    Status status = Status::Ok;
    struct Entry {
        Polynomial generator;
        Polynomial residue; // normal form of delta(generator) mod W + V
        bool closed = false;
    };
    std::vector<Entry> entries;
    bool ok() const { return status == Status::Ok; }
};

/// Is W = V(w_gens) a D-subvariety of (V, s)? Requires W inside V.
DSubvarietyReport is_d_subvariety(const DVariety &d, const std::vector<Polynomial> &w_gens);

struct DPointReport {
    enum class Status { Ok, Invalid, NotOnVariety };
    Status status = Status::Ok;
    struct Mismatch {
        std::string var;
        FieldElement section_value; // g_i(a)
        FieldElement point_delta;   // delta(a_i)
    };
    std::vector<Mismatch> mismatches;
    bool ok() const { return status == Status::Ok; }
};

/// Is the point an equilibrium in the twisted sense s(a) = (a, delta a)?
DPointReport is_d_point(const DVariety &d, const std::vector<FieldElement> &point);

/// Product D-variety; the second factor's variables get a fixed suffix.
DVariety product(const DVariety &a, const DVariety &b);

struct ComponentsReport {
    enum class Status { Ok, Mismatch };
    Status status = Status::Ok;
    std::string mismatch_reason;
    std::vector<DSubvarietyReport> verdicts; // one per component when Ok
    bool all_closed() const;
};

/// Per-component delta-closure check for a user-supplied decomposition of
/// V's ideal. Verifies radical agreement of the intersection first.
ComponentsReport components_delta_check(const DVariety &d,
                                        const std::vector<std::vector<Polynomial>> &components);

/// Dimension of V, which is the eventual dimension of the generic type.
int generic_type_dimension(const DVariety &d);

} // namespace dvkit

#endif
