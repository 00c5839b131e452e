#ifndef FLEIB_INVARIANTS_HPP
#define FLEIB_INVARIANTS_HPP

#include <string>
#include <vector>

#include "fleib/param.hpp"
#include "fleib/qi.hpp"
#include "fleib/transform.hpp"

namespace fleib {

// Arguments fed to the base-change operator to normalize an algebra.
struct CanonicalPoint {
    QiScalar x0, y0, u0;
};

// Normalized parameter vector: slot(i) for i = 3..n+1, where slots 3..n
// are the normalized beta components and slot n+1 is the normalized gamma.
// Slots 3 and 4 are pinned to 1 and 0 by the normalization; the others are
// orbit invariants. The published comparison range is 3..n-1, but every
// slot is constant on orbits and all must agree for isomorphism.
struct InvariantVector {
    int n = 0;
    std::vector<QiScalar> slots; // slots[i-3] = slot i, i = 3..n+1

    const QiScalar& slot(int i) const { return slots.at(i - 3); }
    bool operator==(const InvariantVector& o) const { return n == o.n && slots == o.slots; }
    bool operator!=(const InvariantVector& o) const { return !(*this == o); }
};

// Named polynomials used by the open-set conditions and error reports.
namespace openset {
QiScalar poly_M(const ParamVector& p);          // 4 b3 b5 - 5 b4^2
QiScalar poly_N(const ParamVector& p);          // b3^2 b6 - 3 b3 b4 b5 + 2 b4^3
QiScalar poly_Q(const ParamVector& p);          // b4 g + 2 b3^2 b6 - 6 b3 b4 b5 + 4 b4^3
QiScalar poly_eq7_literal(const ParamVector& p); // 4 b3^2 b6 - 12 b3 b4 b6 + b4^3
extern const char* const kNameM;
extern const char* const kNameN;
extern const char* const kNameQ;
extern const char* const kNameEq7Literal;
} // namespace openset

struct OpenSetStatus {
    bool in_open_set = false;
    std::vector<std::string> vanished; // names of the polynomials that vanished
};

// Membership in the generic open set U. Defined for n >= 5: the dim-6
// variant needs beta3 and gamma nonzero; n = 6 uses the gamma-coupled
// discriminant Q; n >= 7 uses N. With `literal` (n >= 6 only) the verbatim
// printed product polynomial is tested instead, with no claim of
// correctness.
OpenSetStatus open_set_check(const ParamVector& p, bool literal = false);

// Normalization point. Throws OutsideOpenSet naming the vanished
// polynomial(s) when undefined.
//   n >= 7: ( b3 M / (4N), b4 / (2 b3^2), 4N / (b3^2 M) )
//   n == 6: same shape with Q in place of N
//   n == 5: ( b3^2 / g, b4 / (2 b3^2), g / b3^3 )
CanonicalPoint canonical_point(const ParamVector& p);

// The canonical point as group parameters (A, B, D).
TransformParams canonical_transform(const ParamVector& p);

// Full normalized vector rho(x0, y0, u0; p); constant on orbits.
InvariantVector invariant_vector(const ParamVector& p);

// The closed forms printed for dimensions 6, 7 and 8. Each equals a fixed
// slot of invariant_vector up to the documented constant factor.
enum class ClosedForm {
    Dim6Rho3,  // b3 (4 b5 b3^2 - 5 b4^2 b3 + 2 b4 g) / (4 g^2)        == slot 5
    Dim7Rho3,  // M^3 / (16 Q^2)                                        == 4 * slot 5
    Dim7Rho4,  // same printed value as Dim7Rho3                        == 8 * slot 6
    Dim7Rho5,  // g M^2 / (4 Q^2)                                       == 4 * slot 7
    Dim8Rho5,  // M^4 R / (2048 N^4), R = 4 b3 b4 g + 8 b3^3 b7 - ...   == slot 7
    Dim8Rho6,  // b3 g M^3 / (64 N^3)                                   == slot 8
};

// Dimension the form applies to (6, 7 or 8), i.e. n+1.
int closed_form_dim(ClosedForm which);
// Slot of invariant_vector the form corresponds to.
int closed_form_slot(ClosedForm which);
// Constant c with printed == c * slot value.
QiScalar closed_form_factor(ClosedForm which);
const char* closed_form_name(ClosedForm which);

QiScalar closed_form_invariant(const ParamVector& p, ClosedForm which);

// Partition cell of the parameter space: the fine published partitions for
// dimensions 5 and 6, the coarse U/F split for n >= 6.
struct CellId {
    std::string name; // "U1".."U11", "F" for dims 5-6; "U"/"F" for n >= 6
    bool operator==(const CellId& o) const { return name == o.name; }
};

CellId cell_membership(const ParamVector& p, bool literal = false);

// Constructive inverses of the invariant map on the open set (the
// surjectivity statement), for the dimensions with printed closed forms.
// Dimension 6: any target value for slot 5. Dimension 7: slot 5 must be
// nonzero (it never vanishes on U) and slot 6 comes pinned at half of
// slot 5 on the image; slot 7 is free.
ParamVector realize_invariants_dim6(const QiScalar& slot5);
ParamVector realize_invariants_dim7(const QiScalar& slot5, const QiScalar& slot7);

} // namespace fleib

#endif
