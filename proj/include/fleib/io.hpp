#ifndef FLEIB_IO_HPP
#define FLEIB_IO_HPP

#include <string>

#include "json.hpp"

#include "fleib/invariants.hpp"
#include "fleib/multipoly.hpp"
#include "fleib/param.hpp"
#include "fleib/psi.hpp"
#include "fleib/root_ext.hpp"
#include "fleib/structure.hpp"

namespace fleib {

using json = nlohmann::json;

// ParamVector: { "n": int, "beta": [scalar...], "gamma": scalar }
json param_to_json(const ParamVector& p);
ParamVector param_from_json(const json& j);

// StructureTable:
// { "dim": int, "products": [ {"left": i, "right": j, "result": {"k": scalar}} ] }
json table_to_json(const StructureTable& t);
StructureTable table_from_json(const json& j);

// PsiSystem: { "n": int, "psi": { "3": [ {"coeff": s, "y": e, "z": {"3": e}} ] } }
json psi_to_json(const PsiSystem& sys);
PsiSystem psi_from_json(const json& j);

// Polynomial in the psi variable convention (y, z3, z4, ...), printed in
// the stored term order: "z5 - 5*y*z3*z4 + 5*y^2*z3^3".
std::string poly_to_text(const MultiPoly& p);
std::string poly_to_latex(const MultiPoly& p);

// Human-readable multiplication table, optionally with 1-based labels for
// comparison against the published tables.
std::string table_to_text(const StructureTable& t, bool one_based = false);

// RootExt as a coefficient array [c0, c1, ...] (basis 1, w, w^2, ...).
json root_ext_to_json(const RootExt& v);
RootExt root_ext_from_json(const json& j, int degree, const QiScalar& root_of);

// Invariant report for the CLI: cell, open-set status, normalized slots,
// closed forms where the dimension has published ones.
json invariant_report(const ParamVector& p, bool literal = false);

} // namespace fleib

#endif
