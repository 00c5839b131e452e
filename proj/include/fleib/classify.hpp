#ifndef FLEIB_CLASSIFY_HPP
#define FLEIB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fleib/invariants.hpp"
#include "fleib/param.hpp"
#include "fleib/root_ext.hpp"
#include "fleib/transform.hpp"

namespace fleib {

// Machine-checkable isomorphism certificate. Concrete witnesses have
// root_degree 1 and live in Q(i). Root-extended witnesses express A, B, D
// in Q(i)[w]/(w^k - c); verification is carried out modulo w^k - c, so a
// passing check holds for every complex root w, and existence over C
// follows.
struct Witness {
    int root_degree = 1;
    QiScalar root_of = 1; // c in w^k = c; unused when root_degree == 1
    RootExt A, B, D;

    Witness();
    static Witness concrete(const TransformParams& tp);
    static Witness identity();

    bool is_concrete() const { return root_degree == 1; }
    // Requires is_concrete().
    TransformParams concrete_params() const;
};

// Exact check that the witness maps `source` to `target`.
bool witness_verifies(const Witness& w, const ParamVector& source, const ParamVector& target);

// Log of one complete case analysis: forced assignments, and when the
// branch closes, a final line starting with "contradiction:".
struct UnsolvableTrace {
    std::vector<std::string> steps;
};

struct SearchResult {
    std::optional<Witness> witness; // engaged iff the algebras are isomorphic
    UnsolvableTrace trace;
};

// Complete, certificate-producing isomorphism search for n in {4, 5}
// (dimensions 5 and 6). Branch analysis is exhaustive over the vanishing
// pattern of (beta3, gamma, beta4, beta5), so an unsolvable result proves
// non-isomorphism over C.
SearchResult witness_search(const ParamVector& p, const ParamVector& q);

// A published representative family; `lambda_index` marks the parametric
// slot inside (beta_3..beta_n, gamma), or -1 for a fixed family.
struct Family {
    std::string name;
    int n = 4;
    std::vector<QiScalar> values; // beta_3..beta_n then gamma
    int lambda_index = -1;

    bool parametric() const { return lambda_index >= 0; }
    ParamVector params(const QiScalar& lambda = QiScalar(0)) const;
};

// The catalogs for dim 5 (five families) and dim 6 (twelve families).
const std::vector<Family>& representatives(int dim);
const Family& family_by_name(int dim, const std::string& name);

// Published cell -> representative assignment; lambda computed from the
// cell's invariant for the parametric targets.
struct PublishedTarget {
    std::string family;
    std::optional<QiScalar> lambda;
};
PublishedTarget published_target(const CellId& cell, const ParamVector& p);

struct Discrepancy {
    std::string claimed_family;
    std::optional<QiScalar> claimed_lambda;
    UnsolvableTrace trace; // why the published mapping is unreachable
};

// Canonical form of p (dims 5 and 6): cell, representative, verified
// witness. When the published cell assignment is unreachable, `family`
// etc. describe the representative actually reached and `discrepancy`
// documents the failed claim.
struct CanonicalForm {
    CellId cell;
    std::string family;
    std::optional<QiScalar> lambda;
    ParamVector representative;
    Witness witness;
    std::optional<Discrepancy> discrepancy;
};

CanonicalForm canonical_form(const ParamVector& p);

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<Witness> witness;        // for yes, re-verified
    std::vector<std::string> certificate;  // for no: trace or value separation
};

// Dims 5-6: decided by witness_search. n >= 6: decided on the open set U
// by exact equality of invariant vectors, with a witness synthesized from
// the two canonical transforms; throws Undecided outside U.
IsoVerdict iso_decide(const ParamVector& p, const ParamVector& q);

// Classification audit for dim 5 or 6: samples every cell, verifies every
// published mapping, runs the pairwise representative matrix (parametric
// families probed and matched symbolically via the affine invariant), and
// adjudicates the published claims. Deterministic for a fixed seed.
nlohmann::json verify_classification(int dim, int samples_per_cell, unsigned long seed);

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const UnsolvableTrace& t);
nlohmann::json canonical_form_to_json(const CanonicalForm& cf);
nlohmann::json iso_verdict_to_json(const IsoVerdict& v);

} // namespace fleib

#endif
