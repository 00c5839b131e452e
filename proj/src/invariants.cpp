#include "fleib/invariants.hpp"

namespace fleib {

namespace openset {

const char* const kNameM = "4*beta3*beta5 - 5*beta4^2";
const char* const kNameN = "beta3^2*beta6 - 3*beta3*beta4*beta5 + 2*beta4^3";
const char* const kNameQ = "beta4*gamma + 2*beta3^2*beta6 - 6*beta3*beta4*beta5 + 4*beta4^3";
const char* const kNameEq7Literal = "4*beta3^2*beta6 - 12*beta3*beta4*beta6 + beta4^3";

QiScalar poly_M(const ParamVector& p) {
    const QiScalar &b3 = p.beta_at(3), &b4 = p.beta_at(4), &b5 = p.beta_at(5);
    return QiScalar(4) * b3 * b5 - QiScalar(5) * b4 * b4;
}

QiScalar poly_N(const ParamVector& p) {
    const QiScalar &b3 = p.beta_at(3), &b4 = p.beta_at(4), &b5 = p.beta_at(5),
                   &b6 = p.beta_at(6);
    return b3 * b3 * b6 - QiScalar(3) * b3 * b4 * b5 + QiScalar(2) * b4.pow(3);
}

QiScalar poly_Q(const ParamVector& p) {
    return p.beta_at(4) * p.gamma + QiScalar(2) * poly_N(p);
}

QiScalar poly_eq7_literal(const ParamVector& p) {
    const QiScalar &b3 = p.beta_at(3), &b4 = p.beta_at(4), &b6 = p.beta_at(6);
    return QiScalar(4) * b3 * b3 * b6 - QiScalar(12) * b3 * b4 * b6 + b4.pow(3);
}

} // namespace openset

OpenSetStatus open_set_check(const ParamVector& p, bool literal) {
    p.validate();
    OpenSetStatus st;
    if (p.n < 5) throw DimensionMismatch("open set defined for n >= 5");
    if (p.beta_at(3).is_zero()) st.vanished.push_back("beta3");
    if (p.n == 5) {
        if (p.gamma.is_zero()) st.vanished.push_back("gamma");
        st.in_open_set = st.vanished.empty();
        return st;
    }
    if (literal) {
        if (openset::poly_eq7_literal(p).is_zero()) st.vanished.push_back(openset::kNameEq7Literal);
        if (openset::poly_M(p).is_zero()) st.vanished.push_back(openset::kNameM);
        st.in_open_set = st.vanished.empty();
        return st;
    }
    if (openset::poly_M(p).is_zero()) st.vanished.push_back(openset::kNameM);
    if (p.n == 6) {
        if (openset::poly_Q(p).is_zero()) st.vanished.push_back(openset::kNameQ);
    } else {
        if (openset::poly_N(p).is_zero()) st.vanished.push_back(openset::kNameN);
    }
    st.in_open_set = st.vanished.empty();
    return st;
}

CanonicalPoint canonical_point(const ParamVector& p) {
    p.validate();
    if (p.n < 5) throw DimensionMismatch("canonical point defined for n >= 5");
    OpenSetStatus st = open_set_check(p);
    if (!st.in_open_set)
        throw OutsideOpenSet("outside open set: vanished " + [&] {
            std::string s;
            for (const auto& v : st.vanished) s += (s.empty() ? "" : ", ") + v;
            return s;
        }(), st.vanished);

    const QiScalar& b3 = p.beta_at(3);
    const QiScalar& b4 = p.beta_at(4);
    if (p.n == 5) {
        // (b3^2/g, b4/(2 b3^2), g/b3^3)
        return {b3 * b3 / p.gamma, b4 / (QiScalar(2) * b3 * b3), p.gamma / b3.pow(3)};
    }
    QiScalar m = openset::poly_M(p);
    QiScalar w = (p.n == 6) ? openset::poly_Q(p) : openset::poly_N(p);
    return {b3 * m / (QiScalar(4) * w), b4 / (QiScalar(2) * b3 * b3),
            QiScalar(4) * w / (b3 * b3 * m)};
}

TransformParams canonical_transform(const ParamVector& p) {
    CanonicalPoint cp = canonical_point(p);
    QiScalar a = cp.x0.inverse();
    return TransformParams(a, cp.y0 * a, cp.u0 * a);
}

InvariantVector invariant_vector(const ParamVector& p) {
    CanonicalPoint cp = canonical_point(p);
    ParamVector normalized = rho_apply_xyu(cp.x0, cp.y0, cp.u0, p);
    InvariantVector out;
    out.n = p.n;
    out.slots = normalized.beta;
    out.slots.push_back(normalized.gamma);
    return out;
}

int closed_form_dim(ClosedForm which) {
    switch (which) {
    case ClosedForm::Dim6Rho3: return 6;
    case ClosedForm::Dim7Rho3:
    case ClosedForm::Dim7Rho4:
    case ClosedForm::Dim7Rho5: return 7;
    case ClosedForm::Dim8Rho5:
    case ClosedForm::Dim8Rho6: return 8;
    }
    return 0;
}

int closed_form_slot(ClosedForm which) {
    switch (which) {
    case ClosedForm::Dim6Rho3: return 5;
    case ClosedForm::Dim7Rho3: return 5;
    case ClosedForm::Dim7Rho4: return 6;
    case ClosedForm::Dim7Rho5: return 7;
    case ClosedForm::Dim8Rho5: return 7;
    case ClosedForm::Dim8Rho6: return 8;
    }
    return 0;
}

QiScalar closed_form_factor(ClosedForm which) {
    switch (which) {
    case ClosedForm::Dim6Rho3: return 1;
    case ClosedForm::Dim7Rho3: return 4;
    case ClosedForm::Dim7Rho4: return 8;
    case ClosedForm::Dim7Rho5: return 4;
    case ClosedForm::Dim8Rho5: return 1;
    case ClosedForm::Dim8Rho6: return 1;
    }
    return 1;
}

const char* closed_form_name(ClosedForm which) {
    switch (which) {
    case ClosedForm::Dim6Rho3: return "dim6_rho3";
    case ClosedForm::Dim7Rho3: return "dim7_rho3";
    case ClosedForm::Dim7Rho4: return "dim7_rho4";
    case ClosedForm::Dim7Rho5: return "dim7_rho5";
    case ClosedForm::Dim8Rho5: return "dim8_rho5";
    case ClosedForm::Dim8Rho6: return "dim8_rho6";
    }
    return "?";
}

QiScalar closed_form_invariant(const ParamVector& p, ClosedForm which) {
    p.validate();
    if (p.dim() != closed_form_dim(which))
        throw DimensionMismatch("closed form applies to dimension " +
                                std::to_string(closed_form_dim(which)));
    auto need_nonzero = [](const QiScalar& v, const char* name) {
        if (v.is_zero())
            throw OutsideOpenSet(std::string("closed-form denominator vanished: ") + name,
                                 {name});
    };
    const QiScalar& b3 = p.beta_at(3);
    const QiScalar& b4 = p.beta_at(4);
    const QiScalar& g = p.gamma;
    switch (which) {
    case ClosedForm::Dim6Rho3: {
        const QiScalar& b5 = p.beta_at(5);
        need_nonzero(g, "gamma");
        QiScalar num = b3 * (QiScalar(4) * b5 * b3 * b3 - QiScalar(5) * b4 * b4 * b3 +
                             QiScalar(2) * b4 * g);
        return num / (QiScalar(4) * g * g);
    }
    case ClosedForm::Dim7Rho3:
    case ClosedForm::Dim7Rho4: {
        QiScalar q = openset::poly_Q(p);
        need_nonzero(q, openset::kNameQ);
        return openset::poly_M(p).pow(3) / (QiScalar(16) * q * q);
    }
    case ClosedForm::Dim7Rho5: {
        QiScalar q = openset::poly_Q(p);
        need_nonzero(q, openset::kNameQ);
        return g * openset::poly_M(p).pow(2) / (QiScalar(4) * q * q);
    }
    case ClosedForm::Dim8Rho5: {
        QiScalar nn = openset::poly_N(p);
        need_nonzero(nn, openset::kNameN);
        const QiScalar &b5 = p.beta_at(5), &b6 = p.beta_at(6), &b7 = p.beta_at(7);
        QiScalar r = QiScalar(4) * b3 * b4 * g + QiScalar(8) * b3.pow(3) * b7 -
                     QiScalar(28) * b3 * b3 * b4 * b6 + QiScalar(28) * b3 * b4 * b4 * b5 -
                     QiScalar(7) * b4.pow(4);
        return openset::poly_M(p).pow(4) * r / (QiScalar(2048) * nn.pow(4));
    }
    case ClosedForm::Dim8Rho6: {
        QiScalar nn = openset::poly_N(p);
        need_nonzero(nn, openset::kNameN);
        return b3 * g * openset::poly_M(p).pow(3) / (QiScalar(64) * nn.pow(3));
    }
    }
    throw Error("unknown closed form");
}

namespace {

CellId cell_dim5(const ParamVector& p) {
    const QiScalar& b3 = p.beta_at(3);
    const QiScalar& b4 = p.beta_at(4);
    const QiScalar& g = p.gamma;
    if (!b3.is_zero()) {
        QiScalar disc = g - QiScalar(2) * b3 * b3;
        if (!disc.is_zero()) return {"U1"};
        return b4.is_zero() ? CellId{"U3"} : CellId{"U2"};
    }
    if (!g.is_zero()) return {"U4"};
    if (!b4.is_zero()) return {"U5"};
    return {"F"};
}

CellId cell_dim6(const ParamVector& p) {
    const QiScalar& b3 = p.beta_at(3);
    const QiScalar& b4 = p.beta_at(4);
    const QiScalar& b5 = p.beta_at(5);
    const QiScalar& g = p.gamma;
    if (!b3.is_zero()) {
        if (!b4.is_zero()) {
            if (!g.is_zero()) return {"U1"};
            // Literal published split: beta3*beta4 vs 4*beta4^2.
            return (b3 * b4 != QiScalar(4) * b4 * b4) ? CellId{"U2"} : CellId{"U3"};
        }
        return g.is_zero() ? CellId{"U5"} : CellId{"U4"};
    }
    if (!b4.is_zero()) {
        if (!g.is_zero()) return {"U6"};
        return b5.is_zero() ? CellId{"U8"} : CellId{"U7"};
    }
    if (!b5.is_zero()) return g.is_zero() ? CellId{"U10"} : CellId{"U9"};
    return g.is_zero() ? CellId{"F"} : CellId{"U11"};
}

} // namespace

CellId cell_membership(const ParamVector& p, bool literal) {
    p.validate();
    if (p.n == 4) return cell_dim5(p);
    if (p.n == 5) return cell_dim6(p);
    if (p.n >= 6) return open_set_check(p, literal).in_open_set ? CellId{"U"} : CellId{"F"};
    throw DimensionMismatch("cell membership defined for n >= 4");
}

ParamVector realize_invariants_dim6(const QiScalar& slot5) {
    // (1, 0, v, 1) normalizes to itself: the closed form evaluates to v.
    return ParamVector(5, {1, 0, slot5}, 1);
}

ParamVector realize_invariants_dim7(const QiScalar& slot5, const QiScalar& slot7) {
    if (slot5.is_zero())
        throw OutsideOpenSet("slot-5 target must be nonzero: it equals M^3/(64 Q^2), and M does "
                             "not vanish on the open set",
                             {openset::kNameM});
    // (1, 0, v, v/2, w) is a fixed point of the normalization.
    return ParamVector(6, {1, 0, slot5, slot5 / QiScalar(2)}, slot7);
}

} // namespace fleib
