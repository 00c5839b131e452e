#include "fleib/io.hpp"

#include <algorithm>

namespace fleib {

namespace {

QiScalar scalar_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("scalar must be a string");
    return QiScalar::parse(j.get<std::string>());
}

int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

json param_to_json(const ParamVector& p) {
    json beta = json::array();
    for (const auto& b : p.beta) beta.push_back(b.str());
    return json{{"n", p.n}, {"beta", beta}, {"gamma", p.gamma.str()}};
}

ParamVector param_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("beta") || !j.contains("gamma"))
        throw ParseError("parameter vector needs fields n, beta, gamma");
    int n = int_from_json(j.at("n"), "n");
    if (!j.at("beta").is_array()) throw ParseError("beta must be an array of scalars");
    std::vector<QiScalar> beta;
    for (const auto& b : j.at("beta")) beta.push_back(scalar_from_json(b));
    return ParamVector(n, std::move(beta), scalar_from_json(j.at("gamma")));
}

json table_to_json(const StructureTable& t) {
    json products = json::array();
    for (const auto& [ij, vec] : t.products()) {
        json result = json::object();
        for (const auto& [k, c] : vec) result[std::to_string(k)] = c.str();
        products.push_back(json{{"left", ij.first}, {"right", ij.second}, {"result", result}});
    }
    return json{{"dim", t.dim()}, {"products", products}};
}

StructureTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("products"))
        throw ParseError("table needs fields dim, products");
    StructureTable t(int_from_json(j.at("dim"), "dim"));
    if (!j.at("products").is_array()) throw ParseError("products must be an array");
    for (const auto& entry : j.at("products")) {
        int left = int_from_json(entry.at("left"), "left");
        int right = int_from_json(entry.at("right"), "right");
        BasisVector v;
        for (const auto& [key, val] : entry.at("result").items()) {
            size_t used = 0;
            int k = std::stoi(key, &used);
            if (used != key.size()) throw ParseError("bad basis index '" + key + "'");
            v[k] = scalar_from_json(val);
        }
        t.set_product(left, right, std::move(v));
    }
    return t;
}

json psi_to_json(const PsiSystem& sys) {
    json polys = json::object();
    for (int t = 3; t <= sys.n + 1; ++t) {
        json terms = json::array();
        for (const auto& [e, c] : sys.psi(t).terms()) {
            json z = json::object();
            for (int s = 3; s <= sys.n + 1; ++s)
                if (e[PsiSystem::z_index(s)] != 0) z[std::to_string(s)] = e[PsiSystem::z_index(s)];
            terms.push_back(json{{"coeff", c.str()}, {"y", e[0]}, {"z", z}});
        }
        polys[std::to_string(t)] = terms;
    }
    return json{{"n", sys.n}, {"psi", polys}};
}

PsiSystem psi_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("psi"))
        throw ParseError("psi system needs fields n, psi");
    PsiSystem sys;
    sys.n = int_from_json(j.at("n"), "n");
    if (sys.n < 3) throw ParseError("psi system needs n >= 3");
    for (int t = 3; t <= sys.n + 1; ++t) {
        const json& terms = j.at("psi").at(std::to_string(t));
        MultiPoly p(sys.n);
        for (const auto& term : terms) {
            Exponents e(sys.n, 0);
            e[0] = int_from_json(term.at("y"), "y exponent");
            for (const auto& [key, val] : term.at("z").items())
                e[PsiSystem::z_index(std::stoi(key))] = int_from_json(val, "z exponent");
            p.add_term(e, scalar_from_json(term.at("coeff")));
        }
        sys.polys.push_back(std::move(p));
    }
    return sys;
}

namespace {

std::string monomial_text(const Exponents& e, bool latex) {
    std::string out;
    auto piece = [&](const std::string& var, int exp) {
        if (exp == 0) return;
        if (!out.empty() && !latex) out += "*";
        out += var;
        if (exp != 1) {
            if (latex && exp >= 10)
                out += "^{" + std::to_string(exp) + "}";
            else
                out += "^" + std::to_string(exp);
        }
    };
    piece("y", e[0]);
    for (size_t v = 1; v < e.size(); ++v) {
        int s = static_cast<int>(v) + 2;
        std::string name;
        if (latex)
            name = s < 10 ? "z_" + std::to_string(s) : "z_{" + std::to_string(s) + "}";
        else
            name = "z" + std::to_string(s);
        piece(name, e[v]);
    }
    return out;
}

std::string poly_text_impl(const MultiPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        bool negative = c.is_real() && c.re() < 0;
        QiScalar mag = negative ? -c : c;
        std::string mon = monomial_text(e, latex);
        std::string coeff;
        if (!c.is_real()) {
            negative = false;
            coeff = "(" + c.str() + ")";
        } else if (!mag.is_one() || mon.empty()) {
            coeff = mag.str();
        }
        std::string term = coeff;
        if (!mon.empty()) {
            if (!coeff.empty()) term += latex ? "" : "*";
            term += mon;
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

} // namespace

std::string poly_to_text(const MultiPoly& p) { return poly_text_impl(p, false); }
std::string poly_to_latex(const MultiPoly& p) { return poly_text_impl(p, true); }

std::string table_to_text(const StructureTable& t, bool one_based) {
    const int shift = one_based ? 1 : 0;
    std::string out;
    for (const auto& [ij, vec] : t.products()) {
        std::string rhs;
        for (const auto& [k, c] : vec) {
            if (!rhs.empty()) rhs += " + ";
            if (!c.is_one()) rhs += (c.is_real() ? c.str() : "(" + c.str() + ")") + "*";
            rhs += "e" + std::to_string(k + shift);
        }
        out += "[e" + std::to_string(ij.first + shift) + ",e" + std::to_string(ij.second + shift) +
               "] = " + rhs + "\n";
    }
    return out;
}

json root_ext_to_json(const RootExt& v) {
    json coef = json::array();
    for (const auto& c : v.coefficients()) coef.push_back(c.str());
    return coef;
}

RootExt root_ext_from_json(const json& j, int degree, const QiScalar& root_of) {
    if (!j.is_array()) throw ParseError("root extension element must be an array");
    std::vector<QiScalar> coef;
    for (const auto& c : j) coef.push_back(QiScalar::parse(c.get<std::string>()));
    coef.resize(degree, QiScalar(0));
    return RootExt(degree, root_of, std::move(coef));
}

json invariant_report(const ParamVector& p, bool literal) {
    p.validate();
    json out;
    out["dim"] = p.dim();
    out["cell"] = cell_membership(p, literal).name;

    if (p.n == 4) {
        // Dimension 5: the single modulus gamma/beta3^2 exists on
        // beta3 != 0, gamma - 2 beta3^2 != 0 (the generic cell).
        std::vector<std::string> vanished;
        const QiScalar& b3 = p.beta_at(3);
        if (b3.is_zero()) vanished.push_back("beta3");
        QiScalar disc = p.gamma - QiScalar(2) * b3 * b3;
        if (disc.is_zero()) vanished.push_back("gamma - 2*beta3^2");
        out["open_set"] = vanished.empty();
        out["vanished"] = vanished;
        if (vanished.empty()) {
            json inv = json::object();
            inv["3"] = "1";
            inv["4"] = "0";
            inv["5"] = (p.gamma / (b3 * b3)).str();
            out["invariants"] = inv;
        }
        return out;
    }

    OpenSetStatus st = open_set_check(p, literal);
    out["open_set"] = st.in_open_set;
    out["vanished"] = st.vanished;
    if (st.in_open_set && !literal) {
        InvariantVector iv = invariant_vector(p);
        json inv = json::object();
        for (int i = 3; i <= p.n + 1; ++i) inv[std::to_string(i)] = iv.slot(i).str();
        out["invariants"] = inv;
    }
    if (p.dim() >= 6 && p.dim() <= 8) {
        json cf = json::object();
        for (ClosedForm which :
             {ClosedForm::Dim6Rho3, ClosedForm::Dim7Rho3, ClosedForm::Dim7Rho4,
              ClosedForm::Dim7Rho5, ClosedForm::Dim8Rho5, ClosedForm::Dim8Rho6}) {
            if (closed_form_dim(which) != p.dim()) continue;
            try {
                cf[closed_form_name(which)] = closed_form_invariant(p, which).str();
            } catch (const OutsideOpenSet&) {
                // denominator vanished; omit this form
            }
        }
        out["closed_forms"] = cf;
    }
    return out;
}

} // namespace fleib
