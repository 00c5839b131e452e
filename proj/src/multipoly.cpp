#include "fleib/multipoly.hpp"

#include <algorithm>

namespace fleib {

MultiPoly MultiPoly::constant(int var_count, const QiScalar& c) {
    MultiPoly p(var_count);
    p.add_term(Exponents(var_count, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int var_count, int index, int exponent) {
    if (index < 0 || index >= var_count)
        throw DimensionMismatch("variable index out of range");
    MultiPoly p(var_count);
    Exponents e(var_count, 0);
    e[index] = exponent;
    p.add_term(e, 1);
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [exps, c] : terms_)
        d = std::max(d, std::accumulate(exps.begin(), exps.end(), 0));
    return d;
}

int MultiPoly::degree_in(int index) const {
    int d = 0;
    for (const auto& [exps, c] : terms_) d = std::max(d, exps[index]);
    return d;
}

void MultiPoly::add_term(const Exponents& exps, const QiScalar& c) {
    if (static_cast<int>(exps.size()) != var_count_)
        throw DimensionMismatch("term exponent length != var_count");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_shape(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_shape(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(var_count_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::scaled(const QiScalar& c) const {
    MultiPoly out(var_count_);
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_shape(o);
    MultiPoly out(var_count_);
    Exponents e(var_count_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int v = 0; v < var_count_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw ArithmeticError("negative polynomial power");
    MultiPoly acc = constant(var_count_, 1);
    for (int j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

QiScalar MultiPoly::eval(const std::vector<QiScalar>& assignment) const {
    return eval_in<QiScalar>(assignment, QiScalar(1), [](const QiScalar& c) { return c; });
}

} // namespace fleib
