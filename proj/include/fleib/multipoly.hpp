#ifndef FLEIB_MULTIPOLY_HPP
#define FLEIB_MULTIPOLY_HPP

#include <map>
#include <numeric>
#include <vector>

#include "fleib/error.hpp"
#include "fleib/qi.hpp"

namespace fleib {

using Exponents = std::vector<int>;

// Term order used for storage and printing: ascending total degree,
// ties broken by descending lexicographic exponent comparison. This is the
// order the low-dimensional systems are conventionally written in
// (z5 - 5*y*z3*z4 + 5*y^2*z3^3).
struct GradedTermLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a > b; // descending lex within a degree block
    }
};

// Sparse multivariate polynomial over QiScalar. Variable 0 is y; variable
// j >= 1 is z_{j+2}. No zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, QiScalar, GradedTermLess>;

    explicit MultiPoly(int var_count = 0) : var_count_(var_count) {}

    static MultiPoly constant(int var_count, const QiScalar& c);
    static MultiPoly variable(int var_count, int index, int exponent = 1);

    int var_count() const { return var_count_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;
    // Largest exponent of one variable across all terms.
    int degree_in(int index) const;

    // Adds c * x^exps, dropping the term if the sum cancels.
    void add_term(const Exponents& exps, const QiScalar& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const QiScalar& c) const;
    MultiPoly pow(int k) const;

    bool operator==(const MultiPoly& o) const {
        return var_count_ == o.var_count_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact evaluation at a full assignment (length must equal var_count).
    QiScalar eval(const std::vector<QiScalar>& assignment) const;

    // Evaluation into any commutative ring R. `embed` lifts a QiScalar
    // coefficient into R; `one` is the ring unit. Used to run the base
    // change over root extensions without duplicating the formulas.
    template <typename R, typename Embed>
    R eval_in(const std::vector<R>& assignment, const R& one, Embed embed) const {
        if (static_cast<int>(assignment.size()) != var_count_)
            throw DimensionMismatch("eval: assignment length != var_count");
        std::vector<std::vector<R>> powers(var_count_);
        for (int v = 0; v < var_count_; ++v) powers[v].push_back(one);
        R sum = embed(QiScalar(0));
        for (const auto& [exps, coeff] : terms_) {
            R term = embed(coeff);
            for (int v = 0; v < var_count_; ++v) {
                int e = exps[v];
                if (e == 0) continue;
                auto& pw = powers[v];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * assignment[v]);
                term = term * pw[e];
            }
            sum = sum + term;
        }
        return sum;
    }

private:
    void check_same_shape(const MultiPoly& o) const {
        if (var_count_ != o.var_count_)
            throw DimensionMismatch("polynomial var_count mismatch");
    }

    int var_count_;
    TermMap terms_;
};

} // namespace fleib

#endif
