#ifndef FLEIB_PARAM_HPP
#define FLEIB_PARAM_HPP

#include <vector>

#include "fleib/error.hpp"
#include "fleib/qi.hpp"

namespace fleib {

// Parameters (n; beta_3,...,beta_n, gamma) of the class-II algebra L(beta)
// of dimension n+1.
struct ParamVector {
    int n = 3;
    std::vector<QiScalar> beta; // beta[t-3] = beta_t, t = 3..n
    QiScalar gamma;

    ParamVector() : beta(1, QiScalar(0)), gamma(0) {}
    ParamVector(int n_, std::vector<QiScalar> beta_, QiScalar gamma_)
        : n(n_), beta(std::move(beta_)), gamma(std::move(gamma_)) {
        validate();
    }

    void validate() const {
        if (n < 3) throw DimensionMismatch("ParamVector requires n >= 3");
        if (static_cast<int>(beta.size()) != n - 2)
            throw DimensionMismatch("ParamVector needs exactly n-2 beta entries");
    }

    int dim() const { return n + 1; }
    const QiScalar& beta_at(int t) const { return beta.at(t - 3); } // t in 3..n

    bool operator==(const ParamVector& o) const {
        return n == o.n && beta == o.beta && gamma == o.gamma;
    }
    bool operator!=(const ParamVector& o) const { return !(*this == o); }
};

} // namespace fleib

#endif
