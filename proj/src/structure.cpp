#include "fleib/structure.hpp"

#include <algorithm>

namespace fleib {

namespace {

void add_scaled(BasisVector& acc, const BasisVector& v, const QiScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, q] : v) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            QiScalar val = q * c;
            if (!val.is_zero()) acc.emplace(k, std::move(val));
            continue;
        }
        it->second += q * c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

} // namespace

void StructureTable::set_product(int i, int j, BasisVector v) {
    check_index(i);
    check_index(j);
    for (auto it = v.begin(); it != v.end();) {
        check_index(it->first);
        if (it->second.is_zero())
            it = v.erase(it);
        else
            ++it;
    }
    if (v.empty())
        products_.erase({i, j});
    else
        products_[{i, j}] = std::move(v);
}

void StructureTable::add_entry(int i, int j, int k, const QiScalar& c) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (c.is_zero()) return;
    BasisVector& v = products_[{i, j}];
    v[k] += c;
    if (v[k].is_zero()) v.erase(k);
    if (v.empty()) products_.erase({i, j});
}

BasisVector StructureTable::bracket_basis(int i, int j) const {
    check_index(i);
    check_index(j);
    auto it = products_.find({i, j});
    return it == products_.end() ? BasisVector{} : it->second;
}

BasisVector StructureTable::bracket(const BasisVector& x, const BasisVector& y) const {
    BasisVector out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) add_scaled(out, bracket_basis(i, j), ci * cj);
    return out;
}

StructureTable build_second_class(const ParamVector& p) {
    p.validate();
    const int n = p.n;
    StructureTable t(n + 1);
    t.add_entry(0, 0, 2, 1);
    for (int i = 2; i <= n - 1; ++i) t.add_entry(i, 0, i + 1, 1);
    for (int k = 3; k <= n; ++k) t.add_entry(0, 1, k, p.beta_at(k));
    t.add_entry(1, 1, n, p.gamma);
    for (int j = 2; j <= n - 2; ++j)
        for (int k = 3; k <= n + 1 - j; ++k) t.add_entry(j, 1, j + k - 1, p.beta_at(k));
    return t;
}

std::vector<LeibnizViolation> leibniz_check(const StructureTable& t) {
    std::vector<LeibnizViolation> out;
    const int d = t.dim();
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            for (int z = 0; z < d; ++z) {
                // [x,[y,z]] - [[x,y],z] + [[x,z],y]
                BasisVector defect = t.bracket({{x, 1}}, t.bracket_basis(y, z));
                add_scaled(defect, t.bracket(t.bracket_basis(x, y), {{z, 1}}), -1);
                add_scaled(defect, t.bracket(t.bracket_basis(x, z), {{y, 1}}), 1);
                if (!defect.empty()) out.push_back({x, y, z, std::move(defect)});
            }
        }
    }
    return out;
}

namespace {

// Row-reduced spanning set over Q(i); supports rank queries and membership
// growth without ever leaving exact arithmetic.
class RowSpace {
public:
    explicit RowSpace(int width) : width_(width) {}

    bool insert(std::vector<QiScalar> v) {
        for (const auto& [piv, row] : rows_) {
            if (v[piv].is_zero()) continue;
            QiScalar f = v[piv];
            for (int c = 0; c < width_; ++c) v[c] -= f * row[c];
        }
        int piv = -1;
        for (int c = 0; c < width_; ++c)
            if (!v[c].is_zero()) {
                piv = c;
                break;
            }
        if (piv < 0) return false;
        QiScalar inv = v[piv].inverse();
        for (int c = 0; c < width_; ++c) v[c] *= inv;
        rows_.emplace(piv, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int width_;
    std::map<int, std::vector<QiScalar>> rows_; // pivot column -> row
};

std::vector<QiScalar> densify(const BasisVector& v, int dim) {
    std::vector<QiScalar> out(dim, QiScalar(0));
    for (const auto& [k, c] : v) out[k] = c;
    return out;
}

} // namespace

LowerCentralSeries lower_central_dims(const StructureTable& t) {
    const int d = t.dim();
    LowerCentralSeries out;
    out.dims.push_back(d);

    // Current term as a list of spanning sparse vectors; starts at L^1 = L.
    std::vector<BasisVector> current;
    for (int i = 0; i < d; ++i) current.push_back({{i, 1}});

    int prev = d;
    while (true) {
        RowSpace space(d);
        std::vector<BasisVector> next;
        for (const auto& v : current) {
            for (int j = 0; j < d; ++j) {
                BasisVector w = t.bracket(v, {{j, 1}});
                if (w.empty()) continue;
                if (space.insert(densify(w, d))) next.push_back(std::move(w));
            }
        }
        int dim = space.rank();
        out.dims.push_back(dim);
        if (dim == 0) {
            out.nilpotent = true;
            return out;
        }
        if (dim >= prev) return out; // stabilized: not nilpotent
        prev = dim;
        current = std::move(next);
    }
}

bool is_filiform(const StructureTable& t) {
    const int d = t.dim();
    LowerCentralSeries s = lower_central_dims(t);
    if (!s.nilpotent) return false;
    // Required profile: d, d-2, d-3, ..., 1, 0.
    if (static_cast<int>(s.dims.size()) != d) return false;
    for (int i = 2; i <= d; ++i)
        if (s.dims[i - 1] != d - i) return false;
    return true;
}

bool is_lie(const StructureTable& t) {
    const int d = t.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            BasisVector a = t.bracket_basis(i, j);
            add_scaled(a, t.bracket_basis(j, i), 1);
            if (!a.empty()) return false;
        }
    }
    return true;
}

} // namespace fleib
