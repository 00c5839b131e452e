#ifndef FLEIB_STRUCTURE_HPP
#define FLEIB_STRUCTURE_HPP

#include <map>
#include <utility>
#include <vector>

#include "fleib/param.hpp"
#include "fleib/qi.hpp"

namespace fleib {

// Sparse vector over the basis e_0..e_{dim-1}.
using BasisVector = std::map<int, QiScalar>;

// Full structure-constant table gamma_{ij}^k of an algebra, stored
// sparsely: absent (i,j) entries mean [e_i, e_j] = 0.
class StructureTable {
public:
    explicit StructureTable(int dim) : dim_(dim) {
        if (dim < 1) throw DimensionMismatch("table dimension must be positive");
    }

    int dim() const { return dim_; }
    const std::map<std::pair<int, int>, BasisVector>& products() const { return products_; }

    void set_product(int i, int j, BasisVector v);
    void add_entry(int i, int j, int k, const QiScalar& c);
    // [e_i, e_j] as a sparse vector (empty when zero).
    BasisVector bracket_basis(int i, int j) const;
    // Bilinear extension of the bracket.
    BasisVector bracket(const BasisVector& x, const BasisVector& y) const;

    bool operator==(const StructureTable& o) const {
        return dim_ == o.dim_ && products_ == o.products_;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) throw DimensionMismatch("basis index out of range");
    }

    int dim_;
    std::map<std::pair<int, int>, BasisVector> products_;
};

// A basis triple where the Leibniz identity fails, with the nonzero value
// of [x,[y,z]] - [[x,y],z] + [[x,z],y].
struct LeibnizViolation {
    int x = 0, y = 0, z = 0;
    BasisVector defect;
};

// Structure table of L(beta) per the class-II multiplication rules.
StructureTable build_second_class(const ParamVector& p);

// Evaluates the Leibniz identity over all dim^3 basis triples; empty
// result means the identity holds. Violations are reported exhaustively.
std::vector<LeibnizViolation> leibniz_check(const StructureTable& t);

struct LowerCentralSeries {
    std::vector<int> dims; // dim L^1, dim L^2, ... until 0 or stabilization
    bool nilpotent = false;
};

// Exact dimensions of the lower central series via Gaussian elimination.
LowerCentralSeries lower_central_dims(const StructureTable& t);

// dim L^i == dim(t) - i for all 2 <= i <= dim(t), and nilpotent.
bool is_filiform(const StructureTable& t);

// Anticommutativity of the whole table.
bool is_lie(const StructureTable& t);

} // namespace fleib

#endif
