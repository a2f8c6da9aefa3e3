#pragma once

#include <string>
#include <vector>

#include "tgwa/scalar.hpp"

namespace tgwa {

using IntVector = std::vector<Integer>;

IntVector to_int_vector(const std::vector<int>& v);
std::vector<int> to_small_vector(const IntVector& v);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, size_t cols);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Integer& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    IntVector row(size_t i) const;
    IntVector column(size_t j) const;

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    IntVector apply(const IntVector& x) const;
    /// Exact determinant (Bareiss); square matrices only.
    Integer determinant() const;
    bool is_unimodular() const;
    bool is_diagonal() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D
};

SmithForm smith_normal_form(const IntMatrix& m);
/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

/// Row Hermite normal form of the row span: nonzero rows only, pivots positive
/// and strictly moving right, entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows, size_t cols);

/// A sublattice of Z^m given by independent generators.
class LatticeBasis {
public:
    LatticeBasis() = default;
    explicit LatticeBasis(size_t ambient_rank, std::vector<IntVector> basis = {});
    /// Lattice spanned by arbitrary (possibly dependent) vectors, stored in HNF.
    static LatticeBasis span(size_t ambient_rank, const std::vector<IntVector>& vectors);

    size_t ambient_rank() const { return ambient_; }
    size_t rank() const { return basis_.size(); }
    const std::vector<IntVector>& basis() const { return basis_; }
    IntMatrix matrix() const { return IntMatrix::from_rows(basis_, ambient_); }

    bool contains(const IntVector& v) const;
    /// Integer coefficients c with v = sum c_k basis_k; throws if v is not in the lattice.
    IntVector coordinates(const IntVector& v) const;
    /// Same lattice (not necessarily the same basis).
    bool same_lattice(const LatticeBasis& other) const;
    bool contains_lattice(const LatticeBasis& other) const;

private:
    size_t ambient_ = 0;
    std::vector<IntVector> basis_;
};

/// Integer basis of {x : M x = 0}, in HNF.
LatticeBasis kernel(const IntMatrix& m);

/// True iff Z^m / L is torsion-free.
bool is_saturated(const LatticeBasis& lattice);

/// Canonical coset representatives for Z^m / L. Reduction uses the Hermite form
/// computed with the coordinate order reversed, so the last coordinates are
/// reduced first.
class CosetSystem {
public:
    CosetSystem() = default;
    explicit CosetSystem(LatticeBasis lattice);

    struct Reduction {
        IntVector rep;
        IntVector lattice_part;
    };
    Reduction reduce(const IntVector& d) const;
    const LatticeBasis& lattice() const { return lattice_; }

private:
    LatticeBasis lattice_;
    std::vector<IntVector> rows_;   // reversed-order echelon rows
    std::vector<size_t> pivots_;    // original column index of each pivot
};

/// {x in Z^b : prod_j P[i][j]^{x_j} = 1 for every i}, where every P[i][j] is a
/// monomial in primes, q and a sign. Returned in HNF.
LatticeBasis character_kernel(const std::vector<std::vector<ParamMonomial>>& p, size_t b);

std::string vector_str(const IntVector& v);

}  // namespace tgwa
