#include "tgwa/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tgwa {

IntVector to_int_vector(const std::vector<int>& v) {
    IntVector r;
    r.reserve(v.size());
    for (int x : v) r.emplace_back(x);
    return r;
}

std::vector<int> to_small_vector(const IntVector& v) {
    std::vector<int> r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (!x.fits_sint_p()) throw AlgebraError("exponent too large: " + x.get_str());
        r.push_back(static_cast<int>(x.get_si()));
    }
    return r;
}

std::string vector_str(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw AlgebraError("matrix rows have inconsistent lengths");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw AlgebraError("matrix rows have inconsistent lengths");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(size_t i) const {
    return IntVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(size_t j) const {
    IntVector c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (x.size() != cols_) throw AlgebraError("matrix/vector dimension mismatch");
    IntVector r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw AlgebraError("determinant of non-square matrix");
    const size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    Integer d = determinant();
    return d == 1 || d == -1;
}

bool IntMatrix::is_diagonal() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

// ---------------------------------------------------------------- Smith form

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_dst -= f * row_src
void add_row(IntMatrix& m, size_t dst, size_t src, const Integer& f) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= f * m.at(src, j);
}

void add_col(IntMatrix& m, size_t dst, size_t src, const Integer& f) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= f * m.at(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& D = s.D;
    const size_t r = m.rows(), c = m.cols();
    for (size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            size_t bi = r, bj = c;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j)
                    if (D.at(i, j) != 0 && (bi == r || abs(D.at(i, j)) < abs(D.at(bi, bj)))) bi = i, bj = j;
            if (bi == r) return s;
            swap_rows(D, t, bi);
            swap_rows(s.U, t, bi);
            swap_cols(D, t, bj);
            swap_cols(s.V, t, bj);

            bool clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                Integer f = floor_div(D.at(i, t), D.at(t, t));
                add_row(D, i, t, f);
                add_row(s.U, i, t, f);
                if (D.at(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                Integer f = floor_div(D.at(t, j), D.at(t, t));
                add_col(D, j, t, f);
                add_col(s.V, j, t, f);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (size_t i = t + 1; i < r && divides; ++i)
                for (size_t j = t + 1; j < c; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row(D, t, i, Integer(-1));
                        add_row(s.U, t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D.at(t, t) < 0) {
            for (size_t j = 0; j < c; ++j) D.at(t, j) = -D.at(t, j);
            for (size_t j = 0; j < r; ++j) s.U.at(t, j) = -s.U.at(t, j);
        }
    }
    return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<Integer> out;
    for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.D.at(i, i) != 0) out.push_back(s.D.at(i, i));
    return out;
}

// ---------------------------------------------------------------- Hermite form

std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& input, size_t cols) {
    std::vector<IntVector> rows;
    for (const auto& v : input) {
        if (v.size() != cols) throw AlgebraError("lattice vector has wrong length");
        rows.push_back(v);
    }
    size_t cur = 0;
    for (size_t col = 0; col < cols && cur < rows.size(); ++col) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = cur; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[cur], rows[best]);
            bool done = true;
            for (size_t i = cur + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer f = floor_div(rows[i][col], rows[cur][col]);
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[cur][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[cur][col] == 0) continue;
        if (rows[cur][col] < 0)
            for (auto& x : rows[cur]) x = -x;
        for (size_t i = 0; i < cur; ++i) {
            Integer f = floor_div(rows[i][col], rows[cur][col]);
            if (f != 0)
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[cur][j];
        }
        ++cur;
    }
    rows.resize(cur);
    return rows;
}

// ---------------------------------------------------------------- LatticeBasis

LatticeBasis::LatticeBasis(size_t ambient_rank, std::vector<IntVector> basis)
    : ambient_(ambient_rank), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (v.size() != ambient_) throw AlgebraError("lattice vector has wrong length");
    if (hermite_normal_form(basis_, ambient_).size() != basis_.size())
        throw AlgebraError("lattice basis vectors are linearly dependent");
}

LatticeBasis LatticeBasis::span(size_t ambient_rank, const std::vector<IntVector>& vectors) {
    LatticeBasis l;
    l.ambient_ = ambient_rank;
    l.basis_ = hermite_normal_form(vectors, ambient_rank);
    return l;
}

IntVector LatticeBasis::coordinates(const IntVector& v) const {
    if (v.size() != ambient_) throw AlgebraError("vector has wrong length for lattice");
    // Solve sum_k c_k b_k = v over Q by elimination on the transposed system.
    const size_t k = basis_.size();
    std::vector<std::vector<Rational>> a(ambient_, std::vector<Rational>(k + 1));
    for (size_t i = 0; i < ambient_; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = basis_[j][i];
        a[i][k] = v[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < ambient_; ++col) {
        size_t p = row;
        while (p < ambient_ && a[p][col] == 0) ++p;
        if (p == ambient_) continue;
        std::swap(a[p], a[row]);
        for (size_t i = 0; i < ambient_; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[row][col];
            for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < ambient_; ++i)
        if (a[i][k] != 0) throw AlgebraError("vector " + vector_str(v) + " is not in the lattice span");
    IntVector c(k);
    for (size_t i = 0; i < row; ++i) {
        Rational x = a[i][k] / a[i][pivot_col[i]];
        if (x.get_den() != 1) throw AlgebraError("vector " + vector_str(v) + " is not in the lattice");
        c[pivot_col[i]] = x.get_num();
    }
    return c;
}

bool LatticeBasis::contains(const IntVector& v) const {
    try {
        coordinates(v);
        return true;
    } catch (const AlgebraError&) {
        return false;
    }
}

bool LatticeBasis::contains_lattice(const LatticeBasis& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool LatticeBasis::same_lattice(const LatticeBasis& other) const {
    return ambient_ == other.ambient_ &&
           hermite_normal_form(basis_, ambient_) == hermite_normal_form(other.basis_, ambient_);
}

LatticeBasis kernel(const IntMatrix& m) {
    const size_t c = m.cols();
    if (m.rows() == 0) {
        std::vector<IntVector> id;
        for (size_t i = 0; i < c; ++i) id.push_back(IntMatrix::identity(c).row(i));
        return LatticeBasis::span(c, id);
    }
    SmithForm s = smith_normal_form(m);
    size_t rank = 0;
    while (rank < std::min(m.rows(), c) && s.D.at(rank, rank) != 0) ++rank;
    std::vector<IntVector> vecs;
    for (size_t j = rank; j < c; ++j) vecs.push_back(s.V.column(j));
    return LatticeBasis::span(c, vecs);
}

bool is_saturated(const LatticeBasis& lattice) {
    if (lattice.rank() == 0) return true;
    for (const auto& d : elementary_divisors(lattice.matrix()))
        if (d != 1) return false;
    return true;
}

// ---------------------------------------------------------------- CosetSystem

CosetSystem::CosetSystem(LatticeBasis lattice) : lattice_(std::move(lattice)) {
    const size_t m = lattice_.ambient_rank();
    std::vector<IntVector> reversed;
    for (const auto& v : lattice_.basis()) reversed.emplace_back(v.rbegin(), v.rend());
    for (auto& row : hermite_normal_form(reversed, m)) {
        size_t p = 0;
        while (row[p] == 0) ++p;
        pivots_.push_back(m - 1 - p);
        rows_.emplace_back(row.rbegin(), row.rend());
    }
}

CosetSystem::Reduction CosetSystem::reduce(const IntVector& d) const {
    if (d.size() != lattice_.ambient_rank()) throw AlgebraError("vector has wrong length for coset system");
    Reduction r{d, IntVector(d.size())};
    for (size_t k = 0; k < rows_.size(); ++k) {
        const size_t p = pivots_[k];
        Integer f = floor_div(r.rep[p], rows_[k][p]);
        if (f == 0) continue;
        for (size_t j = 0; j < d.size(); ++j) {
            r.rep[j] -= f * rows_[k][j];
            r.lattice_part[j] += f * rows_[k][j];
        }
    }
    return r;
}

// ---------------------------------------------------------------- character kernel

LatticeBasis character_kernel(const std::vector<std::vector<ParamMonomial>>& p, size_t b) {
    std::set<Integer> primes;
    for (const auto& row : p) {
        if (row.size() != b) throw AlgebraError("character matrix has wrong width");
        for (const auto& m : row)
            for (const auto& [prime, e] : m.prime_exponents) primes.insert(prime);
    }
    const size_t nchar = p.size();
    const size_t width = b + nchar;  // one auxiliary variable per character for the sign
    std::vector<IntVector> eqs;
    for (size_t i = 0; i < nchar; ++i) {
        for (const auto& prime : primes) {
            IntVector eq(width);
            for (size_t j = 0; j < b; ++j) {
                auto it = p[i][j].prime_exponents.find(prime);
                if (it != p[i][j].prime_exponents.end()) eq[j] = it->second;
            }
            eqs.push_back(eq);
        }
        IntVector qeq(width), seq(width);
        for (size_t j = 0; j < b; ++j) {
            qeq[j] = p[i][j].q_exponent;
            seq[j] = p[i][j].sign < 0 ? 1 : 0;
        }
        seq[b + i] = -2;
        eqs.push_back(qeq);
        eqs.push_back(seq);
    }
    LatticeBasis full = kernel(IntMatrix::from_rows(eqs, width));
    std::vector<IntVector> projected;
    for (const auto& v : full.basis()) projected.emplace_back(v.begin(), v.begin() + static_cast<long>(b));
    return LatticeBasis::span(b, projected);
}

}  // namespace tgwa
