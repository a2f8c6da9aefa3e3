#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgwa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on malformed input, unsupported parameters, or violated preconditions.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
public:
    DivisionByZero() : AlgebraError("division by zero") {}
};

class UnsupportedParameter : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Dense univariate polynomial in q over the rationals, lowest degree first.
/// The zero polynomial has no coefficients; the leading coefficient is never zero.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c);
    UPoly(long c) : UPoly(Rational(c)) {}
    static UPoly monomial(const Rational& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& lead() const { return coeffs_.back(); }
    Rational coeff(int d) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Number of nonzero coefficients.
    int term_count() const;
    /// Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;
    /// Exact division by q^k, k <= valuation().
    UPoly divided_by_q(int k) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Rational& c) const;
    UPoly monic() const;

    /// Euclidean division; b must be nonzero.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
    /// Monic gcd (zero only if both inputs are zero).
    static UPoly gcd(UPoly a, UPoly b);

    Rational eval(const Rational& x) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Which coefficient field a computation lives in.
enum class FieldKind { Rationals, RationalFunctions };

struct FieldDescriptor {
    FieldKind kind = FieldKind::RationalFunctions;
    std::string name() const { return kind == FieldKind::Rationals ? "Q" : "Qq"; }
    static FieldDescriptor parse(std::string_view name);
};

/// An element of Q or Q(q), stored as a reduced fraction num/den with den monic.
/// The representation is canonical, so equality is structural.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const Rational& v);
    Scalar(const Integer& v) : Scalar(Rational(v)) {}
    Scalar(const UPoly& num, const UPoly& den);

    static Scalar q();
    static Scalar q_power(int m);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Q.
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    Rational to_rational() const;
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical literal: "a/b", "c*q^m", "c/q^m" or "(num)/(den)".
    std::string str() const;
    /// Parses an arithmetic expression in integers, q, + - * / ^ and parentheses.
    static Scalar parse(std::string_view text, FieldDescriptor field = {});

private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// True iff a^m = 1 for some m >= 1. Over Q and Q(q) only 1 and -1 qualify.
bool is_root_of_unity(const Scalar& a);

/// A nonzero value of the form  sign * prod p^e * q^m.
struct ParamMonomial {
    int sign = 1;
    std::map<Integer, long> prime_exponents;
    long q_exponent = 0;

    Scalar to_scalar() const;
    bool is_root_of_unity() const { return prime_exponents.empty() && q_exponent == 0; }
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
ParamMonomial pow(const ParamMonomial& a, long e);
ParamMonomial inverse(const ParamMonomial& a);

/// Factors a rational number or a rational multiple of a power of q.
/// Throws UnsupportedParameter for anything else, AlgebraError for zero.
ParamMonomial factor_parameter(const Scalar& a);

/// The unique e with base^e == target, if any. Throws when base is a root of unity.
std::optional<long> solve_power_equation(const ParamMonomial& base, const ParamMonomial& target);

}  // namespace tgwa
