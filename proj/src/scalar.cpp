#include "tgwa/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tgwa {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
    UPoly p;
    if (c == 0) return p;
    if (degree < 0) throw AlgebraError("UPoly::monomial: negative degree");
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int d) const {
    if (d < 0 || d > degree()) return 0;
    return coeffs_[static_cast<size_t>(d)];
}

int UPoly::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_) n += (c != 0);
    return n;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const UPoly& lo = a.coeffs_.size() < b.coeffs_.size() ? a : b;
    const UPoly& hi = a.coeffs_.size() < b.coeffs_.size() ? b : a;
    UPoly r = hi;
    for (size_t i = 0; i < lo.coeffs_.size(); ++i) r.coeffs_[i] += lo.coeffs_[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    UPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    if (b.is_zero()) throw DivisionByZero();
    UPoly q, r = a;
    const UPoly d = b;
    if (r.degree() >= d.degree()) {
        q.coeffs_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
        const Rational inv_lead = 1 / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int shift = r.degree() - d.degree();
            const Rational c = r.lead() * inv_lead;
            q.coeffs_[static_cast<size_t>(shift)] = c;
            for (int i = 0; i <= d.degree(); ++i) r.coeffs_[static_cast<size_t>(i + shift)] -= c * d.coeffs_[static_cast<size_t>(i)];
            r.trim();
        }
        q.trim();
    }
    quot = std::move(q);
    rem = std::move(r);
}

int UPoly::valuation() const {
    for (size_t d = 0; d < coeffs_.size(); ++d)
        if (coeffs_[d] != 0) return static_cast<int>(d);
    return -1;
}

UPoly UPoly::divided_by_q(int k) const {
    UPoly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        if (b.degree() == 0) return UPoly(1);
        UPoly qt, r;
        divmod(a, b, qt, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

// One term without its sign; |c| == 1 is elided for positive degree.
std::string term_body(const Rational& abs_c, int d) {
    std::string q = d == 1 ? "q" : "q^" + std::to_string(d);
    if (d == 0) return rational_str(abs_c);
    if (abs_c == 1) return q;
    return rational_str(abs_c) + "*" + q;
}

}  // namespace

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<size_t>(d)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        out += term_body(abs(c), d);
    }
    return out;
}

// ---------------------------------------------------------------- Field

FieldDescriptor FieldDescriptor::parse(std::string_view name) {
    if (name == "Q") return {FieldKind::Rationals};
    if (name == "Qq") return {FieldKind::RationalFunctions};
    throw AlgebraError("unknown field '" + std::string(name) + "' (expected Q or Qq)");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Rational& v) : den_(1) {
    Rational c = v;
    c.canonicalize();
    num_ = UPoly(c);
}

Scalar::Scalar(const UPoly& num, const UPoly& den) : num_(num), den_(den) { normalize(); }

Scalar Scalar::q() { return Scalar(UPoly::monomial(1, 1), UPoly(1)); }

Scalar Scalar::q_power(int m) {
    if (m >= 0) return Scalar(UPoly::monomial(1, m), UPoly(1));
    return Scalar(UPoly(1), UPoly::monomial(1, -m));
}

void Scalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (!den_.is_constant() && den_.term_count() == 1) {
        const int k = std::min(num_.valuation(), den_.degree());
        num_ = num_.divided_by_q(k);
        den_ = den_.divided_by_q(k);
    } else if (!den_.is_constant()) {
        UPoly g = UPoly::gcd(num_, den_);
        if (!g.is_one()) {
            UPoly r;
            UPoly::divmod(num_, g, num_, r);
            UPoly::divmod(den_, g, den_, r);
        }
    }
    if (!den_.is_one()) {
        const Rational l = den_.lead();
        num_ = num_.scaled(1 / l);
        den_ = den_.scaled(1 / l);
    }
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw AlgebraError("scalar " + str() + " is not rational");
    return num_.coeff(0);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    if (a.is_rational()) {
        Scalar r = b;
        r.num_ = r.num_.scaled(a.num_.coeff(0));
        return r;
    }
    if (b.is_rational()) {
        Scalar r = a;
        r.num_ = r.num_.scaled(b.num_.coeff(0));
        return r;
    }
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    // c*q^m with m < 0 prints as c/q^|m|.
    if (num_.term_count() == 1 && den_.term_count() == 1) {
        const int m = num_.degree() - den_.degree();
        const Rational c = num_.lead();
        if (m >= 0) return UPoly::monomial(c, m).str();
        std::string q = m == -1 ? "q" : "q^" + std::to_string(-m);
        return rational_str(c) + "/" + q;
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, FieldDescriptor field) : text_(text), field_(field) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw AlgebraError("cannot parse scalar '" + std::string(text_) + "': " + what + " at offset " +
                           std::to_string(pos_));
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (eat('*'))
                acc *= unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else
                return acc;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }
    Scalar power() {
        Scalar base = primary();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            skip();
            const size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            long e = std::stol(std::string(text_.substr(start, pos_ - start)));
            if (neg) e = -e;
            if (e < 0 && base.is_zero()) fail("zero to a negative power");
            return base.pow(e);
        }
        return base;
    }
    Scalar primary() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < text_.size() && text_[pos_] == 'q') {
            ++pos_;
            if (field_.kind == FieldKind::Rationals) fail("symbol q is not available over Q");
            return Scalar::q();
        }
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number, q or '('");
        return Scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }

    std::string_view text_;
    FieldDescriptor field_;
    size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, FieldDescriptor field) { return ScalarParser(text, field).run(); }

bool is_root_of_unity(const Scalar& a) {
    if (a.is_zero()) throw AlgebraError("is_root_of_unity: zero input");
    return a == Scalar(1) || a == Scalar(-1);
}

// ---------------------------------------------------------------- ParamMonomial

Scalar ParamMonomial::to_scalar() const {
    Rational c = sign;
    for (const auto& [p, e] : prime_exponents) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e > 0)
            c *= pe;
        else
            c /= pe;
    }
    return Scalar(c) * Scalar::q_power(static_cast<int>(q_exponent));
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r = a;
    r.sign *= b.sign;
    r.q_exponent += b.q_exponent;
    for (const auto& [p, e] : b.prime_exponents) {
        long& slot = r.prime_exponents[p];
        slot += e;
        if (slot == 0) r.prime_exponents.erase(p);
    }
    return r;
}

ParamMonomial pow(const ParamMonomial& a, long e) {
    ParamMonomial r;
    r.sign = (e % 2 != 0) ? a.sign : 1;
    r.q_exponent = a.q_exponent * e;
    if (e != 0)
        for (const auto& [p, x] : a.prime_exponents) r.prime_exponents[p] = x * e;
    return r;
}

ParamMonomial inverse(const ParamMonomial& a) { return pow(a, -1); }

namespace {

void factor_integer(Integer n, long sign_exp, std::map<Integer, long>& out) {
    constexpr unsigned long kTrialLimit = 100000;
    for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * Integer(p) > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += sign_exp;
            n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw UnsupportedParameter("cannot factor " + n.get_str() + " (no prime factor below trial limit)");
        out[n] += sign_exp;
    }
}

}  // namespace

ParamMonomial factor_parameter(const Scalar& a) {
    if (a.is_zero()) throw AlgebraError("factor_parameter: zero has no factorization");
    if (a.num().term_count() != 1 || a.den().term_count() != 1)
        throw UnsupportedParameter("parameter " + a.str() + " is not of the form c*q^m");
    ParamMonomial m;
    m.q_exponent = a.num().degree() - a.den().degree();
    const Rational c = a.num().lead() / a.den().lead();
    m.sign = c < 0 ? -1 : 1;
    factor_integer(abs(c.get_num()), 1, m.prime_exponents);
    factor_integer(c.get_den(), -1, m.prime_exponents);
    std::erase_if(m.prime_exponents, [](const auto& kv) { return kv.second == 0; });
    return m;
}

std::optional<long> solve_power_equation(const ParamMonomial& base, const ParamMonomial& target) {
    if (base.is_root_of_unity())
        throw AlgebraError("solve_power_equation: base is a root of unity, solution not unique");
    // Exponent vector of base is nonzero somewhere; pick the ratio there.
    std::optional<long> e;
    auto propose = [&](long b, long t) -> bool {
        if (b == 0) return t == 0;
        if (t % b != 0) return false;
        const long cand = t / b;
        if (e && *e != cand) return false;
        e = cand;
        return true;
    };
    if (!propose(base.q_exponent, target.q_exponent)) return std::nullopt;
    for (const auto& [p, x] : base.prime_exponents) {
        auto it = target.prime_exponents.find(p);
        if (!propose(x, it == target.prime_exponents.end() ? 0 : it->second)) return std::nullopt;
    }
    for (const auto& [p, x] : target.prime_exponents)
        if (!base.prime_exponents.count(p) && x != 0) return std::nullopt;
    if (!e) return std::nullopt;
    const int sign = (*e % 2 != 0) ? base.sign : 1;
    if (sign != target.sign) return std::nullopt;
    return e;
}

}  // namespace tgwa
