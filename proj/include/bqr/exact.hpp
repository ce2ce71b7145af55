#ifndef BQR_EXACT_HPP
#define BQR_EXACT_HPP

// Exact scalars and dense linear algebra.
//
// Two scalar kinds exist: rationals (Q) and rational functions in one formal
// parameter written "l" (Q(l), the weight of a Rota-Baxter operator). A
// Matrix holds one kind only; row reduction refuses mixed matrices.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bqr {

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational inverse() const;
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_{0};
};

/// Univariate polynomial over Q in the formal weight, coefficients stored
/// lowest degree first with no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(Rational c);  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();  // l
    static Poly monomial(Rational c, std::size_t degree);
    // Descending-degree text such as "l^2-1/2*l+3".
    static Poly parse(std::string_view text);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
    Rational eval(const Rational& at) const;
    std::string str() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Monic gcd (zero if both are zero).
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Reduced fraction num/den with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable()); }
    // "(num)/(den)" or a bare polynomial.
    static RatFunc parse(std::string_view text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    RatFunc inverse() const;
    // Throws MathError when the denominator vanishes at `at`.
    Rational eval(const Rational& at) const;
    std::string str() const;

    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatFunc(Poly num, Poly den, bool /*already reduced*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

enum class ScalarKind { rational, ratfunc };

class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(long v) : v_(Rational(v)) {}         // NOLINT
    Scalar(Rational v) : v_(std::move(v)) {}    // NOLINT
    Scalar(RatFunc v) : v_(std::move(v)) {}     // NOLINT

    // The formal weight l as a Q(l) scalar.
    static Scalar weight() { return Scalar(RatFunc::variable()); }
    // "p/q" parses as rational, anything mentioning l or parentheses as Q(l).
    static Scalar parse(std::string_view text);

    ScalarKind kind() const {
        return std::holds_alternative<Rational>(v_) ? ScalarKind::rational : ScalarKind::ratfunc;
    }
    bool is_zero() const;
    bool is_one() const;
    const Rational& rational() const;  // throws if not rational
    RatFunc as_ratfunc() const;
    // Converts to the requested kind; Q(l) -> Q only if constant.
    Scalar to_kind(ScalarKind k) const;
    Scalar inverse() const;
    // Substitutes a rational value for l (identity on rationals).
    Rational eval(const Rational& at) const;
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    // Value equality across kinds.
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, RatFunc> v_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar());
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Scalar> row_vector(std::size_t r) const;
    void append_row(std::span<const Scalar> values);

    // The common kind of all entries; throws "scalar kind mismatch".
    ScalarKind kind() const;
    bool is_zero() const;
    Matrix transpose() const;
    // Throws MathError("matrix is singular") when not invertible.
    Matrix inverse() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    std::vector<Scalar> apply(std::span<const Scalar> v) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;  // nonzero rows only
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// Leftmost-pivot, topmost-row Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

class Subspace;
Subspace nullspace(const Matrix& m);

/// Row space in reduced echelon form. Equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    // Span of the rows of `generators` (which must have `ambient` columns).
    static Subspace span(const Matrix& generators);
    static Subspace span(const std::vector<std::vector<Scalar>>& vectors, std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool leq(const Subspace& other) const;
    // Coordinates of v in the echelon basis; empty optional-like flag via bool.
    bool coordinates(std::span<const Scalar> v, std::vector<Scalar>& out) const;
    // Annihilator under the standard dot product.
    Subspace orthogonal() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

enum class SubspaceMode { contains, equal, leq };

bool subspace_query(const Subspace& a, const Subspace& b, SubspaceMode mode);
bool subspace_query(const Subspace& a, std::span<const Scalar> v);

}  // namespace bqr

#endif
