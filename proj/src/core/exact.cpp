#include "bqr/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bqr {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
    if (den == 0) throw MathError("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw MathError("empty rational literal");
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& p) {
        std::size_t i = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
        if (i >= p.size()) return false;
        return std::all_of(p.begin() + static_cast<long>(i), p.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den)) throw MathError("bad rational literal '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw MathError("division by zero");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(Rational c, std::size_t degree) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(degree + 1, Rational());
    p.c_[degree] = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += "l";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Poly Poly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw MathError("empty polynomial");
    Poly result;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw MathError("bad polynomial '" + s + "'");
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational coeff(1);
        if (i > start) coeff = Rational::parse(s.substr(start, i - start));
        std::size_t degree = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'l') {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ds = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (ds == i) throw MathError("bad exponent in '" + s + "'");
                degree = std::stoul(s.substr(ds, i - ds));
            }
        } else if (i == start) {
            throw MathError("bad polynomial '" + s + "'");
        }
        result = result + monomial(sign < 0 ? -coeff : coeff, degree);
    }
    return result;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    r = a;
    q = Poly();
    std::vector<Rational> qc;
    if (a.degree() >= b.degree()) qc.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational());
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rational f = r.leading() * lead_inv;
        qc[shift] = f;
        r = r - monomial(f, shift) * b;
    }
    q = Poly(std::move(qc));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv = leading().inverse();
    Poly p = *this;
    for (auto& c : p.c_) c *= inv;
    return p;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw MathError("division by zero");
    if (num.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den.degree() == 0) {
        num_ = den.leading().is_one() ? std::move(num) : num * Poly(den.leading().inverse());
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    Poly q, r;
    Poly::divmod(num, g, num_, r);
    Poly::divmod(den, g, den_, r);
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = num_ * Poly(inv);
        den_ = den_ * Poly(inv);
    }
}

RatFunc RatFunc::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw MathError("empty rational function");
    if (s.front() != '(') return RatFunc(Poly::parse(s));
    auto close = s.find(')');
    if (close == std::string::npos) throw MathError("bad rational function '" + s + "'");
    Poly num = Poly::parse(s.substr(1, close - 1));
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return RatFunc(num);
    if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
        throw MathError("bad rational function '" + s + "'");
    Poly den = Poly::parse(rest.substr(2, rest.size() - 3));
    return RatFunc(num, den);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d.is_zero()) throw MathError("denominator vanishes at l=" + at.str());
    return num_.eval(at) / d;
}

std::string RatFunc::str() const {
    // polynomials print bare; constants keep the fraction so they parse back as Q(l)
    if (den_.degree() == 0 && num_.degree() > 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

// ---------------------------------------------------------------- Scalar

Scalar Scalar::parse(std::string_view text) {
    if (text.find('l') != std::string_view::npos || text.find('(') != std::string_view::npos)
        return Scalar(RatFunc::parse(text));
    return Scalar(Rational::parse(text));
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->is_one();
    const auto& f = std::get<RatFunc>(v_);
    return f.is_constant() && f.num().coeff(0).is_one();
}

const Rational& Scalar::rational() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r;
    throw MathError("scalar kind mismatch");
}

RatFunc Scalar::as_ratfunc() const {
    if (auto* r = std::get_if<Rational>(&v_)) return RatFunc(*r);
    return std::get<RatFunc>(v_);
}

Scalar Scalar::to_kind(ScalarKind k) const {
    if (k == kind()) return *this;
    if (k == ScalarKind::ratfunc) return Scalar(as_ratfunc());
    const auto& f = std::get<RatFunc>(v_);
    if (!f.is_constant()) throw MathError("scalar kind mismatch");
    return Scalar(f.num().coeff(0));
}

Scalar Scalar::inverse() const {
    return std::visit([](const auto& v) { return Scalar(v.inverse()); }, v_);
}

Rational Scalar::eval(const Rational& at) const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r;
    return std::get<RatFunc>(v_).eval(at);
}

std::string Scalar::str() const {
    return std::visit([](const auto& v) { return v.str(); }, v_);
}

Scalar Scalar::operator-() const {
    return std::visit([](const auto& v) { return Scalar(-v); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (kind() == ScalarKind::rational && o.kind() == ScalarKind::rational)
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    else
        v_ = as_ratfunc() + o.as_ratfunc();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (kind() == ScalarKind::rational && o.kind() == ScalarKind::rational)
        std::get<Rational>(v_) -= std::get<Rational>(o.v_);
    else
        v_ = as_ratfunc() - o.as_ratfunc();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (kind() == ScalarKind::rational && o.kind() == ScalarKind::rational)
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    else
        v_ = as_ratfunc() * o.as_ratfunc();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (kind() == ScalarKind::rational && o.kind() == ScalarKind::rational)
        std::get<Rational>(v_) /= std::get<Rational>(o.v_);
    else
        v_ = as_ratfunc() / o.as_ratfunc();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() == ScalarKind::rational && b.kind() == ScalarKind::rational)
        return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
    return a.as_ratfunc() == b.as_ratfunc();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

void Matrix::append_row(std::span<const Scalar> values) {
    if (values.size() != cols_) throw MathError("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

// Zero entries are neutral so that default-filled Q(l) matrices are usable.
ScalarKind Matrix::kind() const {
    bool rat = false, fun = false;
    for (const auto& s : data_) {
        if (s.is_zero()) continue;
        (s.kind() == ScalarKind::rational ? rat : fun) = true;
    }
    if (rat && fun) throw MathError("scalar kind mismatch");
    return fun ? ScalarKind::ratfunc : ScalarKind::rational;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw MathError("matrix is singular");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    ScalarKind k = kind();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < n; ++j) aug(i, n + j) = Scalar(i == j ? 1 : 0).to_kind(k);
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw MathError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw MathError("dimension mismatch in matrix-vector product");
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch");
    ScalarKind kind = (a.kind() == ScalarKind::ratfunc || b.kind() == ScalarKind::ratfunc)
                          ? ScalarKind::ratfunc
                          : ScalarKind::rational;
    Matrix c(a.rows_, b.cols_, Scalar(0).to_kind(kind));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    for (auto& s : c.data_) s = s.to_kind(kind);
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
    ScalarKind kind = m.kind();
    Matrix a = m;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j).to_kind(kind);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.reduced = Matrix(0, cols);
    for (std::size_t i = 0; i < r; ++i) out.reduced.append_row(a.row(i));
    // Keep the scalar kind of the input even for entries produced as zero.
    for (std::size_t i = 0; i < out.reduced.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.reduced(i, j) = out.reduced(i, j).to_kind(kind);
    return out;
}

Subspace nullspace(const Matrix& m) {
    ScalarKind kind = m.kind();
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix basis(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0).to_kind(kind));
        v[free] = Scalar(1).to_kind(kind);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.append_row(v);
    }
    return Subspace::span(basis);
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(std::size_t ambient) { return {ambient, Matrix(0, ambient), {}}; }

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return {ambient, Matrix::identity(ambient), piv};
}

Subspace Subspace::span(const Matrix& generators) {
    RrefResult r = rref(generators);
    return {generators.cols(), std::move(r.reduced), std::move(r.pivots)};
}

Subspace Subspace::span(const std::vector<std::vector<Scalar>>& vectors, std::size_t ambient) {
    return span(Matrix::from_rows(vectors, ambient));
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw MathError("ambient dimension mismatch");
    // v is in the row space iff it equals the combination read off its pivot
    // coordinates.
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (is_pivot[c]) continue;
        Scalar acc;
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const Scalar& coef = v[pivots_[k]];
            if (coef.is_zero() || basis_(k, c).is_zero()) continue;
            acc += coef * basis_(k, c);
        }
        if (!(acc == v[c])) return false;
    }
    return true;
}

bool Subspace::coordinates(std::span<const Scalar> v, std::vector<Scalar>& out) const {
    if (!contains(v)) return false;
    out.clear();
    for (auto p : pivots_) out.push_back(v[p]);
    return true;
}

bool Subspace::leq(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw MathError("ambient dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (!other.contains(basis_.row(i))) return false;
    return true;
}

Subspace Subspace::orthogonal() const {
    if (basis_.rows() == 0) return full(ambient_);
    return nullspace(basis_);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

bool subspace_query(const Subspace& a, const Subspace& b, SubspaceMode mode) {
    if (a.ambient() != b.ambient()) throw MathError("ambient dimension mismatch");
    switch (mode) {
        case SubspaceMode::contains: return b.leq(a);
        case SubspaceMode::leq: return a.leq(b);
        case SubspaceMode::equal: return a.leq(b) && b.leq(a);
    }
    return false;
}

bool subspace_query(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

}  // namespace bqr
