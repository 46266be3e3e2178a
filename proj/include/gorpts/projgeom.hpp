#ifndef GORPTS_PROJGEOM_HPP
#define GORPTS_PROJGEOM_HPP

#include "gorpts/errors.hpp"
#include "gorpts/matrix.hpp"
#include "gorpts/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gorpts {

namespace detail {

// Canonical form of a homogeneous coordinate vector: denominators cleared,
// gcd of the integer entries 1, first nonzero entry positive. Makes
// projective equality a plain field-wise comparison.
inline std::optional<std::vector<Rational>> try_canonical(std::span<const Rational> v) {
    mpz_class l(1);
    for (const auto& x : v) l = lcm(l, x.den());
    std::vector<mpz_class> ints(v.size());
    mpz_class g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].num() * mpz_class(l / v[i].den());
        g = gcd(g, ints[i]);
    }
    if (g == 0) return std::nullopt; // all entries zero
    int flip = 1;
    for (const auto& x : ints) {
        if (x != 0) {
            flip = sgn(x);
            break;
        }
    }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (auto& x : ints) out.emplace_back(mpz_class(flip * x / g));
    return out;
}

inline std::vector<Rational> canonical(std::span<const Rational> v, const char* what) {
    auto c = try_canonical(v);
    if (!c) throw validation_error(std::string(what) + ": all coordinates are zero");
    return std::move(*c);
}

inline std::string bracketed(std::span<const Rational> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << " : ";
        os << v[i];
    }
    os << ']';
    return os.str();
}

} // namespace detail

/// Point of P^n in canonical integer coordinates.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords)
        : c_(detail::canonical(coords, "ProjPoint")) {}

    ProjPoint(std::initializer_list<Rational> coords)
        : ProjPoint(std::vector<Rational>(coords)) {}

    std::size_t size() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return a.c_ != b.c_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::string str() const { return detail::bracketed(c_); }

private:
    std::vector<Rational> c_;
};

/// Hyperplane given by its coefficient vector, same canonical form as
/// ProjPoint.
class LinearForm {
public:
    explicit LinearForm(std::vector<Rational> coeffs)
        : c_(detail::canonical(coeffs, "LinearForm")) {}

    LinearForm(std::initializer_list<Rational> coeffs)
        : LinearForm(std::vector<Rational>(coeffs)) {}

    std::size_t size() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const ProjPoint& p) const {
        if (p.size() != c_.size())
            throw std::invalid_argument("LinearForm: dimension mismatch");
        Rational s(0);
        for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * p[i];
        return s;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return a.c_ != b.c_; }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::string str() const { return detail::bracketed(c_); }

private:
    std::vector<Rational> c_;
};

/// Line in P^3 as the common zero set of two independent linear forms.
class Line3 {
public:
    Line3(LinearForm a, LinearForm b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.size() != 4 || b_.size() != 4)
            throw std::invalid_argument("Line3: forms must have 4 coefficients");
        bool independent = false;
        for (std::size_t s = 0; s < 4 && !independent; ++s)
            for (std::size_t t = s + 1; t < 4; ++t)
                if (!(a_[s] * b_[t] - a_[t] * b_[s]).is_zero()) {
                    independent = true;
                    break;
                }
        if (!independent)
            throw validation_error("Line3: defining forms are linearly dependent");
    }

    const LinearForm& form_a() const { return a_; }
    const LinearForm& form_b() const { return b_; }

    bool contains(const ProjPoint& p) const {
        return a_(p).is_zero() && b_(p).is_zero();
    }

    /// Canonical identifier of the pencil spanned by the two forms: the six
    /// 2x2 minors of the coefficient matrix, canonicalized. Two Line3 values
    /// describe the same line iff these agree.
    std::vector<Rational> span_id() const {
        std::vector<Rational> m;
        m.reserve(6);
        for (std::size_t s = 0; s < 4; ++s)
            for (std::size_t t = s + 1; t < 4; ++t)
                m.push_back(a_[s] * b_[t] - a_[t] * b_[s]);
        return detail::canonical(m, "Line3::span_id");
    }

private:
    LinearForm a_, b_;
};

inline bool same_line(const Line3& a, const Line3& b) {
    return a.span_id() == b.span_id();
}

/// Homogeneous polynomial, dense exponent vectors, terms sorted in
/// descending lexicographic order (x0 > x1 > ...), no duplicates, no zero
/// coefficients.
class Poly {
public:
    struct Term {
        std::vector<int> exps;
        Rational coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.exps == b.exps && a.coeff == b.coeff;
        }
    };

    Poly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                                a.exps.begin(), a.exps.end());
        });
        degree_ = -1;
        for (auto& t : terms) {
            if (t.exps.size() != nvars_)
                throw std::invalid_argument("Poly: exponent vector of wrong length");
            int d = 0;
            for (int e : t.exps) {
                if (e < 0) throw std::invalid_argument("Poly: negative exponent");
                d += e;
            }
            if (t.coeff.is_zero()) continue;
            if (!terms_.empty() && terms_.back().exps == t.exps) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
                continue;
            }
            if (degree_ < 0)
                degree_ = d;
            else if (d != degree_)
                throw std::invalid_argument("Poly: not homogeneous");
            terms_.push_back(std::move(t));
        }
        if (terms_.empty()) degree_ = -1;
    }

    static Poly from_form(const LinearForm& f) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i].is_zero()) continue;
            std::vector<int> e(f.size(), 0);
            e[i] = 1;
            terms.push_back({std::move(e), f[i]});
        }
        return Poly(f.size(), std::move(terms));
    }

    std::size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational eval(std::span<const Rational> x) const {
        if (x.size() != nvars_) throw std::invalid_argument("Poly: dimension mismatch");
        Rational s(0);
        for (const auto& t : terms_) {
            Rational m = t.coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.exps[i]) m *= pow(x[i], static_cast<unsigned long>(t.exps[i]));
            s += m;
        }
        return s;
    }
    Rational eval(const ProjPoint& p) const { return eval(std::span(p.coords())); }

    Poly operator*(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: dimension mismatch");
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                std::vector<int> e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = a.exps[i] + b.exps[i];
                prod.push_back({std::move(e), a.coeff * b.coeff});
            }
        return Poly(nvars_, std::move(prod));
    }

    /// Same normalization as for coordinate vectors, applied to the
    /// coefficient list in term order.
    Poly canonicalized() const {
        if (terms_.empty()) return *this;
        std::vector<Rational> cs;
        cs.reserve(terms_.size());
        for (const auto& t : terms_) cs.push_back(t.coeff);
        auto canon = detail::canonical(cs, "Poly");
        std::vector<Term> out = terms_;
        for (std::size_t i = 0; i < out.size(); ++i) out[i].coeff = canon[i];
        return Poly(nvars_, std::move(out));
    }

    /// Deterministic rendering, e.g. "x0^2 - 6*x0*x1 + 9*x1^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c.sign() < 0) { os << '-'; c = -c; }
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            first = false;
            bool printed = false;
            if (c != Rational(1)) {
                os << c.str();
                printed = true;
            }
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (!t.exps[i]) continue;
                if (printed) os << '*';
                os << 'x' << i;
                if (t.exps[i] > 1) os << '^' << t.exps[i];
                printed = true;
            }
            if (!printed) os << c.str();
        }
        return os.str();
    }

private:
    std::size_t nvars_;
    int degree_;
    std::vector<Term> terms_;
};

inline Rational eval_poly(const Poly& f, const ProjPoint& p) { return f.eval(p); }

/// Coordinate-wise product of two points. Undefined (error) exactly when
/// every coordinate product vanishes.
inline ProjPoint hadamard_point(const ProjPoint& p, const ProjPoint& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("hadamard_point: dimension mismatch");
    std::vector<Rational> prod(p.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        prod[i] = p[i] * q[i];
        if (!prod[i].is_zero()) all_zero = false;
    }
    if (all_zero)
        throw validation_error("hadamard_point: product is not defined (all coordinate products vanish)");
    return ProjPoint(std::move(prod));
}

/// Least i such that p has at most i+1 nonzero coordinates.
inline int delta_index(const ProjPoint& p) {
    int nz = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) ++nz;
    return nz - 1;
}

inline bool has_zero_coordinate(const ProjPoint& p) {
    return delta_index(p) + 1 < static_cast<int>(p.size());
}

/// Divides each coefficient by the corresponding monomial value at p.
/// Carries a generating set of I(V) to one of I(p * V); requires p to have
/// no zero coordinate.
inline Poly hadamard_transform(const Poly& f, const ProjPoint& p) {
    if (f.nvars() != p.size())
        throw std::invalid_argument("hadamard_transform: dimension mismatch");
    if (has_zero_coordinate(p))
        throw validation_error("hadamard_transform: point has a zero coordinate");
    std::vector<Poly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Rational m(1);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (t.exps[i]) m *= pow(p[i], static_cast<unsigned long>(t.exps[i]));
        out.push_back({t.exps, t.coeff / m});
    }
    return Poly(f.nvars(), std::move(out)).canonicalized();
}

/// The line p * l: both defining forms Hadamard-transformed by p.
inline Line3 transform_line(const Line3& l, const ProjPoint& p) {
    if (p.size() != 4)
        throw std::invalid_argument("transform_line: point must lie in P^3");
    if (has_zero_coordinate(p))
        throw validation_error("transform_line: point has a zero coordinate");
    auto tf = [&](const LinearForm& f) {
        std::vector<Rational> c(4);
        for (std::size_t i = 0; i < 4; ++i) c[i] = f[i] / p[i];
        return LinearForm(std::move(c));
    };
    return Line3(tf(l.form_a()), tf(l.form_b()));
}

/// Line through two distinct points, as the kernel of the 2x4 coordinate
/// matrix; the two forms are returned in lexicographic order of their
/// canonical coefficient vectors.
inline Line3 line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p.size() != 4 || q.size() != 4)
        throw std::invalid_argument("line_through: points must lie in P^3");
    if (p == q) throw validation_error("line_through: points coincide");
    QMatrix m(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m.at(0, j) = p[j];
        m.at(1, j) = q[j];
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 2)
        throw internal_error("line_through: expected a 2-dimensional form space");
    LinearForm f0{std::vector<Rational>(ker[0])};
    LinearForm f1{std::vector<Rational>(ker[1])};
    if (f1 < f0) std::swap(f0, f1);
    return Line3(std::move(f0), std::move(f1));
}

/// k distinct points lambda*u + mu*v on the line, for the fixed parameter
/// sequence (1:0), (0:1), (1:1), (1:2), (2:1), (1:3), (3:1), ...
inline std::vector<ProjPoint> sample_line_points(const Line3& l, std::size_t k) {
    QMatrix m(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m.at(0, j) = l.form_a()[j];
        m.at(1, j) = l.form_b()[j];
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 2)
        throw internal_error("sample_line_points: line has no 2-dimensional kernel");
    const auto& u = ker[0];
    const auto& v = ker[1];

    std::vector<std::pair<long, long>> params = {{1, 0}, {0, 1}, {1, 1}};
    for (long t = 2; params.size() < k; ++t) {
        params.emplace_back(1, t);
        if (params.size() < k) params.emplace_back(t, 1);
    }

    std::vector<ProjPoint> pts;
    pts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational lam(params[i].first), mu(params[i].second);
        std::vector<Rational> c(4);
        for (std::size_t j = 0; j < 4; ++j) c[j] = lam * u[j] + mu * v[j];
        pts.emplace_back(std::move(c));
    }
    return pts;
}

} // namespace gorpts

#endif
