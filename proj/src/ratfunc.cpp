#include "permav/ratfunc.hpp"

#include <algorithm>

namespace permav {

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

Poly Poly::constant(const mpz_class& c) {
    Poly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

Poly Poly::x() { return Poly{0, 1}; }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& Poly::leading() const {
    if (c_.empty()) throw InvalidArgumentError("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < o.c_.size()) out.c_[i] += o.c_[i];
    }
    out.normalize();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    out.normalize();
    return out;
}

Poly Poly::operator*(const mpz_class& k) const {
    if (k == 0) return Poly();
    Poly out = *this;
    for (auto& v : out.c_) v *= k;
    return out;
}

mpz_class Poly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidArgumentError("polynomial division by zero");
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1, mpz_class(0));
    for (int d = a.degree(); d >= db; --d) {
        const std::size_t di = static_cast<std::size_t>(d);
        if (rem.size() <= di || rem[di] == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[di].get_mpz_t(),
                    b.leading().get_mpz_t());
        if (r != 0)
            throw InvalidArgumentError("polynomial division is not integral");
        quot[di - static_cast<std::size_t>(db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(d - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw InvalidArgumentError("polynomial division is not exact");
    return q;
}

mpz_class poly_content(const Poly& a) {
    mpz_class g = 0;
    for (const auto& v : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly poly_primitive_part(const Poly& a) {
    if (a.is_zero()) return a;
    mpz_class g = poly_content(a);
    std::vector<mpz_class> out;
    out.reserve(a.coeffs().size());
    for (const auto& v : a.coeffs()) out.push_back(v / g);
    return Poly(std::move(out));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b over Z[x].
Poly pseudo_rem(const Poly& a, const Poly& b) {
    Poly rem = a;
    const int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        std::vector<mpz_class> scaled(static_cast<std::size_t>(shift), mpz_class(0));
        for (const auto& v : b.coeffs()) scaled.push_back(v * rem.leading());
        rem = rem * b.leading() - Poly(std::move(scaled));
    }
    return rem;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        Poly g = poly_primitive_part(a.is_zero() ? b : a);
        mpz_class cont = gcd(poly_content(a), poly_content(b));
        if (g.leading() < 0) g = -g;
        return g * cont;
    }
    mpz_class cont = gcd(poly_content(a), poly_content(b));
    Poly u = poly_primitive_part(a);
    Poly v = poly_primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = pseudo_rem(u, v);
        u = std::move(v);
        v = poly_primitive_part(r);
    }
    if (u.leading() < 0) u = -u;
    return u * cont;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const mpz_class& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        mpz_class mag = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) {
                out += mag.get_str();
                out += "*";
            }
            out += "x";
            if (i > 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgumentError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || (!g.is_zero() && g.leading() != 1)) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    mpz_class cg = gcd(poly_content(num_), poly_content(den_));
    if (cg > 1) {
        num_ = poly_exact_div(num_, Poly::constant(cg));
        den_ = poly_exact_div(den_, Poly::constant(cg));
    }
    // sign: positive lowest nonzero denominator coefficient
    for (const auto& v : den_.coeffs()) {
        if (v == 0) continue;
        if (v < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        break;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::string to_string(const RationalFunction& f) {
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

std::string to_string(const Series& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(',');
        out += s[i].get_str();
    }
    return out;
}

Series series_from_gf(const RationalFunction& f, int n_max) {
    const Poly& den = f.den();
    if (den.coeff(0) == 0)
        throw InvalidArgumentError("denominator constant term is zero: not a power series");
    Series out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<mpq_class> a;
    const mpq_class d0(den.coeff(0));
    for (int n = 0; n <= n_max; ++n) {
        mpq_class acc(f.num().coeff(static_cast<std::size_t>(n)));
        for (int k = 1; k <= std::min(n, den.degree()); ++k)
            acc -= mpq_class(den.coeff(static_cast<std::size_t>(k))) * a[static_cast<std::size_t>(n - k)];
        acc /= d0;
        acc.canonicalize();
        a.push_back(acc);
        if (acc.get_den() != 1)
            throw InvalidArgumentError("series coefficient is not an integer");
        out.push_back(acc.get_num());
    }
    return out;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidArgumentError("determinant of a non-square matrix");
    if (n == 0) return Poly::constant(1);

    int sign = 1;
    Poly prev = Poly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // full pivoting on the lowest-degree nonzero entry
        std::size_t pr = n, pc = n;
        int best = -1;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (m[i][j].is_zero()) continue;
                if (best < 0 || m[i][j].degree() < best) {
                    best = m[i][j].degree();
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best < 0) return Poly();  // remaining block is zero
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = poly_exact_div(t, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace permav
