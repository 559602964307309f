#include "wreathgen/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "wreathgen/error.hpp"

namespace wreathgen {

namespace {

// Quotient of integer polynomial division a / b for monic b (exact in our use:
// x^n - 1 divided by a product of cyclotomic polynomials).
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Int(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        Int c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
    }
    for (const Int& c : a)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
std::vector<Int> compute_cyclotomic_polynomial(int n) {
    std::vector<std::vector<Int>> phi(static_cast<size_t>(n) + 1);
    phi[1] = {Int(-1), Int(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> num(static_cast<size_t>(m) + 1, Int(0));
        num[0] = -1;
        num[static_cast<size_t>(m)] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), phi[static_cast<size_t>(d)]);
        phi[static_cast<size_t>(m)] = std::move(num);
    }
    return phi[static_cast<size_t>(n)];
}

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n) {
    if (n < 1) throw Error("bad-field", "cyclotomic modulus must be positive");
    phi_ = compute_cyclotomic_polynomial(n);
    degree_ = static_cast<int>(phi_.size()) - 1;
    // x^k mod Phi: x^k for k < degree; above that, x^k = x * x^{k-1} reduced.
    // Table covers both product exponents (< 2*degree - 1) and exponents < n
    // left over after folding zeta^n = 1.
    int needed = std::max(2 * degree_ - 1, n);
    if (needed < 1) needed = 1;
    reductions_.resize(static_cast<size_t>(needed));
    for (int k = 0; k < needed; ++k) {
        std::vector<Rat>& red = reductions_[static_cast<size_t>(k)];
        red.assign(static_cast<size_t>(degree_), Rat(0));
        if (k < degree_) {
            red[static_cast<size_t>(k)] = 1;
        } else {
            const std::vector<Rat>& prev = reductions_[static_cast<size_t>(k - 1)];
            // multiply by x, then fold the overflow of x^degree via Phi
            std::vector<Rat> shifted(static_cast<size_t>(degree_) + 1, Rat(0));
            for (int i = 0; i < degree_; ++i) shifted[static_cast<size_t>(i + 1)] = prev[static_cast<size_t>(i)];
            Rat top = shifted[static_cast<size_t>(degree_)];
            for (int i = 0; i < degree_; ++i)
                red[static_cast<size_t>(i)] = shifted[static_cast<size_t>(i)] - top * Rat(phi_[static_cast<size_t>(i)]);
        }
    }
}

const CyclotomicField& CyclotomicField::get(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(n);
    if (it == registry.end())
        it = registry.emplace(n, std::unique_ptr<CyclotomicField>(new CyclotomicField(n))).first;
    return *it->second;
}

Cyclotomic::Cyclotomic(const Rat& value, const CyclotomicField& field)
    : field_(&field), coeffs_(static_cast<size_t>(field.degree()), Rat(0)) {
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(int k, const CyclotomicField& field) {
    int n = field.modulus();
    k = ((k % n) + n) % n;
    std::vector<Rat> poly(static_cast<size_t>(k) + 1, Rat(0));
    poly[static_cast<size_t>(k)] = 1;
    return from_polynomial(poly, field);
}

Cyclotomic Cyclotomic::from_polynomial(const std::vector<Rat>& poly, const CyclotomicField& field) {
    Cyclotomic out(Rat(0), field);
    const int deg = field.degree();
    for (int k = 0; k < static_cast<int>(poly.size()); ++k) {
        const Rat& c = poly[static_cast<size_t>(k)];
        if (c == 0) continue;
        int e = k;
        // fold exponents beyond the reduction table via zeta^N = 1
        if (e >= std::max(2 * deg - 1, field.modulus())) e %= field.modulus();
        const std::vector<Rat>& red = field.power_reduction(e);
        for (int i = 0; i < deg; ++i) out.coeffs_[static_cast<size_t>(i)] += c * red[static_cast<size_t>(i)];
    }
    return out;
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
    if (field_ != o.field_)
        throw Error("field-mismatch", "operands live in Q(zeta_" + std::to_string(field_->modulus()) +
                                          ") and Q(zeta_" + std::to_string(o.field_->modulus()) + ")");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same_field(o);
    Cyclotomic out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    check_same_field(o);
    Cyclotomic out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same_field(o);
    const int deg = field_->degree();
    std::vector<Rat> prod(static_cast<size_t>(2 * deg - 1), Rat(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (o.coeffs_[static_cast<size_t>(j)] == 0) continue;
            prod[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
        }
    }
    return from_polynomial(prod, *field_);
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
}

Cyclotomic Cyclotomic::operator/(const Rat& r) const {
    if (r == 0) throw Error("division-by-zero", "cyclotomic scalar division by zero");
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c /= r;
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    check_same_field(o);
    return coeffs_ == o.coeffs_;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational() const {
    if (!is_rational()) throw Error("not-rational", "cyclotomic value " + str() + " is irrational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::complex_conjugate() const {
    // zeta^j -> zeta^{N-j}
    const int n = field_->modulus();
    Cyclotomic out(Rat(0), *field_);
    for (int j = 0; j < field_->degree(); ++j) {
        if (coeffs_[static_cast<size_t>(j)] == 0) continue;
        out += zeta_power((n - j) % n, *field_) * coeffs_[static_cast<size_t>(j)];
    }
    return out;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

Cyclotomic parse_cyclotomic(const std::string& s, const CyclotomicField& field) {
    Cyclotomic out(Rat(0), field);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    bool any = false;
    skip_ws();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw Error("bad-cyclotomic", "expected '+' or '-' in '" + s + "'");
        }
        Int coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coef = Int(s.substr(i, j - i));
            i = j;
            have_coef = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int power = 0;
        bool have_z = false;
        if (i < s.size() && (s[i] == 'z' || s[i] == 'Z')) {
            have_z = true;
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw Error("bad-cyclotomic", "missing exponent in '" + s + "'");
                power = std::stoi(s.substr(i, j - i));
                i = j;
            }
        }
        if (!have_coef && !have_z)
            throw Error("bad-cyclotomic", "cannot parse term in '" + s + "'");
        Cyclotomic term = have_z ? Cyclotomic::zeta_power(power, field) : Cyclotomic(Rat(1), field);
        out += term * Rat(sign * coef);
        any = true;
        skip_ws();
    }
    if (!any) throw Error("bad-cyclotomic", "empty cyclotomic value");
    return out;
}

}  // namespace wreathgen
