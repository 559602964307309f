#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wreathgen/numeric.hpp"

namespace wreathgen {

// Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, reduced modulo the
// N-th cyclotomic polynomial.  Fields are interned per N so elements can
// carry a plain pointer and mixed-field operations are cheap to detect.
class CyclotomicField {
public:
    static const CyclotomicField& get(int n);

    int modulus() const { return n_; }
    int degree() const { return degree_; }
    // x^k reduced mod Phi_N, for 0 <= k < max(2*degree - 1, N).
    const std::vector<Rat>& power_reduction(int k) const { return reductions_.at(static_cast<size_t>(k)); }
    const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }

private:
    explicit CyclotomicField(int n);

    int n_;
    int degree_;
    std::vector<Int> phi_;                       // monic, degree_ + 1 coefficients
    std::vector<std::vector<Rat>> reductions_;   // x^k mod Phi_N
};

class Cyclotomic {
public:
    Cyclotomic() : field_(&CyclotomicField::get(1)), coeffs_(1, Rat(0)) {}
    Cyclotomic(const Rat& value, const CyclotomicField& field);
    // zeta_N^k
    static Cyclotomic zeta_power(int k, const CyclotomicField& field);
    // arbitrary-degree polynomial in zeta, reduced
    static Cyclotomic from_polynomial(const std::vector<Rat>& poly, const CyclotomicField& field);

    const CyclotomicField& field() const { return *field_; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator*(const Rat& r) const;
    Cyclotomic operator/(const Rat& r) const;

    bool operator==(const Cyclotomic& o) const;
    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws unless is_rational()

    Cyclotomic complex_conjugate() const;

    std::string str() const;  // "1 - z^2" style

private:
    const CyclotomicField* field_;
    std::vector<Rat> coeffs_;  // length = field degree

    void check_same_field(const Cyclotomic& o) const;
};

// Parses integer-coefficient combinations of z^k: "1", "-1", "z", "2*z^3",
// "z^1 - z^2", "2 + z^3".  Throws Error("bad-cyclotomic", ...) on garbage.
Cyclotomic parse_cyclotomic(const std::string& s, const CyclotomicField& field);

}  // namespace wreathgen
