// Exact arbitrary-precision scalars and lattice vectors.
//
// All arithmetic in this project is exact: integers are GMP mpz, rationals
// are GMP mpq kept in lowest terms with positive denominator (mpq_class
// canonicalizes on construction and after every operation).

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec operator-(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec operator*(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/// gcd of the absolute values of all entries; 0 for the zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// v divided by the gcd of its entries: the shortest integer vector on
/// the ray through v. The zero vector has no primitive representative.
inline IntVec primitive_vector(const IntVec& v) {
    Int g = content(v);
    if (g == 0)
        throw std::invalid_argument("zero has no primitive representative");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline Int int_from(long x) { return Int(x); }

inline IntVec intvec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVec ratvec(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace toric
