#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Floor of a rational as an integer.
inline Int floor_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

// Representative of r modulo 1 in [0, 1).
inline Rat mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

inline QVec mod1(const QVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = mod1(v[i]);
    return out;
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Parses "p" or "p/q" with optional leading minus. Rejects zero denominators.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) fail("ParseError", "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) fail("ParseError", "zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("ParseError", "bad rational literal '" + s + "'");
    }
}

inline Int parse_integer(const std::string& s) {
    Rat r = parse_rational(s);
    if (!is_integer(r)) fail("ParseError", "expected integer, got '" + s + "'");
    return num(r);
}

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) fail("DimensionMismatch", "dot product of unequal lengths");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) fail("DimensionMismatch", "dot product of unequal lengths");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec to_rational(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline IVec primitive(IVec v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
    return v;
}

// Scales a rational vector to the primitive integer vector on the same ray.
inline IVec primitive(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, den(x));
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i] * Rat(l));
    return primitive(std::move(w));
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const Rat& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace toric
