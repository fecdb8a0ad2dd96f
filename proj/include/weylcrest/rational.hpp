/* Exact rational scalar type and its string form ("p/q"). */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcrest {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Weight in fundamental-weight coordinates c_i = lambda(h_i).
using Vec = std::vector<Rat>;
// Integer vector in simple-root coordinates.
using IVec = std::vector<long long>;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const Rat& r) {
    if (!is_integer(r)) throw std::logic_error("to_ll: value is not an integer");
    Int n = numerator(r);
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::logic_error("to_ll: value out of range");
    return static_cast<long long>(n);
}

// Least integer >= r.
inline long long ceil_ll(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) q += 1;
    return static_cast<long long>(q);
}

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

std::string vec_str(const Vec& v);

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace weylcrest
