#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfh {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PFH_ERROR(Name)                                                        \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

PFH_ERROR(EndpointCollision);
PFH_ERROR(NonPrimitiveVector);
PFH_ERROR(EndpointMismatch);
PFH_ERROR(SlopeOutsideInterval);
PFH_ERROR(OutsideDomain);
PFH_ERROR(TotalMismatch);
PFH_ERROR(DifferentialNotSquareZero);
PFH_ERROR(FiltrationViolated);
PFH_ERROR(NoCommonLiftTotal);

#undef PFH_ERROR

// Reduced fraction p/q with q > 0. Plain int64 arithmetic: every quantity in
// this project is a small lattice coordinate or a half-integer area.
struct Frac {
    long long p = 0;
    long long q = 1;

    Frac() = default;
    Frac(long long num, long long den);
    Frac(long long n) : p(n), q(1) {}  // NOLINT: implicit on purpose

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac operator-() const { return Frac(-p, q); }

    bool operator==(const Frac& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool operator<(const Frac& o) const { return p * o.q < o.p * q; }
    bool operator>(const Frac& o) const { return o < *this; }
    bool operator<=(const Frac& o) const { return !(o < *this); }
    bool operator>=(const Frac& o) const { return !(*this < o); }

    bool is_integer() const { return q == 1; }
    long long floor() const;
    long long ceil() const;

    std::string str() const;
};

// Rational endpoint shifted by an infinitesimal: value + eps_coeff * eps.
// Interval endpoints always carry eps_coeff in {-1,0,+1}; arithmetic against
// integers scales the coefficient linearly, which stays exact because every
// expression we ever compare is linear in the one shared eps. Ordering is
// lexicographic.
struct Bound {
    Frac value;
    long long eps = 0;

    Bound() = default;
    Bound(Frac v, long long e = 0) : value(v), eps(e) {}

    Bound operator+(const Bound& o) const { return {value + o.value, eps + o.eps}; }
    Bound operator-(const Bound& o) const { return {value - o.value, eps - o.eps}; }
    Bound operator-() const { return {-value, -eps}; }
    Bound scaled(long long k) const { return {value * Frac(k), eps * k}; }

    bool operator==(const Bound& o) const { return value == o.value && eps == o.eps; }
    bool operator!=(const Bound& o) const { return !(*this == o); }
    bool operator<(const Bound& o) const {
        return value < o.value || (value == o.value && eps < o.eps);
    }
    bool operator>(const Bound& o) const { return o < *this; }
    bool operator<=(const Bound& o) const { return !(o < *this); }
    bool operator>=(const Bound& o) const { return !(*this < o); }

    // smallest / largest integer n with n >= *this resp. n <= *this
    long long ceil() const;
    long long floor() const;

    std::string str() const;
};

inline bool operator<(const Frac& f, const Bound& b) { return Bound(f) < b; }
inline bool operator>(const Frac& f, const Bound& b) { return Bound(f) > b; }

// text form: <int>[/<int>][+eps|-eps], e.g. "3/2-eps", "0+eps", "-2/9-eps"
Frac parse_frac(const std::string& s);
Bound parse_bound(const std::string& s);

}  // namespace pfh
