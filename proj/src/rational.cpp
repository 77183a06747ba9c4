#include "pfh/rational.hpp"

#include <numeric>

namespace pfh {

Frac::Frac(long long num, long long den) : p(num), q(den) {
    if (q == 0) throw Error("division by zero");
    if (q < 0) { p = -p; q = -q; }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
}

Frac Frac::operator+(const Frac& o) const { return Frac(p * o.q + o.p * q, q * o.q); }
Frac Frac::operator-(const Frac& o) const { return Frac(p * o.q - o.p * q, q * o.q); }
Frac Frac::operator*(const Frac& o) const { return Frac(p * o.p, q * o.q); }
Frac Frac::operator/(const Frac& o) const {
    if (o.p == 0) throw Error("division by zero");
    return Frac(p * o.q, q * o.p);
}

long long Frac::floor() const {
    long long d = p / q;
    if (p % q != 0 && p < 0) --d;
    return d;
}

long long Frac::ceil() const { return -Frac(-p, q).floor(); }

std::string Frac::str() const {
    std::string s = std::to_string(p);
    if (q != 1) s += "/" + std::to_string(q);
    return s;
}

long long Bound::ceil() const {
    if (value.is_integer()) return eps <= 0 ? value.p : value.p + 1;
    return value.ceil();
}

long long Bound::floor() const {
    if (value.is_integer()) return eps >= 0 ? value.p : value.p - 1;
    return value.floor();
}

std::string Bound::str() const {
    std::string s = value.str();
    if (eps > 0) s += "+eps";
    if (eps < 0) s += "-eps";
    if (eps > 1 || eps < -1) s += "*" + std::to_string(eps < 0 ? -eps : eps);
    return s;
}

Frac parse_frac(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Frac(std::stoll(s), 1);
        return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error("bad fraction: " + s);
    }
}

Bound parse_bound(const std::string& s) {
    long long eps = 0;
    std::string body = s;
    auto ends_with = [&](const char* suf) {
        std::string t(suf);
        return body.size() > t.size() && body.compare(body.size() - t.size(), t.size(), t) == 0;
    };
    if (ends_with("+eps")) { eps = 1; body = body.substr(0, body.size() - 4); }
    else if (ends_with("-eps")) { eps = -1; body = body.substr(0, body.size() - 4); }
    return Bound(parse_frac(body), eps);
}

}  // namespace pfh
