#include "hypell/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hypell {

Real rat_to_real(const Rat& q) {
    Real num(q.get_num().get_str());
    Real den(q.get_den().get_str());
    return num / den;
}

std::optional<Rat> rationalize(const Real& x, const Int& max_den, const Real& tol) {
    Real v = x;
    Int p0 = 0, p1 = 1, q0 = 1, q1 = 0;  // convergents
    for (int iter = 0; iter < 80; ++iter) {
        Real fl = floor(v);
        if (fl > Real("1e30") || fl < Real("-1e30")) return std::nullopt;
        Int a(static_cast<long>(fl));
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; p1 = p2;
        q0 = q1; q1 = q2;
        Real frac = v - fl;
        if (frac < pow(Real(10), -static_cast<int>(working_digits()) + 8)) break;
        v = Real(1) / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rat cand = make_rat(p1, q1);
    if (abs(Real(rat_to_real(cand) - x)) <= tol * (Real(1) + abs(x))) return cand;
    return std::nullopt;
}

Rat decimal_to_rat(const std::string& s) {
    // [sign] digits [. digits] [e exp]
    std::string t = s;
    if (t.empty()) throw BadInputError("empty number literal");
    bool neg = false;
    size_t pos = 0;
    if (t[pos] == '+' || t[pos] == '-') {
        neg = t[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;  // value = digits * 10^scale
    bool seen_dot = false, seen_digit = false;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) --scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            scale += std::stol(t.substr(pos + 1));
            break;
        } else {
            throw BadInputError("bad number literal: " + s);
        }
    }
    if (!seen_digit) throw BadInputError("bad number literal: " + s);
    Int mant(digits.empty() ? std::string("0") : digits, 10);
    if (neg) mant = -mant;
    Int p10 = 1;
    for (long i = 0; i < std::labs(scale); ++i) p10 *= 10;
    return scale >= 0 ? Rat(mant * p10) : make_rat(mant, p10);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash), 10);
        Int den(s.substr(slash + 1), 10);
        return make_rat(num, den);
    }
    return decimal_to_rat(s);
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Real parse_real(const std::string& s) {
    // go through the exact rational so "0.1" parses identically at any precision
    return rat_to_real(parse_rat(s));
}

std::string real_to_string(const Real& x, int digits) {
    if (digits < 0) digits = static_cast<int>(working_digits());
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

}  // namespace hypell
