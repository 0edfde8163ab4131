#include "cyclotomic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace quintessa {

CycInt CycInt::zeta(int k)
{
    int e = k % 5;
    if (e < 0) e += 5;
    if (e == 4) return CycInt(-1, -1, -1, -1);
    CycInt z;
    z.c_[static_cast<size_t>(e)] = 1;
    return z;
}

CycInt& CycInt::operator+=(const CycInt& o)
{
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o)
{
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o)
{
    // convolve to exponent 6, then fold with zeta^5 = 1 and
    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3)
    std::array<Int, 7> e{};
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) e[i + j] += c_[i] * o.c_[j];
    }
    c_[0] = e[0] - e[4] + e[5];
    c_[1] = e[1] - e[4] + e[6];
    c_[2] = e[2] - e[4];
    c_[3] = e[3] - e[4];
    return *this;
}

CycInt CycInt::galois(int i) const
{
    int e = i % 5;
    if (e < 0) e += 5;
    if (e == 0) fail(errc::invalid_argument, "galois: exponent must be nonzero mod 5");
    std::array<Int, 5> acc{};
    for (int k = 0; k < 4; ++k) acc[static_cast<size_t>((k * e) % 5)] += c_[k];
    CycInt out;
    out.c_[0] = acc[0] - acc[4];
    out.c_[1] = acc[1] - acc[4];
    out.c_[2] = acc[2] - acc[4];
    out.c_[3] = acc[3] - acc[4];
    return out;
}

CycInt CycInt::conj_product() const
{
    return galois(2) * galois(3) * galois(4);
}

Int CycInt::norm() const
{
    CycInt full = *this * conj_product();
    if (!full.is_rational()) fail(errc::internal, "norm: conjugate product not rational");
    return full[0];
}

std::string CycInt::str() const
{
    std::ostringstream os;
    os << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3];
    return os.str();
}

CycInt CycInt::parse(const std::string& text)
{
    auto parse_int = [&](const std::string& s) -> Int {
        if (s.empty()) fail(errc::parse_error, "empty coordinate in '" + text + "'");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) fail(errc::parse_error, "bare sign in '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                fail(errc::parse_error, "bad coordinate '" + s + "' in '" + text + "'");
        return Int(s);
    };
    std::array<Int, 4> c{};
    size_t start = 0;
    int idx = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (idx >= 4) fail(errc::parse_error, "too many coordinates in '" + text + "'");
            c[static_cast<size_t>(idx++)] = parse_int(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (idx != 1 && idx != 4)
        fail(errc::parse_error, "expected 1 or 4 coordinates in '" + text + "'");
    return CycInt(c[0], c[1], c[2], c[3]);
}

std::ostream& operator<<(std::ostream& os, const CycInt& x)
{
    return os << x.str();
}

namespace {

Int round_nearest(const Int& num, const Int& den)
{
    // den > 0; ties away from zero
    Int two_num = 2 * num;
    Int q = two_num / (2 * den);  // truncation
    Int r = two_num - q * 2 * den;
    if (r >= den) ++q;
    if (-r >= den) --q;
    return q;
}

} // namespace

DivResult euclid_div(const CycInt& a, const CycInt& b)
{
    if (b.is_zero()) fail(errc::division_by_zero, "euclid_div: division by zero");
    CycInt num = a * b.conj_product();
    Int n = b.norm();
    CycInt q(round_nearest(num[0], n), round_nearest(num[1], n),
             round_nearest(num[2], n), round_nearest(num[3], n));
    CycInt r = a - q * b;
    if (r.norm() < n) return {q, r};
    for (int d0 = -1; d0 <= 1; ++d0)
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2)
                for (int d3 = -1; d3 <= 1; ++d3) {
                    CycInt qq = q + CycInt(d0, d1, d2, d3);
                    CycInt rr = a - qq * b;
                    if (rr.norm() < n) return {qq, rr};
                }
    fail(errc::internal, "euclid_div: no admissible quotient near " + q.str());
}

CycInt div_exact(const CycInt& a, const CycInt& b)
{
    if (b.is_zero()) fail(errc::division_by_zero, "div_exact: division by zero");
    CycInt num = a * b.conj_product();
    Int n = b.norm();
    std::array<Int, 4> c;
    for (int i = 0; i < 4; ++i) {
        if (num[i] % n != 0)
            fail(errc::invalid_argument, "div_exact: " + b.str() + " does not divide " + a.str());
        c[static_cast<size_t>(i)] = num[i] / n;
    }
    return CycInt(c[0], c[1], c[2], c[3]);
}

CycInt normalize_associate(const CycInt& x)
{
    if (x.is_zero()) return x;
    int e = x.eval_at_one();
    CycInt best;
    bool have = false;
    CycInt zx = x;
    for (int k = 0; k < 5; ++k) {
        for (CycInt cand : {zx, -zx}) {
            int ce = cand.eval_at_one();
            if (e != 0 && ce != 1 && ce != 2) continue;
            if (!have || cand < best) { best = cand; have = true; }
        }
        zx = zx * CycInt::zeta();
    }
    return best;
}

CycInt gcd(CycInt a, CycInt b)
{
    if (a.is_zero() && b.is_zero()) fail(errc::invalid_argument, "gcd(0,0) undefined");
    while (!b.is_zero()) {
        DivResult d = euclid_div(a, b);
        a = b;
        b = d.r;
    }
    return normalize_associate(a);
}

int v_lambda(CycInt x)
{
    if (x.is_zero()) fail(errc::invalid_argument, "v_lambda: x must be nonzero");
    int v = 0;
    while (x.eval_at_one() == 0) {
        x = div_exact(x, CycInt::lambda());
        ++v;
    }
    return v;
}

} // namespace quintessa
