#include "koszul/series.hpp"

#include <stdexcept>

namespace koszul {

IntSeries IntSeries::one(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    IntSeries s;
    s.coeffs.assign(static_cast<size_t>(truncation) + 1, Int(0));
    s.coeffs[0] = 1;
    return s;
}

IntSeries from_dims(const std::vector<int64_t>& dims) {
    IntSeries s;
    s.coeffs.reserve(dims.size());
    for (int64_t d : dims) s.coeffs.emplace_back(d);
    return s;
}

IntSeries resized(const IntSeries& a, int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    IntSeries s = a;
    s.coeffs.resize(static_cast<size_t>(truncation) + 1, Int(0));
    return s;
}

IntSeries alternate(const IntSeries& a) {
    IntSeries s = a;
    for (size_t d = 1; d < s.coeffs.size(); d += 2) s.coeffs[d] = -s.coeffs[d];
    return s;
}

IntSeries mul_trunc(const IntSeries& a, const IntSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("mul_trunc: truncation mismatch");
    IntSeries s;
    s.coeffs.assign(a.coeffs.size(), Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < b.coeffs.size(); ++j)
            s.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return s;
}

IntSeries invert_trunc(const IntSeries& a) {
    if (a.coeffs.empty() || a.coeffs[0] != 1)
        throw std::invalid_argument("invert_trunc: constant term must be 1");
    IntSeries s;
    s.coeffs.assign(a.coeffs.size(), Int(0));
    s.coeffs[0] = 1;
    for (size_t d = 1; d < a.coeffs.size(); ++d) {
        Int acc = 0;
        for (size_t i = 1; i <= d; ++i) acc += a.coeffs[i] * s.coeffs[d - i];
        s.coeffs[d] = -acc;
    }
    return s;
}

bool koszul_numeric_check(const IntSeries& hA, const IntSeries& hDual) {
    if (hA.truncation() != hDual.truncation())
        throw std::invalid_argument("koszul_numeric_check: truncation mismatch");
    return mul_trunc(hA, alternate(hDual)) == IntSeries::one(hA.truncation());
}

PalindromeReport palindrome_report(const IntSeries& p, int n) {
    if (n < 0) throw std::invalid_argument("palindrome_report: negative degree");
    if (p.truncation() > n)
        throw std::invalid_argument("palindrome_report: series exceeds degree");
    auto at = [&](int d) -> Int {
        if (d > p.truncation()) return Int(0);
        return p.coeffs[static_cast<size_t>(d)];
    };
    PalindromeReport rep{true, true};
    for (int t = 0; 2 * t <= n; ++t) {
        if (at(t) != at(n - t)) rep.is_palindrome = false;
        if (at(t) < at(n - t)) rep.inequalities_hold = false;
    }
    return rep;
}

int global_dimension(const IntSeries& p) {
    for (int d = p.truncation(); d >= 0; --d)
        if (p.coeffs[static_cast<size_t>(d)] != 0) return d;
    throw std::domain_error("global_dimension: zero series");
}

std::string render_series(const IntSeries& s) {
    std::string out;
    for (int d = 0; d <= s.truncation(); ++d) {
        const Int& c = s.coeffs[static_cast<size_t>(d)];
        if (c == 0) continue;
        Int mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (d == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += "z";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace koszul
