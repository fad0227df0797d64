#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

using Int = mpz_class;

// Power series with exact integer coefficients, truncated at a fixed
// degree; coeffs[d] is the degree-d coefficient.
struct IntSeries {
    std::vector<Int> coeffs;

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    static IntSeries one(int truncation);
    bool operator==(const IntSeries&) const = default;
};

IntSeries from_dims(const std::vector<int64_t>& dims);
// zero-padded or cut to the new truncation degree
IntSeries resized(const IntSeries& a, int truncation);
// a(-z)
IntSeries alternate(const IntSeries& a);

// Cauchy product; both operands must have the same truncation.
IntSeries mul_trunc(const IntSeries& a, const IntSeries& b);
// Multiplicative inverse; requires constant term 1 (so the result stays
// integral).
IntSeries invert_trunc(const IntSeries& a);

// hA(z) * hDual(-z) = 1 up to the common truncation; a necessary numeric
// consequence of Koszulity.  Requires equal truncations.
bool koszul_numeric_check(const IntSeries& hA, const IntSeries& hDual);

struct PalindromeReport {
    bool is_palindrome;
    bool inequalities_hold;
};
// Compares p_t with p_{n-t}: palindrome means equality for every t, the
// inequality check asks p_t >= p_{n-t} for all t <= n/2.  Coefficients
// beyond the truncation are read as zero; requires truncation <= n.
PalindromeReport palindrome_report(const IntSeries& p, int n);

// Largest degree with a nonzero coefficient; throws on the zero series.
int global_dimension(const IntSeries& p);

// "1 + 5z + 5z^2 + z^3"
std::string render_series(const IntSeries& s);

}  // namespace koszul
