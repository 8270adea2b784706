#include "perm321/catalan.hpp"

#include <algorithm>
#include <string>

#include "perm321/errors.hpp"

namespace perm321 {
namespace {

void require_at_least(int n, int lowest, const char* what) {
    if (n < lowest) {
        throw Error(ErrorKind::InvalidRange,
                    std::string(what) + " requires n >= " + std::to_string(lowest) + ", got " + std::to_string(n));
    }
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator, const char* what) {
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw Error(ErrorKind::NonIntegerResult, std::string(what) + ": division left remainder " +
                                                     remainder.str());
    }
    return quotient;
}

}  // namespace

BigInt binomial(int n, int k) {
    require_at_least(n, 0, "binomial");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    // After step i the running value is binom(n - k + i, i), always integral.
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt catalan(int n) {
    require_at_least(n, 0, "catalan");
    return exact_quotient(binomial(2 * n, n), BigInt(n + 1), "catalan");
}

std::vector<BigInt> catalan_table(int max_n) {
    require_at_least(max_n, 0, "catalan_table");
    std::vector<BigInt> table(static_cast<std::size_t>(max_n) + 1);
    table[0] = 1;
    for (std::size_t m = 1; m < table.size(); ++m) {
        BigInt sum = 0;
        // Symmetric convolution: pair i with m-1-i once and double.
        for (std::size_t i = 0; 2 * i + 1 < m; ++i) sum += table[i] * table[m - 1 - i];
        sum *= 2;
        if (m % 2 == 1) {
            const auto mid = (m - 1) / 2;
            sum += table[mid] * table[mid];
        }
        table[m] = std::move(sum);
    }
    return table;
}

BigInt noonan_closed(int n) {
    require_at_least(n, 1, "noonan_closed");
    return exact_quotient(3 * binomial(2 * n, n + 3), BigInt(n), "noonan_closed");
}

BigInt noonan_catalan_form(int n) {
    require_at_least(n, 1, "noonan_catalan_form");
    return catalan(n + 2) - 4 * catalan(n + 1) + 3 * catalan(n);
}

BigInt noonan_convolution(int n) {
    require_at_least(n, 1, "noonan_convolution");
    const auto table = catalan_table(n);
    return noonan_convolution(n, table);
}

BigInt noonan_convolution(int n, std::span<const BigInt> table) {
    require_at_least(n, 1, "noonan_convolution");
    if (table.size() < static_cast<std::size_t>(n) + 1) {
        throw Error(ErrorKind::InvalidRange, "noonan_convolution: Catalan table too short for n = " +
                                                 std::to_string(n));
    }
    BigInt sum = 0;
    for (int b = 2; b <= n - 1; ++b) {
        const auto ub = static_cast<std::size_t>(b);
        const auto rest = static_cast<std::size_t>(n - b);
        sum += (table[ub] - table[ub - 1]) * (table[rest + 1] - table[rest]);
    }
    return sum;
}

}  // namespace perm321
