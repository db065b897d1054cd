#pragma once

#include <limits>

#include "polyneigh/errors.hpp"
#include "polyneigh/rational.hpp"

namespace polyneigh {

/// Combinatorial binomial coefficient: 0 whenever k < 0, n < 0 or k > n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= Integer(n - k + i);
        result /= Integer(i);
    }
    return result;
}

/// Narrowing with an overflow check; count formulas stay in exact integers
/// internally and only surface as long long.
inline long long to_count(const Integer& value, const char* what) {
    if (value > Integer(std::numeric_limits<long long>::max()) ||
        value < Integer(std::numeric_limits<long long>::min()))
        raise(ErrorKind::bad_range, std::string(what) + " exceeds the representable range");
    return static_cast<long long>(value);
}

} // namespace polyneigh
