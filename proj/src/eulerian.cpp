#include "qdilog/eulerian.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {
void check_range(long n, long m) {
    if (n < 1 || m < 0 || m > n - 1) {
        throw DomainError("eulerian: need n >= 1 and 0 <= m <= n-1");
    }
}
}  // namespace

Integer eulerian(long n, long m) {
    check_range(n, m);
    std::vector<Integer> row{Integer(1)};  // row n = 1
    for (long r = 2; r <= n; ++r) {
        std::vector<Integer> next(static_cast<std::size_t>(r));
        for (long k = 0; k < r; ++k) {
            Integer left = (k >= 1) ? row[static_cast<std::size_t>(k - 1)] * (r - k) : Integer(0);
            Integer right =
                (k <= r - 2) ? row[static_cast<std::size_t>(k)] * (k + 1) : Integer(0);
            next[static_cast<std::size_t>(k)] = left + right;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

Integer eulerian_by_sum(long n, long m) {
    check_range(n, m);
    Integer acc(0);
    for (long k = 0; k <= m; ++k) {
        Integer base(m + 1 - k);
        Integer p(1);
        for (long j = 0; j < n; ++j) p *= base;
        Integer term = binomial(n + 1, k) * p;
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace qdilog
