#pragma once

#include "qdilog/ring.hpp"

namespace qdilog {

// Eulerian number A(n, m) (OEIS A008292 layout: rows n >= 1, 0 <= m <= n-1),
// by the two-term recursion A(n,m) = (n-m) A(n-1,m-1) + (m+1) A(n-1,m).
Integer eulerian(long n, long m);

// Same number by the alternating binomial sum
// A(n,m) = sum_{k=0}^m (-1)^k C(n+1,k) (m+1-k)^n; the independent route.
Integer eulerian_by_sum(long n, long m);

}  // namespace qdilog
