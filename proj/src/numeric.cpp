#include "spindec/numeric.hpp"

namespace spindec {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

BigInt pow2(int e) {
    BigInt p = 1;
    return p << e;
}

int val2(long long n) {
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

} // namespace spindec
