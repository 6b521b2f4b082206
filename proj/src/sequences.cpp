#include "permsort/sequences.hpp"

#include "permsort/errors.hpp"

namespace permsort {

namespace {

void require_positive(unsigned n) {
    if (n == 0) throw DomainError("sequence index must be at least 1");
}

} // namespace

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    // Each partial product c * (n-k+j) / j is itself a binomial coefficient.
    for (unsigned j = 1; j <= k; ++j) c = exact_div(c * (n - k + j), j);
    return c;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("division by zero");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw ArithmeticError("inexact division in counting formula");
    return q;
}

BigInt catalan(unsigned n) {
    require_positive(n);
    return exact_div(binomial(2 * n, n), n + 1);
}

BigInt west_two_stack(unsigned n) {
    require_positive(n);
    return exact_div(2 * factorial(3 * n), factorial(n + 1) * factorial(2 * n + 1));
}

BigInt baxter(unsigned n) {
    require_positive(n);
    BigInt sum = 0;
    for (unsigned k = 1; k <= n; ++k) sum += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
    const BigInt den = BigInt(n) * (n + 1) * (n + 1);
    return exact_div(2 * sum, den);
}

BigInt named_sequence(std::string_view name, unsigned n) {
    if (name == "catalan") return catalan(n);
    if (name == "west") return west_two_stack(n);
    if (name == "baxter") return baxter(n);
    throw DomainError("unknown sequence '" + std::string(name) + "'");
}

} // namespace permsort
