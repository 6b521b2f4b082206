#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace permsort {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Quotient of an exact division; throws ArithmeticError on a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

// C(2n, n) / (n+1).
BigInt catalan(unsigned n);
// 2 (3n)! / ((n+1)! (2n+1)!), the two-stack-sortable count.
BigInt west_two_stack(unsigned n);
// 2 / (n (n+1)^2) * sum_{k=1..n} C(n+1,k-1) C(n+1,k) C(n+1,k+1).
BigInt baxter(unsigned n);

// "catalan", "west" or "baxter"; DomainError otherwise.
BigInt named_sequence(std::string_view name, unsigned n);

} // namespace permsort
