#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quatrefine {

// Bad user input; the CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity or table check failed; the CLI maps this to exit code 2.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den = 1);
std::string to_string(const Int& x);
// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rat& x);
Rat parse_rat(const std::string& s);

Int floor_div(const Int& a, const Int& b);
Int mod(const Int& a, const Int& m);  // result in [0, |m|)
Int isqrt(const Int& n);
bool is_square(const Int& n);
// Rational square root when it exists.
bool rat_sqrt(const Rat& q, Rat& out);
Int round_rat(const Rat& q);  // nearest integer, ties toward +inf
Int floor_rat(const Rat& q);

// g = gcd(a,b) = x*a + y*b with g >= 0.
Int gcdext(const Int& a, const Int& b, Int& x, Int& y);
Int inv_mod(const Int& a, const Int& m);
// Residue of a rational with denominator prime to m.
Int rat_mod(const Rat& q, const Int& m);

int kronecker(const Int& a, const Int& n);
bool is_prime(const Int& n);
bool is_squarefree(const Int& n);
// Trial-division factorisation of |n|, n != 0.
std::vector<std::pair<Int, int>> factor(const Int& n);
std::vector<Int> prime_divisors(const Int& n);
int valuation(const Int& n, const Int& p);
int valuation(const Rat& q, const Int& p);
Int pow_int(const Int& b, unsigned long e);

// Field discriminant of Q(sqrt(m)) after removing square factors.
Int squarefree_part(const Int& m);
Int fundamental_disc(const Int& m);

std::uint64_t env_budget(std::uint64_t fallback);

}  // namespace quatrefine
