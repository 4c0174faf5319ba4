#pragma once

#include "braidpbw/scalar.hpp"

#include <optional>
#include <string_view>

namespace braidpbw {

/// Parse a scalar literal: integers, q, + - * / ^ (integer exponents, possibly
/// negative or parenthesized) and parentheses. In Q and GF(p) the symbol q is rejected.
/// Errors carry the 1-based column inside the literal.
Scalar parse_scalar(std::string_view text, FieldSpec field);

/// Gaussian binomial [r choose i] at parameter gamma, by the Pascal-type
/// recursion [r,i] = [r-1,i-1] + gamma^i [r-1,i]. Throws DomainError if i > r.
Scalar gauss_binomial(unsigned r, unsigned i, const Scalar& gamma);

/// q-integer [h]_gamma = 1 + gamma + ... + gamma^(h-1).
Scalar q_integer(unsigned h, const Scalar& gamma);

/// Multiplicative order of s if s is a root of unity, else nullopt.
/// Throws DomainError for s = 0.
std::optional<unsigned long> unity_order(const Scalar& s);

} // namespace braidpbw
