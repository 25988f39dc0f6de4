#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dina {

// Binary vector packed into an integer: bit k-1 holds coordinate k.
using Mask = std::uint32_t;

// a dominates b coordinatewise (a >= b, the "succeq" partial order).
constexpr bool dominates(Mask a, Mask b) { return (a & b) == b; }

// All 2^dim binary vectors sorted by Hamming weight ascending, ties broken
// by lexicographic order of the support sets, so the weight-2 block runs
// e1+e2, e1+e3, ..., e1+en, e2+e3, ...  The first element is the zero
// vector, elements 2..dim+1 are e1..edim, the last is all ones.
struct CanonicalOrder {
  int dim = 0;
  std::vector<Mask> masks;            // size 2^dim
  std::vector<std::int32_t> position; // position[mask] = index into masks

  std::size_t size() const { return masks.size(); }
};

// dim <= 25; larger spaces are rejected rather than enumerated.
CanonicalOrder canonical_order(int dim);

// "101" denotes coordinates (1,0,1), i.e. the first character is coordinate 1.
std::string bit_string(Mask m, int dim);
Mask parse_bit_string(const std::string& text);  // ValidationError on bad input

std::vector<std::uint8_t> to_bits(Mask m, int dim);

}  // namespace dina
