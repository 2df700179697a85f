#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmod {

using Idx = int;

// Membership mask over the carrier of a module; index i <-> element i.
using Mask = std::vector<bool>;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A semilattice law failed; `law` is one of "NotIdempotent", "NotCommutative",
// "NotAssociative", "ZeroNotNeutral", and `witness` holds the offending elements.
class ValidationError : public Error {
public:
  ValidationError(std::string law_, std::vector<Idx> witness_, const std::string& what)
      : Error(what), law(std::move(law_)), witness(std::move(witness_)) {}
  std::string law;
  std::vector<Idx> witness;
};

class LimitExceeded : public Error {
public:
  explicit LimitExceeded(const std::string& what) : Error(what) {}
};

class DomainMismatch : public Error {
public:
  explicit DomainMismatch(const std::string& what) : Error(what) {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

class ElementInSubmodule : public Error {
public:
  explicit ElementInSubmodule(const std::string& what) : Error(what) {}
};

// Search caps for the enumeration routines.  `max_states` bounds the number of
// nodes visited by any single backtracking search.
struct SearchLimits {
  std::uint64_t max_states = 10'000'000;
};

inline std::vector<Idx> mask_to_list(const Mask& m) {
  std::vector<Idx> out;
  for (Idx i = 0; i < static_cast<Idx>(m.size()); ++i)
    if (m[i]) out.push_back(i);
  return out;
}

inline Mask list_to_mask(std::size_t n, const std::vector<Idx>& xs) {
  Mask m(n, false);
  for (Idx x : xs) m[static_cast<std::size_t>(x)] = true;
  return m;
}

inline std::size_t mask_count(const Mask& m) {
  std::size_t c = 0;
  for (bool b : m)
    if (b) ++c;
  return c;
}

// Canonical order on subsets: compare the bit strings b_0 b_1 ... b_{n-1}.
inline bool mask_less(const Mask& a, const Mask& b) { return a < b; }

}  // namespace bmod
