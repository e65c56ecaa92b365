#ifndef BCA_ERRORS_HPP
#define BCA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bca {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Maxima, restrictions and menus are only defined on nonempty subsets.
class EmptySubset : public Error {
public:
  EmptySubset() : Error("operation requires a nonempty subset") {}
};

/// Two relations (or a relation and a candidate) live on different ground sets.
class GroundMismatch : public Error {
public:
  GroundMismatch() : Error("relations are defined on different ground sets") {}
};

/// A size guard rejected the input. `size` is the offending size and `limit`
/// the configured bound.
class TooLarge : public Error {
public:
  TooLarge(std::string what, std::size_t size, std::size_t limit)
      : Error(what + ": size " + std::to_string(size) + " exceeds limit " +
              std::to_string(limit)),
        size(size), limit(limit) {}

  std::size_t size;
  std::size_t limit;
};

class BadParameter : public Error {
public:
  using Error::Error;
};

/// A closed-form ordering was paired with a relation on another ground set.
class ParameterMismatch : public Error {
public:
  using Error::Error;
};

class EmptySequence : public Error {
public:
  EmptySequence() : Error("sequence must be nonempty") {}
};

/// Raised by to_total on a preorder with an incomparable pair.
class NotTotal : public Error {
public:
  NotTotal(std::size_t first, std::size_t second)
      : Error("relation is not total: elements " + std::to_string(first) +
              " and " + std::to_string(second) + " are incomparable"),
        first(first), second(second) {}

  std::size_t first;
  std::size_t second;
};

class NotACompletion : public Error {
public:
  NotACompletion() : Error("candidate is not a completion of the base relation") {}
};

/// One witness of a failed preorder check. For reflexivity failures all three
/// indices name the same element; for transitivity failures i ≿ j and j ≿ k
/// hold while i ≿ k does not.
struct Violation {
  enum class Kind { reflexivity, transitivity };

  Kind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k;

  friend bool operator==(const Violation &, const Violation &) = default;
};

using ViolationList = std::vector<Violation>;

class InvalidRelation : public Error {
public:
  explicit InvalidRelation(ViolationList violations)
      : Error("relation is not a preorder (" +
              std::to_string(violations.size()) + " violations)"),
        violations(std::move(violations)) {}

  ViolationList violations;
};

} // namespace bca

#endif
