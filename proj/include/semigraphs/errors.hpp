#ifndef SEMIGRAPHS_ERRORS_HPP
#define SEMIGRAPHS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semigraphs {

// Base class for everything thrown by this library.
struct SemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Cayley table entry is not an element id below the order.
struct OutOfRangeEntry : SemigroupError {
  unsigned x, y;
  OutOfRangeEntry(unsigned x_, unsigned y_, unsigned value, unsigned order)
      : SemigroupError("table entry at (" + std::to_string(x_) + ", " +
                       std::to_string(y_) + ") is " + std::to_string(value) +
                       ", outside 0.." + std::to_string(order - 1)),
        x(x_), y(y_) {}
};

// The first triple (in lexicographic order) where (x*y)*z != x*(y*z).
struct NotAssociative : SemigroupError {
  unsigned x, y, z;
  NotAssociative(unsigned x_, unsigned y_, unsigned z_)
      : SemigroupError("not associative at triple (" + std::to_string(x_) +
                       ", " + std::to_string(y_) + ", " + std::to_string(z_) +
                       ")"),
        x(x_), y(y_), z(z_) {}
};

struct EmptyGeneratorSet : SemigroupError {
  EmptyGeneratorSet() : SemigroupError("generator set is empty") {}
};

// A subset claimed to be a subsemigroup is not product-closed.
struct NotClosed : SemigroupError {
  unsigned x, y, product;
  NotClosed(unsigned x_, unsigned y_, unsigned product_)
      : SemigroupError("subset not closed: " + std::to_string(x_) + " * " +
                       std::to_string(y_) + " = " + std::to_string(product_) +
                       " lies outside the subset"),
        x(x_), y(y_), product(product_) {}
};

struct NotIdempotent : SemigroupError {
  unsigned element_id;
  explicit NotIdempotent(unsigned e)
      : SemigroupError("element " + std::to_string(e) + " is not idempotent"),
        element_id(e) {}
};

struct InvalidParameters : SemigroupError {
  using SemigroupError::SemigroupError;
};

// Two graphs being compared were not built over the same semigroup.
struct SourceMismatch : SemigroupError {
  SourceMismatch() : SemigroupError("graphs do not share a source semigroup") {}
};

struct UnknownFormat : SemigroupError {
  explicit UnknownFormat(const std::string& format)
      : SemigroupError("unknown format \"" + format + "\"") {}
};

struct OrderTooLarge : SemigroupError {
  OrderTooLarge(unsigned n, unsigned max)
      : SemigroupError("order " + std::to_string(n) +
                       " outside the supported census range 1.." +
                       std::to_string(max)) {}
};

// Exhaustive subsemigroup enumeration was requested above the configured bound.
struct TooLargeForExhaustive : SemigroupError {
  unsigned order;
  TooLargeForExhaustive(unsigned n, unsigned long bound)
      : SemigroupError("order " + std::to_string(n) +
                       " exceeds the exhaustive-subsemigroup bound " +
                       std::to_string(bound)),
        order(n) {}
};

}  // namespace semigraphs

#endif  // SEMIGRAPHS_ERRORS_HPP
