#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrees {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad ring, mismatched operands, invalid problem data.
class InputError : public Error {
 public:
  using Error::Error;
};

// Polynomial text that does not match the grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The Buchberger loop hit its critical-pair budget before finishing.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& msg, std::size_t basis_size, std::size_t pending_pairs)
      : Error(msg), basis_size_(basis_size), pending_pairs_(pending_pairs) {}

  std::size_t basis_size() const noexcept { return basis_size_; }
  std::size_t pending_pairs() const noexcept { return pending_pairs_; }

 private:
  std::size_t basis_size_;
  std::size_t pending_pairs_;
};

}  // namespace mrees
