#ifndef BANDFORGE_ERRORS_HPP_
#define BANDFORGE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bandforge {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed braid word or partition text. \c position is a byte offset
  //! into the input.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  //! A strand index outside 1..n, or an operation on braids with different
  //! strand counts.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called outside its precondition (for example merging a
  //! generator that is not in the right complementary set).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! Super summit set enumeration ran past its element budget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::size_t budget, std::size_t partial)
        : Error("super summit set exceeds budget of " + std::to_string(budget)
                + " elements (" + std::to_string(partial)
                + " found before stopping)"),
          _budget(budget),
          _partial(partial) {}

    std::size_t budget() const noexcept {
      return _budget;
    }
    std::size_t partial_count() const noexcept {
      return _partial;
    }

   private:
    std::size_t _budget;
    std::size_t _partial;
  };

}  // namespace bandforge

#endif  // BANDFORGE_ERRORS_HPP_
