#ifndef ISORD_ERROR_HPP_
#define ISORD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace isord {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Elements of different groups were mixed.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its documented domain.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A group or subgroup failed validation while being built.
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  // The ordering has no minimal positive element.
  class NotDiscreteError : public Error {
   public:
    using Error::Error;
  };

  // Internal invariant of the comparison engine was violated.  Never expected
  // on a correctly built group; surfaced instead of returning a wrong answer.
  class EngineError : public Error {
   public:
    using Error::Error;
  };

  // Ball enumeration exceeded its size cap.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _message(msg),
          _line(line),
          _column(column) {}

    // The diagnostic without its location prefix.
    std::string const& message() const noexcept {
      return _message;
    }

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::string _message;
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace isord

#endif  // ISORD_ERROR_HPP_
