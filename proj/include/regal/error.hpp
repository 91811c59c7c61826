#ifndef REGAL_ERROR_HPP
#define REGAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace regal {

// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing elements from different ring contexts.
class ContextError : public Error {
public:
    explicit ContextError(const std::string& msg) : Error(msg) {}
};

// Division by zero in a field.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Input outside the supported class (e.g. non-homogeneous ideal).
class UnsupportedInput : public Error {
public:
    explicit UnsupportedInput(const std::string& msg) : Error(msg) {}
};

// A presentation with a degree <= 1 generator; the variable must be eliminated first.
class PresentationNotMinimal : public Error {
public:
    explicit PresentationNotMinimal(const std::string& msg) : Error(msg) {}
};

// The ideal is the unit ideal, so the presented ring is zero.
class ZeroRingError : public Error {
public:
    explicit ZeroRingError(const std::string& msg) : Error(msg) {}
};

// A bounded search (e.g. for a nonzerodivisor) ran out of attempts.
class SearchExhausted : public Error {
public:
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

// A window/truncation parameter is too small for the requested computation.
class TruncationError : public Error {
public:
    TruncationError(const std::string& msg, int needed_window, int needed_degree)
        : Error(msg), needed_window(needed_window), needed_degree(needed_degree) {}
    int needed_window;
    int needed_degree;
};

// Two routes that must agree disagreed; a bug or a truncation failure.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

// Text input could not be parsed; positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class ExponentOverflow : public Error {
public:
    explicit ExponentOverflow(const std::string& msg) : Error(msg) {}
};

} // namespace regal

#endif
