#pragma once

#include <stdexcept>
#include <string>

namespace hmix {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// Opposite arcs between one pair of vertices.
class DigonError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("graph is not connected") {}
};

/// A desk-scale guard (vertex count, cycle cap, census cap) was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

class InadmissibleGaugeError : public Error {
public:
    InadmissibleGaugeError(const std::string& what, int condition) : Error(what), condition_(condition) {}
    /// Which of the three partition conditions is violated (1, 2 or 3).
    int condition() const { return condition_; }

private:
    int condition_;
};

/// Internal inconsistency, e.g. a characteristic coefficient with a nonzero ω-part.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

} // namespace hmix
