#ifndef SYMPOW_COMMON_HPP
#define SYMPOW_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympow {

// Generator explosion guard: operations whose intermediate generator count
// would exceed the cap abort with resource_error instead of thrashing.
inline constexpr std::size_t kDefaultGeneratorCap = 200000;

// Hull/LP scale caps: desk scale, exact arithmetic.
inline constexpr int kMaxAmbientVars = 12;
inline constexpr int kMaxGenerators = 64;

class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A verified-precondition failure: the requested bound/certificate does not
// apply because its containment hypothesis is false. Carries the witness.
class hypothesis_error : public std::runtime_error {
public:
  hypothesis_error(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace sympow

#endif
