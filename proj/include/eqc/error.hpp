#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eqc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown group family or invalid size parameter.
class GroupError : public Error {
 public:
  using Error::Error;
};

// Inclusion kind not applicable to the given factor pair.
class InclusionError : public Error {
 public:
  using Error::Error;
};

// Ill-formed ring, polynomial or ring map.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// pi1 o rho_minus != pi2 o rho_plus.
class IncompatibleSetup : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class HsopError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }
  std::vector<std::string> problems_;
};

}  // namespace eqc
