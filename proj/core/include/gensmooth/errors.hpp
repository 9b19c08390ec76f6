#pragma once

#include <stdexcept>
#include <string>

namespace gensmooth {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
 public:
  EstimationError(const std::string& what, double point)
      : std::runtime_error(what), point_(point) {}
  double point() const { return point_; }

 private:
  double point_;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, int line, const std::string& what)
      : std::runtime_error(format(field, line, what)), field_(field), line_(line), message_(what) {}
  const std::string& field() const { return field_; }
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(const std::string& field, int line, const std::string& what) {
    std::string s;
    if (line > 0) s += "line " + std::to_string(line) + ": ";
    if (!field.empty()) s += field + ": ";
    return s + what;
  }
  std::string field_;
  int line_;
  std::string message_;
};

// Raised when a Monte Carlo estimate cannot be trusted (non-finite variance).
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gensmooth
