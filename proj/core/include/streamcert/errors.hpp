#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "streamcert/types.hpp"

namespace streamcert {

// Malformed arguments: node ids out of range, bad parameters.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exact computation was asked to run beyond its size limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoverageError : public std::runtime_error {
 public:
  CoverageError(Node missing, const std::string& message)
      : std::runtime_error(message), missing_(missing) {}
  Node missing() const noexcept { return missing_; }

 private:
  Node missing_;
};

class StreamIntegrityError : public std::runtime_error {
 public:
  StreamIntegrityError(std::size_t position, const std::string& message)
      : std::runtime_error("update " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class BudgetViolation : public std::runtime_error {
 public:
  BudgetViolation(std::string consumer, std::int64_t words, std::int64_t budget)
      : std::runtime_error("consumer '" + consumer + "' holds " + std::to_string(words) +
                           " words, budget " + std::to_string(budget)),
        consumer_(std::move(consumer)), words_(words), budget_(budget) {}
  const std::string& consumer() const noexcept { return consumer_; }
  std::int64_t words() const noexcept { return words_; }
  std::int64_t budget() const noexcept { return budget_; }

 private:
  std::string consumer_;
  std::int64_t words_;
  std::int64_t budget_;
};

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(Node node, int cut, const std::string& message)
      : std::runtime_error(message), node_(node), cut_(cut) {}
  Node node() const noexcept { return node_; }
  int cut() const noexcept { return cut_; }

 private:
  Node node_;
  int cut_;
};

class PromiseViolation : public std::runtime_error {
 public:
  PromiseViolation(int round, Node node, const std::string& message)
      : std::runtime_error(message), round_(round), node_(node) {}
  int round() const noexcept { return round_; }
  Node node() const noexcept { return node_; }

 private:
  int round_;
  Node node_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ProtocolViolation : public std::runtime_error {
 public:
  ProtocolViolation(Node node, int round, int bits, const std::string& message)
      : std::runtime_error(message), node_(node), round_(round), bits_(bits) {}
  Node node() const noexcept { return node_; }
  int round() const noexcept { return round_; }
  int bits() const noexcept { return bits_; }

 private:
  Node node_;
  int round_;
  int bits_;
};

}  // namespace streamcert
