#pragma once

#include <stdexcept>
#include <string>

namespace dehnkit {

// Base of every exception thrown by the library. The CLI maps these to exit
// code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class InH : public Error {
 public:
  InH() : Error("word lies in the amalgamated subgroup H") {}
};

class IdentityRelator : public Error {
 public:
  IdentityRelator() : Error("relator is the identity") {}
};

class UncertifiedSet : public Error {
 public:
  UncertifiedSet() : Error("relator set lacks a C'(1/10) certificate") {}
};

class CapTooSmall : public Error {
 public:
  explicit CapTooSmall(unsigned cap)
      : Error("relator cap " + std::to_string(cap) + " is below 2") {}
};

class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(std::string name)
      : Error("hypothesis failed: " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class CountTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace dehnkit
