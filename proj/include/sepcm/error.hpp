#pragma once

#include <stdexcept>
#include <string>

namespace sepcm {

// Every failure mode named by a module contract maps to one kind.
enum class ErrorKind {
  CompositeP,
  SizeCap,
  NoSuchRoot,
  IncompatibleFields,
  SyntaxError,
  UnknownVariable,
  DimensionMismatch,
  ExponentOverflow,
  DegreeCapExceeded,
  OrderMismatch,
  ZeroDivisorQuery,
  CapExceeded,
  SingularGenerator,
  NotNormal,
  QuotientNotElementaryAbelian,
  SigmaInN,
  NotInvariant,
  NotSubgroup,
  InvalidCocycle,
  TrivialClass,
  NotHomogeneous,
  NotHsop,
  NontrivialityNotCertified,
  NotAnnihilating,
  NotPhsop,
  ParseError,
  Timeout,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::CompositeP: return "CompositeP";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ZeroDivisorQuery: return "ZeroDivisorQuery";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::QuotientNotElementaryAbelian: return "QuotientNotElementaryAbelian";
    case ErrorKind::SigmaInN: return "SigmaInN";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::TrivialClass: return "TrivialClass";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotHsop: return "NotHsop";
    case ErrorKind::NontrivialityNotCertified: return "NontrivialityNotCertified";
    case ErrorKind::NotAnnihilating: return "NotAnnihilating";
    case ErrorKind::NotPhsop: return "NotPhsop";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void check(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace sepcm
