#pragma once

#include <stdexcept>
#include <string>

namespace fitkernel {

// Base class of every error raised by the library. The CLI maps kind() to
// the "error" field of its failure report.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FITKERNEL_ERROR(Name, tag)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(tag, what) {}     \
  }

FITKERNEL_ERROR(DomainError, "domain_error");
FITKERNEL_ERROR(RingMismatch, "ring_mismatch");
FITKERNEL_ERROR(UnsupportedField, "unsupported_field");
FITKERNEL_ERROR(NotInCatalog, "not_in_catalog");
FITKERNEL_ERROR(SchemaError, "schema_error");
FITKERNEL_ERROR(NotContained, "not_contained");
FITKERNEL_ERROR(RankDeficient, "rank_deficient");
FITKERNEL_ERROR(NotCentral, "not_central");
FITKERNEL_ERROR(NotInvertible, "not_invertible");

#undef FITKERNEL_ERROR

}  // namespace fitkernel
