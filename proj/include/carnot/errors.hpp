#pragma once

#include <stdexcept>
#include <string>

namespace carnot {

/// Base error; `code()` is a stable machine-readable tag used by the CLI.
class CarnotError : public std::runtime_error {
 public:
  CarnotError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define CARNOT_DEFINE_ERROR(Name)                                        \
  class Name : public CarnotError {                                      \
   public:                                                               \
    explicit Name(const std::string& what) : CarnotError(#Name, what) {} \
  }

CARNOT_DEFINE_ERROR(SkewViolation);
CARNOT_DEFINE_ERROR(DependentMatrices);
CARNOT_DEFINE_ERROR(BadDimension);
CARNOT_DEFINE_ERROR(DimensionMismatch);
CARNOT_DEFINE_ERROR(IndexOutOfRange);
CARNOT_DEFINE_ERROR(OriginSingular);
CARNOT_DEFINE_ERROR(ZeroHorizontal);
CARNOT_DEFINE_ERROR(AdaptationFailed);
CARNOT_DEFINE_ERROR(TailNotConverged);
CARNOT_DEFINE_ERROR(SupportViolation);
CARNOT_DEFINE_ERROR(DegenerateFunction);
CARNOT_DEFINE_ERROR(Infeasible);
CARNOT_DEFINE_ERROR(EmptySupportSample);
CARNOT_DEFINE_ERROR(ConfigError);

#undef CARNOT_DEFINE_ERROR

}  // namespace carnot
