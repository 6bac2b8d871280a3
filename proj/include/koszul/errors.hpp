#pragma once

#include <stdexcept>
#include <string>

namespace kg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define KOSZUL_ERROR(Name)                                                     \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name, what) {}             \
  }

KOSZUL_ERROR(EmptyExpression);
KOSZUL_ERROR(DomainError);
KOSZUL_ERROR(ChartMismatch);
KOSZUL_ERROR(SingularMetric);
KOSZUL_ERROR(RankDeficiencyAmbiguous);
KOSZUL_ERROR(InvalidStructure);
KOSZUL_ERROR(SpecMismatch);
KOSZUL_ERROR(UnknownFactor);
KOSZUL_ERROR(CaseMismatch);
KOSZUL_ERROR(UnknownFixture);
KOSZUL_ERROR(SpecError);

#undef KOSZUL_ERROR

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(std::string name)
      : Error("UnknownSymbol", "unknown symbol '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kg
