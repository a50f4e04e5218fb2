#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Base class for all errors raised by the engine. Subclasses carry the
// machine-readable code used in CLI error reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("DivisionByZero", w) {}
};
struct ChartMismatch : Error {
    explicit ChartMismatch(const std::string& w) : Error("ChartMismatch", w) {}
};
struct DenominatorZero : Error {
    explicit DenominatorZero(const std::string& w) : Error("DenominatorZero", w) {}
};
struct SingularGauge : Error {
    explicit SingularGauge(const std::string& w) : Error("SingularGauge", w) {}
};
struct SingularMobius : Error {
    explicit SingularMobius(const std::string& w) : Error("SingularMobius", w) {}
};
struct DegenerateSubstitution : Error {
    explicit DegenerateSubstitution(const std::string& w) : Error("DegenerateSubstitution", w) {}
};
struct NonGeneric : Error {
    explicit NonGeneric(const std::string& w) : Error("NonGeneric", w) {}
};
struct CollidingPoles : Error {
    explicit CollidingPoles(const std::string& w) : Error("CollidingPoles", w) {}
};
struct HigherOrderPole : Error {
    explicit HigherOrderPole(const std::string& w) : Error("HigherOrderPole", w) {}
};
struct SingularConjugator : Error {
    explicit SingularConjugator(const std::string& w) : Error("SingularConjugator", w) {}
};
struct PolesTooClose : Error {
    explicit PolesTooClose(const std::string& w) : Error("PolesTooClose", w) {}
};
struct StepUnderflow : Error {
    explicit StepUnderflow(const std::string& w) : Error("StepUnderflow", w) {}
};
struct ToleranceNotMet : Error {
    explicit ToleranceNotMet(const std::string& w) : Error("ToleranceNotMet", w) {}
};
struct NoDiagonalizableGenerator : Error {
    explicit NoDiagonalizableGenerator(const std::string& w) : Error("NoDiagonalizableGenerator", w) {}
};
struct PoleCollision : Error {
    explicit PoleCollision(const std::string& w) : Error("PoleCollision", w) {}
};
struct DegreeDrop : Error {
    explicit DegreeDrop(const std::string& w) : Error("DegreeDrop", w) {}
};
struct SingularJacobian : Error {
    explicit SingularJacobian(const std::string& w) : Error("SingularJacobian", w) {}
};
struct LabelSwap : Error {
    explicit LabelSwap(const std::string& w) : Error("LabelSwap", w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

}  // namespace forge
