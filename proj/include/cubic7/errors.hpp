#pragma once

#include <stdexcept>
#include <string>

namespace cubic7 {

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CUBIC7_ERROR(Name)                                   \
    class Name : public MathError {                          \
    public:                                                  \
        explicit Name(const std::string& what)               \
            : MathError(std::string(#Name ": ") + what) {}   \
    }

CUBIC7_ERROR(FieldMismatch);
CUBIC7_ERROR(DivisionByZero);
CUBIC7_ERROR(NotRealEmbedding);
CUBIC7_ERROR(UnsupportedComposite);
CUBIC7_ERROR(ParseError);
CUBIC7_ERROR(DimensionMismatch);
CUBIC7_ERROR(ChartVanishes);
CUBIC7_ERROR(ClosureFailure);
CUBIC7_ERROR(SingularS);
CUBIC7_ERROR(NotInNormalizer);
CUBIC7_ERROR(NotSingular);
CUBIC7_ERROR(ParametrizationMismatch);
CUBIC7_ERROR(NotEven);
CUBIC7_ERROR(ModulusTooLarge);
CUBIC7_ERROR(NotUnimodular);
CUBIC7_ERROR(NormNotFour);
CUBIC7_ERROR(NonIntegralImage);
CUBIC7_ERROR(NotIsometry);
CUBIC7_ERROR(ParityViolation);
CUBIC7_ERROR(DeterminantMismatch);
CUBIC7_ERROR(NormNotOne);
CUBIC7_ERROR(UnknownSuite);

#undef CUBIC7_ERROR

}  // namespace cubic7
