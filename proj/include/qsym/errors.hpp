#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QSYM_DEFINE_ERROR(Name)         \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

QSYM_DEFINE_ERROR(DegreeMismatch);
QSYM_DEFINE_ERROR(BoundExceeded);
QSYM_DEFINE_ERROR(InvalidArgument);
QSYM_DEFINE_ERROR(NotASubgroup);
QSYM_DEFINE_ERROR(EvaluationNotPermutation);
QSYM_DEFINE_ERROR(NotAHopfMap);
QSYM_DEFINE_ERROR(NonSplitQuotient);
QSYM_DEFINE_ERROR(NonSemisimpleQuotient);
QSYM_DEFINE_ERROR(ClosureFailure);
QSYM_DEFINE_ERROR(InvalidCocycle);
QSYM_DEFINE_ERROR(TwistNotHopf);
QSYM_DEFINE_ERROR(PatternMismatch);
QSYM_DEFINE_ERROR(SignMismatch);
QSYM_DEFINE_ERROR(InfiniteCharacterSpace);
QSYM_DEFINE_ERROR(RelationFailure);
QSYM_DEFINE_ERROR(CountMismatch);
QSYM_DEFINE_ERROR(CharacterActionMismatch);
QSYM_DEFINE_ERROR(UnknownCheck);
QSYM_DEFINE_ERROR(ParseError);

#undef QSYM_DEFINE_ERROR

}  // namespace qsym
