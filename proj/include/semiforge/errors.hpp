#ifndef SEMIFORGE_ERRORS_HPP_
#define SEMIFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semiforge {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define SEMIFORGE_DEFINE_ERROR(Name)       \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

  SEMIFORGE_DEFINE_ERROR(DimensionMismatch);
  SEMIFORGE_DEFINE_ERROR(ParseError);
  SEMIFORGE_DEFINE_ERROR(UnknownLetter);
  SEMIFORGE_DEFINE_ERROR(NonInvertibleGenerator);
  SEMIFORGE_DEFINE_ERROR(GroupNotFinite);
  SEMIFORGE_DEFINE_ERROR(MixedRankGenerators);
  SEMIFORGE_DEFINE_ERROR(NotSameScc);
  SEMIFORGE_DEFINE_ERROR(RankDropped);
  SEMIFORGE_DEFINE_ERROR(NotACycle);
  SEMIFORGE_DEFINE_ERROR(OrderCapExceeded);
  SEMIFORGE_DEFINE_ERROR(InfiniteSemigroup);

#undef SEMIFORGE_DEFINE_ERROR

  // A proven invariant failed to hold: always a bug, never bad input.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

#define SEMIFORGE_ENSURE(cond, what)                      \
  do {                                                    \
    if (!(cond)) {                                        \
      throw ::semiforge::InvariantViolation(              \
          std::string(what) + " [" #cond "]");            \
    }                                                     \
  } while (false)

}  // namespace semiforge

#endif  // SEMIFORGE_ERRORS_HPP_
