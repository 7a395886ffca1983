#pragma once

#include <stdexcept>
#include <string>

namespace xlstr {

// Base of every library error. CLI exit codes: ConfigError -> 1,
// DataError (and children) -> 2, StageError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

// Wraps any pipeline-stage failure with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("stage=" + stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

#define XLSTR_DEFINE_ERROR(name, base)  \
  class name : public base {            \
   public:                              \
    using base::base;                   \
  }

// langsim
XLSTR_DEFINE_ERROR(UnknownLanguage, DataError);
XLSTR_DEFINE_ERROR(MismatchedFeatureKind, Error);
XLSTR_DEFINE_ERROR(EmptyOverlap, Error);
XLSTR_DEFINE_ERROR(ZeroNorm, Error);
XLSTR_DEFINE_ERROR(UnknownFeature, DataError);
XLSTR_DEFINE_ERROR(MalformedMatrixFile, DataError);
XLSTR_DEFINE_ERROR(TargetNotCovered, DataError);

// corpus
XLSTR_DEFINE_ERROR(MalformedRow, DataError);
XLSTR_DEFINE_ERROR(ScoreOutOfRange, DataError);
XLSTR_DEFINE_ERROR(DuplicatePairId, DataError);
XLSTR_DEFINE_ERROR(EncodingError, DataError);
XLSTR_DEFINE_ERROR(NoSourcesSelected, DataError);
XLSTR_DEFINE_ERROR(MissingDataset, DataError);

// augment
XLSTR_DEFINE_ERROR(MissingCapability, DataError);
XLSTR_DEFINE_ERROR(TranslationFailure, Error);

// scorer
XLSTR_DEFINE_ERROR(EmptySentence, DataError);
XLSTR_DEFINE_ERROR(DimensionMismatch, Error);
XLSTR_DEFINE_ERROR(LengthMismatch, Error);
XLSTR_DEFINE_ERROR(EmptyBatch, Error);
XLSTR_DEFINE_ERROR(UnlabeledDev, DataError);
XLSTR_DEFINE_ERROR(NonFiniteLoss, Error);

// eval
XLSTR_DEFINE_ERROR(NonFiniteValue, Error);
XLSTR_DEFINE_ERROR(DegenerateInput, DataError);
XLSTR_DEFINE_ERROR(UnlabeledDataset, DataError);

#undef XLSTR_DEFINE_ERROR

}  // namespace xlstr
