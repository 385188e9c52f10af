#pragma once

#include <stdexcept>
#include <string>

namespace quartwist {

// Error taxonomy. The CLI maps ParamError -> exit 2, TowerError -> exit 3,
// IoError -> exit 4; verification failures are ordinary return values.
struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedSpec : TowerError { using TowerError::TowerError; };
struct ZeroInverse : TowerError { using TowerError::TowerError; };
struct ReducibleModulus : TowerError { using TowerError::TowerError; };
struct TowerMismatch : TowerError { using TowerError::TowerError; };
struct CommonTowerRequired : TowerError { using TowerError::TowerError; };
struct NotAnAutomorphism : TowerError { using TowerError::TowerError; };
struct TowerMissingConstant : TowerError { using TowerError::TowerError; };
struct MissingGaloisData : TowerError { using TowerError::TowerError; };
struct CapExceeded : TowerError { using TowerError::TowerError; };

struct ZeroInput : ParamError { using ParamError::ParamError; };
struct ZeroForm : ParamError { using ParamError::ParamError; };
struct ZeroParameter : ParamError { using ParamError::ParamError; };
struct RestrictionViolated : ParamError { using ParamError::ParamError; };
struct RelationViolated : ParamError { using ParamError::ParamError; };
struct SquareM : ParamError { using ParamError::ParamError; };
struct DegenerateParameters : ParamError { using ParamError::ParamError; };
struct PolNotInClass : ParamError { using ParamError::ParamError; };
struct UnknownIndex : ParamError { using ParamError::ParamError; };
struct RepeatedAlpha : ParamError { using ParamError::ParamError; };
struct BadConjugation : ParamError { using ParamError::ParamError; };

} // namespace quartwist
