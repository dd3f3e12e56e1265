#ifndef COAMOEBA_ERRORS_HPP
#define COAMOEBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coamoeba {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionNotZero : EngineError {
    using EngineError::EngineError;
};

struct UnknownObject : EngineError {
    using EngineError::EngineError;
};

struct NotComposable : EngineError {
    using EngineError::EngineError;
};

struct NotClosed : EngineError {
    using EngineError::EngineError;
};

struct WindowTooSmall : EngineError {
    using EngineError::EngineError;
};

struct NotFiniteIndex : EngineError {
    using EngineError::EngineError;
};

struct UnsupportedDimension : EngineError {
    using EngineError::EngineError;
};

struct SignInconsistency : EngineError {
    using EngineError::EngineError;
};

struct InducedProductIllDefined : EngineError {
    using EngineError::EngineError;
};

}  // namespace coamoeba

#endif
