#pragma once

#include <stdexcept>
#include <string>

namespace mel {

// Base class for all library errors.
class MelError : public std::runtime_error {
public:
    explicit MelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Affine linear part is not invertible.
class SingularTransform : public MelError {
public:
    using MelError::MelError;
};

// plan_tiles precondition violated (overlap >= tile, nonpositive dims, ...).
class InvalidTiling : public MelError {
public:
    using MelError::MelError;
};

// Not enough WSIs (or patches) to satisfy the requested operation.
class InsufficientData : public MelError {
public:
    using MelError::MelError;
};

// Translation search window is empty or malformed.
class InvalidWindow : public MelError {
public:
    using MelError::MelError;
};

// Cell packing could not satisfy the requested density.
class PackingFailure : public MelError {
public:
    using MelError::MelError;
};

// Annotation mask has no foreground pixel; caller should fall back to the
// unweighted loss for that sample.
class EmptyAnnotation : public MelError {
public:
    using MelError::MelError;
};

// Sum of corrective weights is zero; the weighted loss is undefined.
class DegenerateWeights : public MelError {
public:
    using MelError::MelError;
};

// class_id outside the configured class range.
class UnknownClass : public MelError {
public:
    using MelError::MelError;
};

// Operands have mismatched spatial shapes.
class ShapeError : public MelError {
public:
    using MelError::MelError;
};

// Fleiss kappa denominator vanishes (unanimous single-category panel).
class UndefinedKappa : public MelError {
public:
    using MelError::MelError;
};

// Filesystem / decode / encode failure; message carries the path.
class IoError : public MelError {
public:
    using MelError::MelError;
};

// Bad or inconsistent configuration value.
class ConfigError : public MelError {
public:
    using MelError::MelError;
};

}  // namespace mel
