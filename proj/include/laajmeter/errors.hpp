#pragma once

#include <stdexcept>
#include <string>

namespace laajmeter {

/// Base class for all simulation-domain errors.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Histogram weights are all-zero, negative, or malformed.
class InvalidDistributionError : public SimError {
public:
    using SimError::SimError;
};

/// The step probability solving the mean-shift equation falls outside [0,1]
/// (too much score mass sits at a scale boundary).
class InfeasibleStepError : public SimError {
public:
    InfeasibleStepError(const std::string& what, int chain_index, double p)
        : SimError(what), chain_index(chain_index), solved_p(p) {}
    int chain_index = 0;
    double solved_p = 0.0;
};

/// simple + sets * set_size does not add up to the point count.
class PartitionArithmeticError : public SimError {
public:
    using SimError::SimError;
};

/// Judge level outside [0, number of featured sets].
class InvalidJudgeLevelError : public SimError {
public:
    using SimError::SimError;
};

/// Too few samples, or zero variance with zero mean difference.
class DegenerateSampleError : public SimError {
public:
    using SimError::SimError;
};

/// Rank correlation undefined (tau-b denominator zero on an all-tied vector).
class UndefinedCorrelationError : public SimError {
public:
    using SimError::SimError;
};

/// Mismatched vector lengths.
class ArityError : public SimError {
public:
    using SimError::SimError;
};

/// Invalid scenario / experiment configuration.
class ConfigError : public SimError {
public:
    using SimError::SimError;
};

} // namespace laajmeter
