#pragma once

#include <stdexcept>
#include <string>

namespace fractalpile {

/// A build or usage request that cannot be satisfied (bad flags, bad
/// family/boundary combination, unknown vertex, missing data).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit (level growth, state table, step budget).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem-backed consistency check failed. These are hard failures:
/// they mean the engine produced something the underlying mathematics
/// forbids.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fractalpile
