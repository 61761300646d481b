// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace spinnet {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A network violates a structural invariant (duplicate nodes, dangling
/// edge endpoints, non-positive lengths, ...).
class MalformedNetworkError : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined for the given input (e.g. zero variance).
class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

/// A time selector referred to a fidelity peak that does not exist in the
/// simulated window.
class NoPeakError : public Error {
 public:
  using Error::Error;
};

/// A dataset or network file failed to load; the message names the offending
/// row where applicable.
class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinnet
