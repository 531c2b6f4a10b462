#ifndef SNN_ERRORS_HPP
#define SNN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snn {

/// Malformed or inconsistent input data (files, streams, corpora).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: divergence, non-finite values, solver guard exceeded.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snn

#endif
