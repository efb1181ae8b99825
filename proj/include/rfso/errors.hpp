#pragma once

#include <stdexcept>
#include <string>

namespace rfso {

/// Requested evaluation is outside what the implemented numerics support
/// (e.g. a Meijer-G parameter class the evaluator does not cover).
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to reach its configured tolerance.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Config-file problem; message names the offending section/key.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rfso
