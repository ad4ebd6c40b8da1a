#pragma once

#include <stdexcept>
#include <string>

namespace dpcolor {

// Bad input, violated precondition, or an exceeded feasibility guard.
// CLI exit code 1.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// A checked claim failed at runtime. This signals a bug in the engine or
// in reconstructed data, never a property of valid input. CLI exit code 2.
class InternalConsistencyError : public std::runtime_error {
public:
    explicit InternalConsistencyError(const std::string& what, std::string trace_json = "")
        : std::runtime_error(what), trace(std::move(trace_json)) {}
    std::string trace;
};

} // namespace dpcolor
