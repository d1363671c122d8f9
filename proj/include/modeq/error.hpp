#ifndef MODEQ_ERROR_HPP
#define MODEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace modeq {

// All library failures carry a stable machine-readable kind next to the
// human-readable message, so callers (and tests) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace modeq

#endif
