#pragma once

#include <stdexcept>
#include <string>

namespace quintessa {

enum class errc {
    invalid_argument = 1,
    division_by_zero,
    degenerate,
    not_coprime,
    unsupported,
    parse_error,
    io_error,
    oracle_protocol,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace quintessa
