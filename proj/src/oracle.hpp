#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <sys/types.h>

#include "error.hpp"

namespace quintessa {

// One round-trip answer from the external computer-algebra process.
// ok == true carries the payload after "OK"; ok == false carries the
// message after "ERR" (the oracle ran but could not answer).
struct OracleResult {
    bool ok = false;
    std::string payload;
};

std::string sha256_hex(const std::string& data);

// Client for a line-oriented subprocess oracle. The command is run once
// via /bin/sh -c and spoken to over its stdin/stdout; requests and
// responses are single lines. OK responses are cached persistently,
// keyed by sha256(request), so repeated runs never re-invoke the oracle
// for the same question. Cache writes go through a temp file and rename.
//
// query() returns nullopt when the oracle cannot be reached at all
// (no command, spawn failure, EOF, timeout); callers turn that into a
// SKIP, never a failure. A response line that is neither "OK ..." nor
// "ERR ..." throws errc::oracle_protocol with the raw payload attached.
class OracleClient {
public:
    explicit OracleClient(std::string command,
                          std::string cache_path = default_cache_path(),
                          int timeout_ms = default_timeout_ms());
    ~OracleClient();
    OracleClient(const OracleClient&) = delete;
    OracleClient& operator=(const OracleClient&) = delete;

    std::optional<OracleResult> query(const std::string& request);

    bool configured() const { return !command_.empty(); }

    // QUINTESSA_ORACLE_CACHE, default ".quintessa-oracle-cache";
    // an empty value disables caching.
    static std::string default_cache_path();
    // QUINTESSA_ORACLE_TIMEOUT_MS, default 600000 (ten minutes).
    static int default_timeout_ms();

private:
    void load_cache_once();
    void remember(const std::string& request, const std::string& line);
    bool ensure_started();
    void shutdown();
    bool write_all(const std::string& data);
    std::optional<std::string> read_line();

    std::string command_;
    std::string cache_path_;
    int timeout_ms_;
    std::map<std::string, std::string> cache_;
    bool cache_loaded_ = false;
    std::mutex mu_;
    pid_t pid_ = -1;
    int in_fd_ = -1;
    int out_fd_ = -1;
    bool dead_ = false;
    std::string buf_;
};

}
