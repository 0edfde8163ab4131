#include "oracle.hpp"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <openssl/evp.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace quintessa {

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        fail(errc::internal, "sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string OracleClient::default_cache_path()
{
    if (const char* env = std::getenv("QUINTESSA_ORACLE_CACHE")) return env;
    return ".quintessa-oracle-cache";
}

int OracleClient::default_timeout_ms()
{
    if (const char* env = std::getenv("QUINTESSA_ORACLE_TIMEOUT_MS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 600000;
}

OracleClient::OracleClient(std::string command, std::string cache_path, int timeout_ms)
    : command_(std::move(command)), cache_path_(std::move(cache_path)), timeout_ms_(timeout_ms)
{
    if (timeout_ms_ <= 0) timeout_ms_ = default_timeout_ms();
}

OracleClient::~OracleClient()
{
    shutdown();
}

void OracleClient::load_cache_once()
{
    if (cache_loaded_) return;
    cache_loaded_ = true;
    if (cache_path_.empty()) return;
    std::ifstream in(cache_path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        auto sp = line.find(' ');
        if (sp == std::string::npos || sp == 0) continue;
        cache_[line.substr(0, sp)] = line.substr(sp + 1);
    }
}

void OracleClient::remember(const std::string& request, const std::string& line)
{
    cache_[sha256_hex(request)] = line;
    if (cache_path_.empty()) return;
    std::string tmp = cache_path_ + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        for (const auto& [key, value] : cache_) out << key << ' ' << value << '\n';
    }
    if (std::rename(tmp.c_str(), cache_path_.c_str()) != 0) std::remove(tmp.c_str());
}

bool OracleClient::ensure_started()
{
    if (dead_ || command_.empty()) return false;
    if (pid_ > 0) return true;

    // a vanished child would otherwise turn our next write into SIGPIPE
    static std::once_flag once;
    std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });

    int to_child[2] = {-1, -1};
    int from_child[2] = {-1, -1};
    if (::pipe(to_child) != 0) { dead_ = true; return false; }
    if (::pipe(from_child) != 0) {
        ::close(to_child[0]); ::close(to_child[1]);
        dead_ = true;
        return false;
    }

    pid_t pid = ::fork();
    if (pid < 0) {
        ::close(to_child[0]); ::close(to_child[1]);
        ::close(from_child[0]); ::close(from_child[1]);
        dead_ = true;
        return false;
    }
    if (pid == 0) {
        ::dup2(to_child[0], STDIN_FILENO);
        ::dup2(from_child[1], STDOUT_FILENO);
        ::close(to_child[0]); ::close(to_child[1]);
        ::close(from_child[0]); ::close(from_child[1]);
        ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    ::close(to_child[0]);
    ::close(from_child[1]);
    pid_ = pid;
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
    return true;
}

void OracleClient::shutdown()
{
    if (in_fd_ >= 0) { ::close(in_fd_); in_fd_ = -1; }
    if (out_fd_ >= 0) { ::close(out_fd_); out_fd_ = -1; }
    if (pid_ > 0) {
        int status = 0;
        if (::waitpid(pid_, &status, WNOHANG) == 0) {
            ::kill(pid_, SIGTERM);
            ::usleep(20000);
            if (::waitpid(pid_, &status, WNOHANG) == 0) {
                ::kill(pid_, SIGKILL);
                ::waitpid(pid_, &status, 0);
            }
        }
        pid_ = -1;
    }
    dead_ = true;
}

bool OracleClient::write_all(const std::string& data)
{
    size_t off = 0;
    while (off < data.size()) {
        ssize_t put = ::write(in_fd_, data.data() + off, data.size() - off);
        if (put < 0) {
            if (errno == EINTR) continue;
            return false;
        }
        off += static_cast<size_t>(put);
    }
    return true;
}

std::optional<std::string> OracleClient::read_line()
{
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::milliseconds(timeout_ms_);
    for (;;) {
        auto nl = buf_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buf_.substr(0, nl);
            buf_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
        auto now = clock::now();
        if (now >= deadline) return std::nullopt;
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
        struct pollfd pfd{out_fd_, POLLIN, 0};
        int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 200)));
        if (rc < 0) {
            if (errno == EINTR) continue;
            return std::nullopt;
        }
        if (rc == 0) continue;
        char tmp[4096];
        ssize_t got = ::read(out_fd_, tmp, sizeof tmp);
        if (got <= 0) return std::nullopt;
        buf_.append(tmp, static_cast<size_t>(got));
    }
}

namespace {

OracleResult parse_response(const std::string& line)
{
    if (line == "OK") return {true, ""};
    if (line.rfind("OK ", 0) == 0) return {true, line.substr(3)};
    if (line == "ERR") return {false, ""};
    if (line.rfind("ERR ", 0) == 0) return {false, line.substr(4)};
    fail(errc::oracle_protocol, "malformed oracle response: \"" + line + "\"");
}

}

std::optional<OracleResult> OracleClient::query(const std::string& request)
{
    if (request.empty() || request.find('\n') != std::string::npos)
        fail(errc::invalid_argument, "oracle request must be a single nonempty line");
    std::lock_guard<std::mutex> lock(mu_);
    load_cache_once();
    if (auto hit = cache_.find(sha256_hex(request)); hit != cache_.end())
        return parse_response(hit->second);
    if (!ensure_started()) return std::nullopt;
    if (!write_all(request + "\n")) {
        shutdown();
        return std::nullopt;
    }
    auto line = read_line();
    if (!line) {
        // timeout or the process went away; either way it is unusable now
        shutdown();
        return std::nullopt;
    }
    OracleResult res = parse_response(*line);
    // ERR may be transient (missing table, resource limit), so only OK
    // lines are worth pinning into the persistent cache
    if (res.ok) remember(request, *line);
    return res;
}

}
