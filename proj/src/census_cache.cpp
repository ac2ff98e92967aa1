#include "stdet/census_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "stdet/io.hpp"

namespace stdet {

namespace fs = std::filesystem;

FileCensusCache::FileCensusCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

fs::path FileCensusCache::default_dir() {
    if (const char* env = std::getenv("STDET_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "stdet";
    return fs::temp_directory_path() / "stdet-cache";
}

std::string FileCensusCache::key(const Ring& ring, uint32_t n, CensusEngine engine) {
    return "schema=" + std::to_string(kSchemaVersion) + ";desc=" + ring.name() + ";n=" +
           std::to_string(n) + ";engine=" + engine_name(engine);
}

fs::path FileCensusCache::entry_path(const std::string& key) const {
    return dir_ / (fnv1a64_hex(key) + ".csv");
}

std::optional<CountVector> FileCensusCache::load(const Ring& ring, uint32_t n, CensusEngine engine) const {
    const std::string k = key(ring, n, engine);
    std::ifstream in(entry_path(k));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "# stdet-cache v" + std::to_string(kSchemaVersion))
        return std::nullopt;
    if (!std::getline(in, line) || line != "# key: " + k) return std::nullopt;
    if (!std::getline(in, line) || line.rfind("# body_checksum: ", 0) != 0) return std::nullopt;
    std::string expected_sum = line.substr(std::string("# body_checksum: ").size());
    std::stringstream body;
    body << in.rdbuf();
    std::string body_str = body.str();
    if (fnv1a64_hex(body_str) != expected_sum) return std::nullopt;

    CountVector cv;
    cv.ring = ring.name();
    cv.n = n;
    cv.engine = engine;
    try {
        cv.counts = census_counts_from_csv(ring, body_str);
        validate_census(ring, cv);
    } catch (const std::exception&) {
        return std::nullopt; // corrupt entry is a miss, never an error
    }
    return cv;
}

void FileCensusCache::store(const Ring& ring, const CountVector& cv) {
    const std::string k = key(ring, cv.n, cv.engine);
    const std::string body = census_to_csv(ring, cv);
    std::string content = "# stdet-cache v" + std::to_string(kSchemaVersion) + "\n" +
                          "# key: " + k + "\n" +
                          "# body_checksum: " + fnv1a64_hex(body) + "\n" + body;

    fs::path target = entry_path(k);
    fs::path lock = target;
    lock += ".lock";
    int lock_fd = ::open(lock.c_str(), O_CREAT | O_RDWR, 0644);
    if (lock_fd >= 0) ::flock(lock_fd, LOCK_EX);

    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << content;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);

    if (lock_fd >= 0) {
        ::flock(lock_fd, LOCK_UN);
        ::close(lock_fd);
    }
}

} // namespace stdet
