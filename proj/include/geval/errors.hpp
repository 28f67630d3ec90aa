#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geval {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingFileError : Error {
    explicit MissingFileError(const std::string& path)
        : Error("missing file: " + path), path(path) {}
    std::string path;
};

struct MalformedRecordError : Error {
    MalformedRecordError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct PairingViolationError : Error {
    explicit PairingViolationError(const std::string& image_group, std::size_t count)
        : Error("image group '" + image_group + "' has " + std::to_string(count) +
                " QA pairs, expected 2"),
          image_group(image_group), count(count) {}
    std::string image_group;
    std::size_t count;
};

struct DuplicateIdError : Error {
    explicit DuplicateIdError(const std::string& id)
        : Error("duplicate sample id: " + id), id(id) {}
    std::string id;
};

struct LexiconMissingError : Error {
    explicit LexiconMissingError(const std::string& path)
        : Error("tag lexicon not found: " + path), path(path) {}
    std::string path;
};

struct MalformedLexiconLineError : Error {
    MalformedLexiconLineError(std::size_t line, const std::string& what)
        : Error("lexicon line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct BackendUnreachableError : Error {
    using Error::Error;
};

struct BackendError : Error {
    BackendError(int status, const std::string& body)
        : Error("backend error: status " + std::to_string(status) +
                (body.empty() ? "" : ", body: " + body)),
          status(status), body(body) {}
    explicit BackendError(const std::string& what) : Error("backend error: " + what) {}
    int status = 0;
    std::string body;
};

struct FixtureMissError : Error {
    explicit FixtureMissError(const std::string& key)
        : Error("fixture miss: " + key), key(key) {}
    std::string key;
};

struct TimeoutError : Error {
    using Error::Error;
};

struct InvalidBoxError : Error {
    using Error::Error;
};

struct ZeroBaseError : Error {
    ZeroBaseError() : Error("percentage improvement needs a base score > 0") {}
};

struct EmptyCapabilityError : Error {
    explicit EmptyCapabilityError(const std::string& capability)
        : Error("no records tagged with capability '" + capability + "'"),
          capability(capability) {}
    std::string capability;
};

struct CacheCorruptError : Error {
    CacheCorruptError(std::size_t line, const std::string& what)
        : Error("cache line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Warnings go to stderr; kept behind one function so tools can silence them.
void log_warn(const std::string& message);
void set_warnings_enabled(bool enabled);

}  // namespace geval
