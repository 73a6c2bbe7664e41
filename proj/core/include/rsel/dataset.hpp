#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rsel/value_sequence.hpp"

namespace rsel {

enum class ElementKind : std::uint8_t { int64 = 0, float64 = 1 };

std::string_view to_string(ElementKind kind);
ElementKind parse_element_kind(std::string_view text);

using AnySequence = std::variant<ValueSequence<std::int64_t>, ValueSequence<double>>;

/// A named value sequence with its element kind. float64 datasets hold only finite values.
struct Dataset {
    std::string name;
    ElementKind kind = ElementKind::int64;
    AnySequence seq;

    std::size_t size() const;

    /// Same kind and bit-identical values; the name is not compared.
    bool same_contents(const Dataset& other) const;
};

/// Malformed ingestion input. `line` is the 1-based text line, or the 1-based
/// element ordinal for binary input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NonFiniteValueError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Problems with a persisted dataset file.
class DatasetFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadMagicError : public DatasetFormatError {
public:
    using DatasetFormatError::DatasetFormatError;
};

class UnsupportedVersionError : public DatasetFormatError {
public:
    explicit UnsupportedVersionError(unsigned version)
        : DatasetFormatError("unsupported dataset format version " + std::to_string(version)), version_(version) {}

    unsigned version() const noexcept { return version_; }

private:
    unsigned version_;
};

class UnknownKindError : public DatasetFormatError {
public:
    using DatasetFormatError::DatasetFormatError;
};

class TruncatedDatasetError : public DatasetFormatError {
public:
    TruncatedDatasetError(std::uint64_t expected, std::uint64_t actual)
        : DatasetFormatError("truncated dataset: expected " + std::to_string(expected) + " bytes, found " +
                             std::to_string(actual)),
          expected_(expected),
          actual_(actual) {}

    std::uint64_t expected_bytes() const noexcept { return expected_; }
    std::uint64_t actual_bytes() const noexcept { return actual_; }

private:
    std::uint64_t expected_;
    std::uint64_t actual_;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Ingested {
    Dataset dataset;
    std::vector<std::string> warnings;
};

/// One value per line. A final newline is optional; any other empty line is an error.
Ingested parse_text(std::string_view text, ElementKind kind, std::string name = {});

/// Consecutive 8-byte little-endian values.
Ingested parse_binary(std::string_view bytes, ElementKind kind, std::string name = {});

Ingested ingest(const std::filesystem::path& path, ElementKind kind, bool binary);

/// Persisted layout: "RSEL", version byte 1, kind byte (0 int64, 1 float64),
/// u64 little-endian length n, then n little-endian 8-byte values.
inline constexpr std::string_view kDatasetMagic = "RSEL";
inline constexpr std::uint8_t kDatasetVersion = 1;
inline constexpr std::size_t kDatasetHeaderBytes = 4 + 1 + 1 + 8;

std::string encode_dataset(const Dataset& dataset);
Dataset decode_dataset(std::string_view bytes, std::string name = {});

void save_dataset(const Dataset& dataset, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace rsel
