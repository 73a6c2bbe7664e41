#include "rsel/dataset.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>

namespace rsel {

namespace {

constexpr std::size_t kValueBytes = 8;

std::uint64_t read_le64(const char* p) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < 8; ++b)
        v |= std::uint64_t{static_cast<unsigned char>(p[b])} << (8 * b);
    return v;
}

void write_le64(std::string& out, std::uint64_t v) {
    for (std::size_t b = 0; b < 8; ++b)
        out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool looks_non_finite(std::string_view token) {
    std::string lower;
    for (char c : token)
        if (c != '+' && c != '-')
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return lower == "nan" || lower == "inf" || lower == "infinity" || lower.rfind("nan(", 0) == 0;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, "integer out of int64 range: '" + std::string(token) + "'");
    if (ec != std::errc{} || end != token.data() + token.size())
        throw ParseError(line, "not an int64 value: '" + std::string(token) + "'");
    return v;
}

double parse_float(std::string_view token, std::size_t line) {
    if (looks_non_finite(token))
        throw NonFiniteValueError(line, "non-finite float64 value '" + std::string(token) + "'");
    double v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw NonFiniteValueError(line, "float64 value out of range: '" + std::string(token) + "'");
    if (ec != std::errc{} || end != token.data() + token.size())
        throw ParseError(line, "not a float64 value: '" + std::string(token) + "'");
    if (!std::isfinite(v))
        throw NonFiniteValueError(line, "non-finite float64 value '" + std::string(token) + "'");
    return v;
}

template <typename T>
Dataset make_dataset(std::string name, ElementKind kind, std::vector<T> values) {
    return Dataset{std::move(name), kind, AnySequence(ValueSequence<T>(std::move(values)))};
}

template <typename T>
std::vector<T> decode_values(const char* data, std::size_t count, std::size_t first_ordinal) {
    std::vector<T> values(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::uint64_t raw = read_le64(data + t * kValueBytes);
        if constexpr (std::is_same_v<T, double>) {
            values[t] = std::bit_cast<double>(raw);
            if (!std::isfinite(values[t]))
                throw NonFiniteValueError(first_ordinal + t, "non-finite float64 value");
        } else {
            values[t] = std::bit_cast<std::int64_t>(raw);
        }
    }
    return values;
}

}  // namespace

std::string_view to_string(ElementKind kind) {
    return kind == ElementKind::int64 ? "int64" : "float64";
}

ElementKind parse_element_kind(std::string_view text) {
    if (text == "int64")
        return ElementKind::int64;
    if (text == "float64")
        return ElementKind::float64;
    throw std::invalid_argument("unknown element kind '" + std::string(text) + "' (expected int64 or float64)");
}

std::size_t Dataset::size() const {
    return std::visit([](const auto& s) { return s.size(); }, seq);
}

bool Dataset::same_contents(const Dataset& other) const {
    return kind == other.kind && seq.index() == other.seq.index() && encode_dataset(*this) == encode_dataset(other);
}

Ingested parse_text(std::string_view text, ElementKind kind, std::string name) {
    std::vector<std::int64_t> ints;
    std::vector<double> floats;
    std::size_t line = 0;
    while (!text.empty()) {
        ++line;
        const std::size_t nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const std::string_view token = trim(raw);
        if (token.empty())
            throw ParseError(line, "empty line");
        if (kind == ElementKind::int64)
            ints.push_back(parse_int(token, line));
        else
            floats.push_back(parse_float(token, line));
    }
    Ingested out;
    out.dataset = kind == ElementKind::int64 ? make_dataset(std::move(name), kind, std::move(ints))
                                             : make_dataset(std::move(name), kind, std::move(floats));
    if (out.dataset.size() == 0)
        out.warnings.emplace_back("input is empty; dataset has no elements");
    return out;
}

Ingested parse_binary(std::string_view bytes, ElementKind kind, std::string name) {
    const std::size_t count = bytes.size() / kValueBytes;
    if (bytes.size() % kValueBytes != 0)
        throw ParseError(count + 1, "binary input has " + std::to_string(bytes.size() % kValueBytes) +
                                        " trailing bytes (values are 8 bytes wide)");
    Ingested out;
    out.dataset = kind == ElementKind::int64
                      ? make_dataset(std::move(name), kind, decode_values<std::int64_t>(bytes.data(), count, 1))
                      : make_dataset(std::move(name), kind, decode_values<double>(bytes.data(), count, 1));
    if (count == 0)
        out.warnings.emplace_back("input is empty; dataset has no elements");
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("error reading '" + path.string() + "'");
    return data;
}

Ingested ingest(const std::filesystem::path& path, ElementKind kind, bool binary) {
    const std::string data = read_file(path);
    std::string name = path.stem().string();
    return binary ? parse_binary(data, kind, std::move(name)) : parse_text(data, kind, std::move(name));
}

std::string encode_dataset(const Dataset& dataset) {
    std::string out;
    out.reserve(kDatasetHeaderBytes + dataset.size() * kValueBytes);
    out.append(kDatasetMagic);
    out.push_back(static_cast<char>(kDatasetVersion));
    out.push_back(static_cast<char>(dataset.kind));
    write_le64(out, dataset.size());
    std::visit(
        [&](const auto& seq) {
            for (const auto v : seq.values())
                write_le64(out, std::bit_cast<std::uint64_t>(v));
        },
        dataset.seq);
    return out;
}

Dataset decode_dataset(std::string_view bytes, std::string name) {
    if (bytes.size() < kDatasetMagic.size() || bytes.substr(0, kDatasetMagic.size()) != kDatasetMagic)
        throw BadMagicError("bad magic: not an RSEL dataset file");
    if (bytes.size() > 4 && static_cast<unsigned char>(bytes[4]) != kDatasetVersion)
        throw UnsupportedVersionError(static_cast<unsigned char>(bytes[4]));
    if (bytes.size() > 5 && static_cast<unsigned char>(bytes[5]) > 1)
        throw UnknownKindError("unknown element kind byte " + std::to_string(static_cast<unsigned char>(bytes[5])));
    if (bytes.size() < kDatasetHeaderBytes)
        throw TruncatedDatasetError(kDatasetHeaderBytes, bytes.size());
    const auto kind_byte = static_cast<unsigned char>(bytes[5]);
    const auto kind = static_cast<ElementKind>(kind_byte);
    const std::uint64_t n = read_le64(bytes.data() + 6);
    const std::uint64_t payload = bytes.size() - kDatasetHeaderBytes;
    if (n > payload / kValueBytes || payload != n * kValueBytes) {
        if (n <= payload / kValueBytes)
            throw DatasetFormatError("dataset has " + std::to_string(payload - n * kValueBytes) +
                                     " trailing bytes after " + std::to_string(n) + " values");
        // Report in bytes; n is untrusted, so saturate rather than overflow.
        const std::uint64_t limit = (UINT64_MAX - kDatasetHeaderBytes) / kValueBytes;
        const std::uint64_t expected = n > limit ? UINT64_MAX : kDatasetHeaderBytes + n * kValueBytes;
        throw TruncatedDatasetError(expected, bytes.size());
    }
    const char* values = bytes.data() + kDatasetHeaderBytes;
    return kind == ElementKind::int64 ? make_dataset(std::move(name), kind, decode_values<std::int64_t>(values, n, 1))
                                      : make_dataset(std::move(name), kind, decode_values<double>(values, n, 1));
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
    const std::string bytes = encode_dataset(dataset);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("error writing '" + path.string() + "'");
}

Dataset load_dataset(const std::filesystem::path& path) {
    return decode_dataset(read_file(path), path.stem().string());
}

}  // namespace rsel
