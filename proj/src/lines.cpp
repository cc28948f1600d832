#include <cerrno>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "streamlet/detail/emitters.hpp"
#include "streamlet/errors.hpp"

namespace streamlet::detail {
namespace {

// Structural UTF-8 validation: lead/continuation shapes, overlong forms,
// surrogates, and the U+10FFFF ceiling.
bool is_valid_utf8(const std::string& s) {
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    std::size_t n = s.size();
    std::size_t i = 0;
    while (i < n) {
        unsigned char b = p[i];
        if (b < 0x80) {
            ++i;
            continue;
        }
        int len;
        unsigned cp;
        if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp = b & 0x1Fu;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp = b & 0x0Fu;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp = b & 0x07u;
        } else {
            return false;
        }
        if (i + static_cast<std::size_t>(len) > n) return false;
        for (int k = 1; k < len; ++k) {
            unsigned char c = p[i + static_cast<std::size_t>(k)];
            if ((c & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (c & 0x3Fu);
        }
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += static_cast<std::size_t>(len);
    }
    return true;
}

class FileLinesEmitter final : public Emitter<std::string> {
  public:
    explicit FileLinesEmitter(const std::filesystem::path& path)
        : path_(path.string()), stream_(path, std::ios::in | std::ios::binary) {
        if (!stream_.is_open()) {
            throw FileError("cannot open '" + path_ + "': " + std::strerror(errno));
        }
    }

    std::int64_t prepare() override {
        std::string line;
        while (next_line(line)) buffer_.push_back(std::move(line));
        return static_cast<std::int64_t>(buffer_.size());
    }

    void emit_range(ChunkRange range, const Sink<std::string>& sink) override {
        for (std::int64_t i = range.begin; i < range.end; ++i) {
            sink(buffer_[static_cast<std::size_t>(i)]);
        }
    }

    void emit_all(const Sink<std::string>& sink) override {
        std::string line;
        while (next_line(line)) sink(line);
    }

  private:
    // Reads one record, stripping "\n" or "\r\n". False at clean EOF.
    bool next_line(std::string& line) {
        if (!std::getline(stream_, line)) {
            if (stream_.bad()) {
                throw FileError("error reading '" + path_ + "'");
            }
            return false;
        }
        ++line_number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_valid_utf8(line)) {
            throw EncodingError("invalid UTF-8 in '" + path_ + "' at line " +
                                std::to_string(line_number_));
        }
        return true;
    }

    std::string path_;
    std::ifstream stream_;
    std::vector<std::string> buffer_;
    std::int64_t line_number_ = 0;
};

}  // namespace

EmitterPtr<std::string> open_file_lines(const std::filesystem::path& path) {
    return std::make_shared<FileLinesEmitter>(path);
}

}  // namespace streamlet::detail
