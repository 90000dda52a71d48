#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace teachdim {

// input could not be parsed (bad class file, bad descriptor syntax, ...)
struct parse_error : std::runtime_error {
    int line;  // 0 when no line applies
    parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// a configured size/complexity bound would be exceeded (exact solver asked for
// too large an instance, domain overflow in a coding, ...)
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// broken internal invariant; reaching this is a bug
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

// dimension value from the extended naturals; inf compares above every finite value
class Dim {
public:
    static Dim finite(std::uint64_t v) { return Dim(v); }
    static Dim infinite() { return Dim(kInf); }

    bool is_infinite() const { return raw_ == kInf; }
    std::uint64_t value() const {
        check(!is_infinite(), "Dim::value on infinite dimension");
        return raw_;
    }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(raw_); }

    friend bool operator==(Dim a, Dim b) { return a.raw_ == b.raw_; }
    friend bool operator!=(Dim a, Dim b) { return a.raw_ != b.raw_; }
    friend bool operator<(Dim a, Dim b) { return a.raw_ < b.raw_; }
    friend bool operator<=(Dim a, Dim b) { return a.raw_ <= b.raw_; }
    friend bool operator>(Dim a, Dim b) { return a.raw_ > b.raw_; }
    friend bool operator>=(Dim a, Dim b) { return a.raw_ >= b.raw_; }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    explicit Dim(std::uint64_t raw) : raw_(raw) {}
    std::uint64_t raw_;
};

}  // namespace teachdim
