#include "teachdim/descriptor.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace teachdim {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

constexpr std::uint64_t kLcmCap = 1u << 20;

}  // namespace

SetDescriptor SetDescriptor::finite(std::vector<std::uint64_t> elements) {
    SetDescriptor d;
    d.kind_ = Kind::finite;
    d.listed_ = sorted_unique(std::move(elements));
    return d;
}

SetDescriptor SetDescriptor::cofinite(std::vector<std::uint64_t> excluded) {
    SetDescriptor d;
    d.kind_ = Kind::cofinite;
    d.listed_ = sorted_unique(std::move(excluded));
    return d;
}

SetDescriptor SetDescriptor::progressions(std::vector<Progression> parts) {
    if (parts.empty()) throw parse_error("progressions descriptor needs at least one progression");
    for (const auto& p : parts)
        if (p.step == 0) throw parse_error("progression step must be >= 1");
    SetDescriptor d;
    d.kind_ = Kind::progressions;
    d.parts_ = std::move(parts);
    return d;
}

bool SetDescriptor::contains(std::uint64_t x) const {
    switch (kind_) {
        case Kind::finite:
            return std::binary_search(listed_.begin(), listed_.end(), x);
        case Kind::cofinite:
            return !std::binary_search(listed_.begin(), listed_.end(), x);
        case Kind::progressions:
            for (const auto& p : parts_)
                if (x >= p.offset && (x - p.offset) % p.step == 0) return true;
            return false;
    }
    throw internal_error("bad descriptor kind");
}

bool SetDescriptor::is_infinite() const { return kind_ != Kind::finite; }

bool SetDescriptor::is_cofinite() const {
    switch (kind_) {
        case Kind::finite:
            return false;
        case Kind::cofinite:
            return true;
        case Kind::progressions: {
            // the union is eventually periodic mod lcm(steps): cofinite iff
            // every residue class is covered by some progression
            std::uint64_t l = 1;
            for (const auto& p : parts_) {
                l = std::lcm(l, p.step);
                if (l > kLcmCap)
                    throw bound_error("progression steps too large to classify");
            }
            for (std::uint64_t r = 0; r < l; ++r) {
                bool covered = false;
                for (const auto& p : parts_)
                    if (r % p.step == p.offset % p.step) {
                        covered = true;
                        break;
                    }
                if (!covered) return false;
            }
            return true;
        }
    }
    throw internal_error("bad descriptor kind");
}

std::vector<std::uint64_t> SetDescriptor::enumerated_by_stage(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    switch (kind_) {
        case Kind::finite:
            out.assign(listed_.begin(),
                       listed_.begin() + (long)std::min<std::uint64_t>(s, listed_.size()));
            return out;
        case Kind::cofinite:
            for (std::uint64_t v = 0; v < s; ++v)
                if (!std::binary_search(listed_.begin(), listed_.end(), v)) out.push_back(v);
            return out;
        case Kind::progressions: {
            // k-way merge of the progressions, deduplicated, first s values
            using Item = std::pair<std::uint64_t, std::size_t>;  // (value, part)
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            for (std::size_t i = 0; i < parts_.size(); ++i) heap.push({parts_[i].offset, i});
            while (out.size() < s && !heap.empty()) {
                auto [v, i] = heap.top();
                heap.pop();
                if (out.empty() || out.back() != v) out.push_back(v);
                heap.push({v + parts_[i].step, i});
            }
            return out;
        }
    }
    throw internal_error("bad descriptor kind");
}

std::vector<std::uint64_t> SetDescriptor::complement_below(std::uint64_t bound) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < bound; ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

std::vector<std::uint64_t> SetDescriptor::members_below(std::uint64_t bound) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < bound; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

std::uint64_t SetDescriptor::least_member_from(std::uint64_t from) const {
    switch (kind_) {
        case Kind::finite: {
            auto it = std::lower_bound(listed_.begin(), listed_.end(), from);
            if (it == listed_.end()) throw bound_error("finite set has no member at or above " +
                                                       std::to_string(from));
            return *it;
        }
        case Kind::cofinite: {
            std::uint64_t x = from;
            while (std::binary_search(listed_.begin(), listed_.end(), x)) ++x;
            return x;
        }
        case Kind::progressions: {
            std::uint64_t best = UINT64_MAX;
            for (const auto& p : parts_) {
                std::uint64_t v = p.offset;
                if (from > v) v += (from - p.offset + p.step - 1) / p.step * p.step;
                best = std::min(best, v);
            }
            return best;
        }
    }
    throw internal_error("bad descriptor kind");
}

std::uint64_t SetDescriptor::least_nonmember_from(std::uint64_t from) const {
    if (kind_ == Kind::cofinite) {
        auto it = std::lower_bound(listed_.begin(), listed_.end(), from);
        if (it == listed_.end())
            throw bound_error("cofinite set has every value at or above " + std::to_string(from));
        return *it;
    }
    // finite sets and eventually-periodic unions run out of members quickly
    std::uint64_t limit = from + 2;
    if (kind_ == Kind::finite) {
        limit += listed_.size();
    } else {
        std::uint64_t l = 1, maxoff = 0;
        for (const auto& p : parts_) {
            l = std::lcm(l, p.step);
            if (l > kLcmCap) throw bound_error("progression steps too large to classify");
            maxoff = std::max(maxoff, p.offset);
        }
        limit += 2 * l + maxoff;
    }
    for (std::uint64_t x = from; x < limit; ++x)
        if (!contains(x)) return x;
    throw bound_error("set has every value at or above " + std::to_string(from));
}

std::string SetDescriptor::str() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::finite:
        case Kind::cofinite:
            out << (kind_ == Kind::finite ? "finite:{" : "cofinite:{");
            for (std::size_t i = 0; i < listed_.size(); ++i)
                out << (i ? "," : "") << listed_[i];
            out << "}";
            return out.str();
        case Kind::progressions:
            out << "progressions:{";
            for (std::size_t i = 0; i < parts_.size(); ++i)
                out << (i ? "," : "") << "(" << parts_[i].step << "," << parts_[i].offset << ")";
            out << "}";
            return out.str();
    }
    throw internal_error("bad descriptor kind");
}

namespace {

std::uint64_t parse_number(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || !isdigit((unsigned char)text[pos]))
        throw parse_error("expected a number in descriptor '" + text + "'");
    std::uint64_t v = 0;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) {
        v = v * 10 + (std::uint64_t)(text[pos] - '0');
        ++pos;
    }
    return v;
}

}  // namespace

SetDescriptor SetDescriptor::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!isspace((unsigned char)ch)) text.push_back(ch);
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("descriptor needs the form kind:{...}, got '" + raw + "'");
    std::string head = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw parse_error("descriptor body must be {...}, got '" + raw + "'");
    body = body.substr(1, body.size() - 2);
    if (head == "finite" || head == "cofinite") {
        std::vector<std::uint64_t> vals;
        std::size_t pos = 0;
        while (pos < body.size()) {
            vals.push_back(parse_number(body, pos));
            if (pos < body.size()) {
                if (body[pos] != ',') throw parse_error("expected ',' in '" + raw + "'");
                ++pos;
            }
        }
        return head == "finite" ? finite(std::move(vals)) : cofinite(std::move(vals));
    }
    if (head == "progressions") {
        std::vector<Progression> parts;
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] != '(') throw parse_error("expected '(' in '" + raw + "'");
            ++pos;
            std::uint64_t step = parse_number(body, pos);
            if (pos >= body.size() || body[pos] != ',')
                throw parse_error("expected ',' inside progression in '" + raw + "'");
            ++pos;
            std::uint64_t offset = parse_number(body, pos);
            if (pos >= body.size() || body[pos] != ')')
                throw parse_error("expected ')' in '" + raw + "'");
            ++pos;
            parts.push_back({step, offset});
            if (pos < body.size()) {
                if (body[pos] != ',') throw parse_error("expected ',' in '" + raw + "'");
                ++pos;
            }
        }
        return progressions(std::move(parts));
    }
    throw parse_error("unknown descriptor kind '" + head + "'");
}

}  // namespace teachdim
