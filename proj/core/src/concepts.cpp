#include "teachdim/concepts.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace teachdim {

ConceptClass::ConceptClass(std::uint64_t domain_size, std::vector<Concept> concepts)
    : domain_size_(domain_size), concepts_(std::move(concepts)) {
    if (domain_size_ == 0) throw parse_error("domain size must be at least 1");
    if (concepts_.empty()) throw parse_error("a class needs at least one concept");
    std::map<std::string, int> seen_names;
    for (auto& c : concepts_) {
        std::sort(c.elements.begin(), c.elements.end());
        c.elements.erase(std::unique(c.elements.begin(), c.elements.end()), c.elements.end());
        if (!c.elements.empty() && c.elements.back() >= domain_size_)
            throw parse_error("concept '" + c.name + "' has element outside the domain");
        if (c.name.empty()) throw parse_error("concept with empty name");
        if (!seen_names.emplace(c.name, 1).second)
            throw parse_error("duplicate concept name '" + c.name + "'");
    }
    group_of_.resize(concepts_.size());
    std::map<std::vector<std::uint64_t>, std::size_t> by_extension;
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        auto [it, fresh] = by_extension.emplace(concepts_[i].elements, group_reps_.size());
        if (fresh) group_reps_.push_back(i);
        group_of_[i] = it->second;
    }
}

int ConceptClass::find(const std::string& name) const {
    for (std::size_t i = 0; i < concepts_.size(); ++i)
        if (concepts_[i].name == name) return (int)i;
    return -1;
}

Sample make_sample(const std::vector<std::uint64_t>& positives,
                   const std::vector<std::uint64_t>& negatives) {
    Sample s;
    for (std::uint64_t e : positives) s.items.push_back({e, Label::positive});
    for (std::uint64_t e : negatives) s.items.push_back({e, Label::negative});
    std::sort(s.items.begin(), s.items.end(),
              [](const LabeledExample& a, const LabeledExample& b) { return a.element < b.element; });
    for (std::size_t i = 0; i + 1 < s.items.size(); ++i)
        if (s.items[i].element == s.items[i + 1].element) {
            check(s.items[i].label == s.items[i + 1].label, "contradictory sample");
            s.items.erase(s.items.begin() + (long)i + 1);
            --i;
        }
    return s;
}

Sample label_by_membership(const std::vector<std::uint64_t>& extension,
                           const std::vector<std::uint64_t>& elements) {
    Sample s;
    for (std::uint64_t e : elements) {
        bool in = std::binary_search(extension.begin(), extension.end(), e);
        s.items.push_back({e, in ? Label::positive : Label::negative});
    }
    std::sort(s.items.begin(), s.items.end(),
              [](const LabeledExample& a, const LabeledExample& b) { return a.element < b.element; });
    s.items.erase(std::unique(s.items.begin(), s.items.end(),
                              [](const LabeledExample& a, const LabeledExample& b) {
                                  return a.element == b.element;
                              }),
                  s.items.end());
    return s;
}

bool consistent(const std::vector<std::uint64_t>& extension, const Sample& sample) {
    for (const auto& ex : sample.items) {
        bool in = std::binary_search(extension.begin(), extension.end(), ex.element);
        if (in != (ex.label == Label::positive)) return false;
    }
    return true;
}

ConceptClass parse_class(std::istream& in, std::string* manifest) {
    if (manifest) manifest->clear();
    std::string line;
    int line_no = 0;
    bool have_domain = false;
    std::uint64_t domain_size = 0;
    std::vector<Concept> concepts;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            std::string body = line.substr(start + 1);
            std::size_t b = body.find_first_not_of(" \t");
            if (manifest && manifest->empty() && b != std::string::npos &&
                body.compare(b, 6, "gadget") == 0)
                *manifest = body.substr(b);
            continue;
        }
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "domain") {
            if (have_domain) throw parse_error("repeated domain line", line_no);
            if (!(ls >> domain_size)) throw parse_error("domain line needs a size", line_no);
            std::string extra;
            if (ls >> extra) throw parse_error("trailing tokens after domain size", line_no);
            have_domain = true;
        } else if (head == "concept") {
            if (!have_domain) throw parse_error("concept before domain line", line_no);
            std::string name;
            ls >> name;
            if (name.empty()) throw parse_error("concept line needs a name", line_no);
            if (name.back() == ':') {
                name.pop_back();
            } else {
                std::string colon;
                if (!(ls >> colon) || colon != ":")
                    throw parse_error("expected ':' after concept name", line_no);
            }
            if (name.empty()) throw parse_error("concept line needs a name", line_no);
            Concept c;
            c.name = name;
            std::uint64_t e;
            while (ls >> e) c.elements.push_back(e);
            if (!ls.eof()) throw parse_error("bad element token", line_no);
            concepts.push_back(std::move(c));
        } else {
            throw parse_error("unknown directive '" + head + "'", line_no);
        }
    }
    if (!have_domain) throw parse_error("missing domain line");
    try {
        return ConceptClass(domain_size, std::move(concepts));
    } catch (const parse_error& e) {
        throw parse_error(e.what());
    }
}

ConceptClass parse_class_file(const std::string& path, std::string* manifest) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_class(in, manifest);
}

void emit_class(std::ostream& out, const ConceptClass& cls, const std::string& manifest) {
    if (!manifest.empty()) out << "# " << manifest << "\n";
    out << "domain " << cls.domain_size() << "\n";
    for (const auto& c : cls.concepts()) {
        out << "concept " << c.name << ":";
        for (std::uint64_t e : c.elements) out << " " << e;
        out << "\n";
    }
}

std::string emit_class_string(const ConceptClass& cls, const std::string& manifest) {
    std::ostringstream os;
    emit_class(os, cls, manifest);
    return os.str();
}

ConceptClass disjoint_union(const std::vector<ConceptClass>& families,
                            std::uint64_t max_domain) {
    check(!families.empty(), "disjoint_union of no families");
    std::uint64_t max_dom = 0;
    for (const auto& f : families) max_dom = std::max(max_dom, f.domain_size());
    std::uint64_t k = families.size();
    std::uint64_t cap = std::max(2 * (max_dom - 1), 2 * (k - 1) + 1) + 1;
    if (cap > max_domain)
        throw bound_error("disjoint_union: join coding needs domain " + std::to_string(cap) +
                          " > bound " + std::to_string(max_domain));
    std::vector<Concept> out;
    for (std::size_t i = 0; i < families.size(); ++i)
        for (const auto& c : families[i].concepts()) {
            Concept j;
            j.name = c.name + "@" + std::to_string(i);
            j.elements.reserve(c.elements.size() + 1);
            for (std::uint64_t x : c.elements) j.elements.push_back(2 * x);
            j.elements.push_back(2 * (std::uint64_t)i + 1);
            out.push_back(std::move(j));
        }
    return ConceptClass(cap, std::move(out));
}

}  // namespace teachdim
