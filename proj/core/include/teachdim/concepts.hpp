#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "teachdim/errors.hpp"

namespace teachdim {

// a named concept over domain {0..n-1}; elements kept sorted and unique
struct Concept {
    std::string name;
    std::vector<std::uint64_t> elements;
};

// finite concept class.  Duplicate extensions are allowed and compare
// extensionally: concepts are grouped by extension and the first occurrence
// represents its group.
class ConceptClass {
public:
    ConceptClass(std::uint64_t domain_size, std::vector<Concept> concepts);

    std::uint64_t domain_size() const { return domain_size_; }
    std::size_t size() const { return concepts_.size(); }
    const Concept& at(std::size_t i) const { return concepts_[i]; }
    const std::vector<Concept>& concepts() const { return concepts_; }

    // index of the named concept, -1 when absent
    int find(const std::string& name) const;

    std::size_t group_of(std::size_t i) const { return group_of_[i]; }
    // first concept index of each group, ascending -- one per distinct extension
    const std::vector<std::size_t>& group_reps() const { return group_reps_; }
    std::size_t distinct_count() const { return group_reps_.size(); }
    bool same_extension(std::size_t i, std::size_t j) const {
        return group_of_[i] == group_of_[j];
    }

private:
    std::uint64_t domain_size_;
    std::vector<Concept> concepts_;
    std::vector<std::size_t> group_of_;
    std::vector<std::size_t> group_reps_;
};

enum class Label : std::uint8_t { negative = 0, positive = 1 };

struct LabeledExample {
    std::uint64_t element;
    Label label;
};

// contradiction-free labeled sample, sorted by element
struct Sample {
    std::vector<LabeledExample> items;
    std::size_t size() const { return items.size(); }
};

// throws internal_error if an element appears with both labels
Sample make_sample(const std::vector<std::uint64_t>& positives,
                   const std::vector<std::uint64_t>& negatives);

// label the given elements by membership in the extension
Sample label_by_membership(const std::vector<std::uint64_t>& extension,
                           const std::vector<std::uint64_t>& elements);

// T consistent with L: positives inside L, negatives outside
bool consistent(const std::vector<std::uint64_t>& extension, const Sample& sample);

// text format:
//   # comment
//   domain <n>
//   concept <name>: <e1> <e2> ...
// elements are normalized (sorted, deduped); names must be unique.
// A leading "# gadget ..." comment, when present, is reported via *manifest.
ConceptClass parse_class(std::istream& in, std::string* manifest = nullptr);
ConceptClass parse_class_file(const std::string& path, std::string* manifest = nullptr);
void emit_class(std::ostream& out, const ConceptClass& cls, const std::string& manifest = "");
std::string emit_class_string(const ConceptClass& cls, const std::string& manifest = "");

// disjoint union: concept F of family i becomes join(F, {i}) = {2x} u {2i+1},
// names tagged "<name>@<i>".  Throws bound_error when the join coding needs a
// domain larger than max_domain.
ConceptClass disjoint_union(const std::vector<ConceptClass>& families,
                            std::uint64_t max_domain);

}  // namespace teachdim
