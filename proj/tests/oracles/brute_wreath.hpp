#pragma once

// Test-only oracle: explicit enumeration of small wreath products.  Conjugacy
// classes come from orbit computations on the actual elements, never from the
// type parametrization under test.

#include <map>
#include <vector>

#include "wreathgen/cyclotomic.hpp"
#include "wreathgen/group.hpp"
#include "wreathgen/wreath.hpp"

namespace oracle {

using wreathgen::Cyclotomic;
using wreathgen::GroupData;
using wreathgen::Int;
using wreathgen::Rat;
using wreathgen::WreathElement;

class BruteWreath {
public:
    BruteWreath(const GroupData& base, int n);

    const GroupData& base() const { return *base_; }
    int n() const { return n_; }
    const std::vector<WreathElement>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    int index_of(const WreathElement& w) const { return element_index_.at(w); }

    int num_classes() const { return static_cast<int>(class_members_.size()); }
    const std::vector<int>& class_members(int c) const {
        return class_members_[static_cast<size_t>(c)];
    }
    int class_of(int element) const { return class_of_[static_cast<size_t>(element)]; }

    // <a, b> = (1/|W|) sum_w a(w) conj(b(w)) for element-indexed value vectors
    Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;

private:
    const GroupData* base_;
    int n_;
    std::vector<WreathElement> elements_;
    std::map<WreathElement, int> element_index_;
    std::vector<std::vector<int>> class_members_;
    std::vector<int> class_of_;
};

}  // namespace oracle
