#pragma once

#include <string>
#include <vector>

#include "wreathgen/cyclotomic.hpp"
#include "wreathgen/numeric.hpp"

namespace wreathgen {

// Finite group given by its Cayley table.  Construction validates the group
// axioms (throws Error("not-a-group", ...)): exhaustive associativity up to
// order 48, randomized spot checks above.
class FiniteGroup {
public:
    static FiniteGroup from_cayley(std::vector<std::vector<int>> cayley);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int exponent() const { return exponent_; }
    int mul(int a, int b) const { return cayley_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int element_order(int a) const;
    const std::vector<std::vector<int>>& cayley() const { return cayley_; }

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    int exponent_ = 1;
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inverse_;
};

// Classes ordered by their minimal element; representative = minimal element.
struct ConjugacyClasses {
    std::vector<std::vector<int>> members;
    std::vector<int> representative;
    std::vector<int> size;
    std::vector<int> class_of;       // element -> class index
    std::vector<int> inverse_class;  // class -> class containing the inverses
    int identity_class = 0;

    int count() const { return static_cast<int>(members.size()); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// Rows = irreducibles (trivial character first), columns = conjugacy classes
// in the ConjugacyClasses order.
struct CharacterTable {
    std::vector<std::string> irrep_names;
    std::vector<std::vector<Cyclotomic>> values;

    int num_irreps() const { return static_cast<int>(values.size()); }
};

// Exact validation: trivial first row, integral positive dimensions, row and
// column orthogonality under class-size weighting, sum of squared dimensions.
// Throws Error("invalid-character-table", ...) naming the failing pair.
void validate_character_table(const FiniteGroup& g, const ConjugacyClasses& classes,
                              const CharacterTable& table);

// A validated bundle: everything downstream code needs about the base group.
class GroupData {
public:
    GroupData(std::string name, FiniteGroup group, CharacterTable table);

    const std::string& name() const { return name_; }
    const FiniteGroup& group() const { return group_; }
    const ConjugacyClasses& classes() const { return classes_; }
    const CharacterTable& table() const { return table_; }
    const CyclotomicField& field() const { return *field_; }

    int num_irreps() const { return table_.num_irreps(); }
    int num_classes() const { return classes_.count(); }
    const Cyclotomic& chi(int irrep, int cls) const {
        return table_.values[static_cast<size_t>(irrep)][static_cast<size_t>(cls)];
    }
    Int dim(int irrep) const;
    bool is_abelian() const;
    int irrep_index(const std::string& name) const;  // -1 if unknown

private:
    std::string name_;
    FiniteGroup group_;
    ConjugacyClasses classes_;
    CharacterTable table_;
    const CyclotomicField* field_;
};

// Built-in groups: trivial, z2..z6, klein, s3, and direct products spelled
// with 'x' ("z2xz2", "z3xs3", ...).  Throws Error("unknown-group", ...).
GroupData builtin_group(const std::string& name);

GroupData direct_product(const GroupData& a, const GroupData& b);

// Group-description file: "name:", "order:", "exponent:", "cayley:" followed
// by order^2 whitespace-separated indices, "character_table:" followed by one
// line per irreducible of comma-separated cyclotomic strings (columns in
// conjugacy-class order, classes sorted by minimal element index).
GroupData load_group_file(const std::string& path);

// Re-embeds a value of Q(zeta_M) into Q(zeta_N) for M | N.
Cyclotomic embed(const Cyclotomic& value, const CyclotomicField& target);

}  // namespace wreathgen
