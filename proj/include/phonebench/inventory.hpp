#ifndef PHONEBENCH_INVENTORY_HPP
#define PHONEBENCH_INVENTORY_HPP

#include <optional>
#include <string>
#include <vector>

namespace phonebench {

enum class PhonemeCategory { vowel, consonant, silence };

// Subgroup taxonomy: vowels split by rounding, consonants by manner of
// articulation, silence has no subgroup.
enum class PhonemeSubgroup {
    rounded,
    unrounded,
    affricate,
    approximant,
    fricative,
    nasal,
    plosive,
    trill,
    none,
};

const char* category_name(PhonemeCategory c);
const char* subgroup_name(PhonemeSubgroup s);
PhonemeCategory parse_category(const std::string& s);
PhonemeSubgroup parse_subgroup(const std::string& s);

struct PhonemeClass {
    std::string label;
    PhonemeCategory category = PhonemeCategory::consonant;
    PhonemeSubgroup subgroup = PhonemeSubgroup::none;
};

// Ordered label set for the classification task. Exactly one silence class;
// labels unique; every non-silence class carries a valid subgroup for its
// category.
class PhonemeInventory {
public:
    explicit PhonemeInventory(std::vector<PhonemeClass> classes);

    // The 33-class default: 10 vowels (8 unrounded, 2 rounded), 22 consonants
    // (1 affricate, 4 approximants, 4 fricatives, 3 nasals, 8 plosives,
    // 2 trills) and one silence class "SIL".
    static PhonemeInventory default_inventory();

    // TSV `label<TAB>category<TAB>subgroup`, one class per line, with header.
    static PhonemeInventory load_tsv(const std::string& path);
    void save_tsv(const std::string& path) const;

    const std::vector<PhonemeClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }

    bool contains(const std::string& label) const;
    // Index in declaration order, or nullopt.
    std::optional<std::size_t> index_of(const std::string& label) const;
    const PhonemeClass& at(std::size_t i) const { return classes_[i]; }

    std::size_t silence_index() const { return silence_index_; }

private:
    std::vector<PhonemeClass> classes_;
    std::size_t silence_index_ = 0;
};

}  // namespace phonebench

#endif  // PHONEBENCH_INVENTORY_HPP
