#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qglab {

// A finite group given by its Cayley table; element 0 need not be the
// identity, it is located on construction.
class FiniteGroup {
public:
    using Table = std::vector<std::vector<std::size_t>>;

    // Throws Error(NotAGroup) unless the table is a group.
    explicit FiniteGroup(Table table, std::vector<std::string> labels = {});

    static FiniteGroup cyclic(std::size_t order);
    // S3 with elements e, (12), (13), (23), (123), (132); product is
    // composition (pq)(x) = p(q(x)).
    static FiniteGroup symmetric3();

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const Table& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Every subgroup as a sorted element list, ordered by (size, elements).
    std::vector<std::vector<std::size_t>> subgroups() const;
    // Smallest subgroup containing both (sorted).
    std::vector<std::size_t> generated(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const;

private:
    Table table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

}  // namespace qglab
