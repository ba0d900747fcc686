#include "qglab/group.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qglab/errors.hpp"

namespace qglab {

FiniteGroup::FiniteGroup(Table table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
        for (std::size_t v : row)
            if (v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(ErrorKind::NotAGroup, "table is not associative");

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::NotAGroup, "no identity element");

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse_[a] == n) throw Error(ErrorKind::NotAGroup, "element without inverse");

    if (labels_.empty()) {
        for (std::size_t a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
    } else if (labels_.size() != n) {
        throw Error(ErrorKind::NotAGroup, "label count does not match order");
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t order) {
    Table t(order, std::vector<std::size_t>(order));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < order; ++a) {
        labels.push_back(std::to_string(a));
        for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3() {
    using Perm = std::array<int, 3>;
    const std::array<Perm, 6> perms = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
    const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    Table t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(t), labels);
}

std::vector<std::vector<std::size_t>> FiniteGroup::subgroups() const {
    // Adjoin one element at a time to known subgroups; every subgroup is
    // reached by adding its own elements in turn.
    std::set<std::vector<std::size_t>> found;
    found.insert({identity_});
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
        for (const auto& h : current)
            for (std::size_t g = 0; g < order(); ++g) {
                auto s = generated(h, {g});
                if (found.insert(s).second) grew = true;
            }
    }
    std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::size_t> FiniteGroup::generated(const std::vector<std::size_t>& a,
                                                const std::vector<std::size_t>& b) const {
    std::set<std::size_t> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    s.insert(identity_);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::size_t> cur(s.begin(), s.end());
        for (std::size_t x : cur)
            for (std::size_t y : cur)
                if (s.insert(table_[x][y]).second) grew = true;
    }
    return {s.begin(), s.end()};
}

}  // namespace qglab
