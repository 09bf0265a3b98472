#pragma once

#include <compare>
#include <vector>

#include "rookh/partition.hpp"

namespace rookh {

// A standard Young tableau: entries strictly increase along rows and down
// columns, row lengths weakly decrease. Entries are distinct integers; for
// tableaux of permutations the content is {1, ..., N}.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int entry_count() const;
    // Sorted list of all entries.
    std::vector<int> content() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct TableauPair {
    StandardTableau p;
    StandardTableau q;

    // p and q must have the same shape.
    TableauPair(StandardTableau insertion, StandardTableau recording);

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

}  // namespace rookh
