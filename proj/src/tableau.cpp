#include "rookh/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookh {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty())
            throw std::invalid_argument("StandardTableau: empty row");
        if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size())
            throw std::invalid_argument("StandardTableau: row lengths must weakly decrease");
        for (size_t j = 0; j + 1 < rows_[i].size(); ++j)
            if (rows_[i][j] >= rows_[i][j + 1])
                throw std::invalid_argument("StandardTableau: rows must strictly increase");
        if (i > 0)
            for (size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i - 1][j] >= rows_[i][j])
                    throw std::invalid_argument("StandardTableau: columns must strictly increase");
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int StandardTableau::entry_count() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

std::vector<int> StandardTableau::content() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    return all;
}

TableauPair::TableauPair(StandardTableau insertion, StandardTableau recording)
    : p(std::move(insertion)), q(std::move(recording)) {
    if (p.shape() != q.shape())
        throw std::invalid_argument("TableauPair: shapes must agree");
}

}  // namespace rookh
