#include "qlab/oracle.hpp"

namespace qlab {

CountingOracle::CountingOracle(GridInput hidden, bool count_repeats)
    : hidden_(std::move(hidden)),
      per_column_(static_cast<size_t>(hidden_.m) + 1, 0),
      seen_(hidden_.cells.size(), false),
      count_repeats_(count_repeats) {
    std::string why;
    if (!hidden_.well_formed(&why)) throw std::invalid_argument("CountingOracle: " + why);
}

CellEntry CountingOracle::query(CellRef c) {
    if (!cell_in_grid(c, hidden_.n, hidden_.m))
        throw std::invalid_argument("CountingOracle: query outside the grid");
    CellEntry e = hidden_.at(c);
    bool repeat = seen_[hidden_.index(c)];
    if (!repeat || count_repeats_) {
        transcript_.push_back({c, e});
        per_column_[static_cast<size_t>(c.col)] += 1;
        total_ += 1;
    }
    seen_[hidden_.index(c)] = true;
    return e;
}

GridInput CachedReader::snapshot_full() const {
    GridInput x = GridInput::blank(oracle_.family(), oracle_.n(), oracle_.m(), oracle_.k());
    if (cache_.size() != x.cells.size())
        throw std::logic_error("snapshot_full: grid not fully read");
    for (const auto& [cell, entry] : cache_) x.at(cell) = entry;
    return x;
}

}  // namespace qlab
